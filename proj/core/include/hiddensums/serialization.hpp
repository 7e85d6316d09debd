#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hiddensums/attack.hpp"
#include "hiddensums/classify.hpp"
#include "hiddensums/enumerate.hpp"
#include "hiddensums/hidden_sum.hpp"
#include "hiddensums/tb_cipher.hpp"

namespace hiddensums {

// Row-string matrix format: one line per row, '0'/'1' characters, leftmost
// character = coordinate 1.
std::string format_row(const Gf2Vector& v);
Gf2Vector parse_row(const std::string& line);
std::string format_matrix(const Gf2Matrix& m);
Gf2Matrix parse_matrix(const std::vector<std::string>& lines);

// Group document:
//
//   hidden-sum v1
//   N 3
//   n 2
//   d 1
//   B1
//   0
//   1
//   B2
//   1
//   0
//   g          (optional; identity when absent)
//   ...rows...
//   end
std::string format_group(const EmbeddedHiddenSum& g);
std::string format_group(const StandardHiddenSum& g);
EmbeddedHiddenSum parse_group(std::istream& in);
EmbeddedHiddenSum parse_group_text(const std::string& text);

// One count-report record:
//   N=5 d=3 n=2 variety_count=7 bound=7 gaussian_binomial=155 total=1085
std::string format_count_report(const CountReportRow& row);

// Class table, tab-delimited with a header line, plus a sidecar document of
// serialized representatives keyed by representative_id.
struct ExportedClassTable {
  struct Row {
    int N, class_index, dim_u;
    bigint size;
    std::string representative_id;
  };
  std::vector<Row> rows;
  std::map<std::string, std::string> representatives;  // id -> group document
};

ExportedClassTable export_class_table(const ClassTable& table);
std::string format_class_table(const ExportedClassTable& t);
std::string format_representatives(const ExportedClassTable& t);
ExportedClassTable parse_class_table(const std::string& table_text,
                                     const std::string& representatives_text);

// Cipher spec document: sbox as 8 hex digits, mixing rows, round count,
// schedule name.
std::string format_cipher_spec(const ToyCipherSpec& spec);
ToyCipherSpec parse_cipher_spec(std::istream& in);
ToyCipherSpec parse_cipher_spec_text(const std::string& text);

std::string format_attack_report(const Reconstruction& r, const DeductionReport& rep);

}  // namespace hiddensums
