#include "hiddensums/serialization.hpp"

#include <sstream>

namespace hiddensums {

std::string format_row(const Gf2Vector& v) {
  std::string s(v.dim(), '0');
  for (int i = 0; i < v.dim(); ++i)
    if (v.get(i)) s[i] = '1';
  return s;
}

Gf2Vector parse_row(const std::string& line) {
  if (line.empty() || line.size() > 64) throw ParseError("bad row width: '" + line + "'");
  Gf2Vector v = Gf2Vector::zero(static_cast<int>(line.size()));
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '1')
      v.set(static_cast<int>(i), true);
    else if (line[i] != '0')
      throw ParseError("row characters must be '0' or '1': '" + line + "'");
  }
  return v;
}

std::string format_matrix(const Gf2Matrix& m) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    out += format_row(m.row(r));
    out += '\n';
  }
  return out;
}

Gf2Matrix parse_matrix(const std::vector<std::string>& lines) {
  if (lines.empty()) throw ParseError("matrix needs at least one row");
  std::vector<Gf2Vector> rows;
  rows.reserve(lines.size());
  for (const auto& l : lines) rows.push_back(parse_row(l));
  for (const auto& r : rows)
    if (r.dim() != rows.front().dim()) throw ParseError("ragged matrix rows");
  return Gf2Matrix::from_rows(rows);
}

namespace {

void format_standard_body(std::ostringstream& out, const StandardHiddenSum& g) {
  out << "N " << g.dim() << "\n";
  out << "n " << g.head_dim() << "\n";
  out << "d " << g.tail_dim() << "\n";
  for (int i = 0; i < g.head_dim(); ++i) {
    out << "B" << (i + 1) << "\n";
    for (int j = 0; j < g.head_dim(); ++j)
      out << format_row(Gf2Vector(g.tail_dim(), g.block_row(i, j))) << "\n";
  }
}

}  // namespace

std::string format_group(const StandardHiddenSum& g) {
  std::ostringstream out;
  out << "hidden-sum v1\n";
  format_standard_body(out, g);
  out << "end\n";
  return out.str();
}

std::string format_group(const EmbeddedHiddenSum& g) {
  std::ostringstream out;
  out << "hidden-sum v1\n";
  format_standard_body(out, g.standard_form());
  if (!g.conjugator().is_identity()) {
    out << "g\n";
    for (int r = 0; r < g.conjugator().rows(); ++r)
      out << format_row(g.conjugator().row(r)) << "\n";
  }
  out << "end\n";
  return out.str();
}

EmbeddedHiddenSum parse_group(std::istream& in) {
  std::string line;
  auto next = [&]() -> std::string {
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return line;
    }
    throw ParseError("unexpected end of group document");
  };
  if (next() != "hidden-sum v1") throw ParseError("missing 'hidden-sum v1' header");

  auto field = [&](const std::string& name) -> int {
    std::string l = next();
    std::istringstream ls(l);
    std::string key;
    int value;
    if (!(ls >> key >> value) || key != name)
      throw ParseError("expected '" + name + " <int>', got '" + l + "'");
    return value;
  };
  const int N = field("N");
  const int n = field("n");
  const int d = field("d");
  if (N != n + d) throw ParseError("N != n + d");

  std::vector<word_t> free_rows(static_cast<size_t>(n) * (n - 1) / 2, 0);
  std::string tok = next();
  for (int i = 0; i < n; ++i) {
    if (tok != "B" + std::to_string(i + 1)) throw ParseError("expected block B" + std::to_string(i + 1));
    for (int j = 0; j < n; ++j) {
      Gf2Vector row = parse_row(next());
      if (row.dim() != d) throw ParseError("block row width differs from d");
      if (j == i) {
        if (!row.is_zero()) throw ParseError("diagonal block row must be zero");
      } else if (j > i) {
        free_rows[i * (2 * n - i - 1) / 2 + (j - i - 1)] = row.bits();
      } else if (free_rows[j * (2 * n - j - 1) / 2 + (i - j - 1)] != row.bits()) {
        throw ParseError("block rows violate the row symmetry");
      }
    }
    tok = next();
  }

  Gf2Matrix g = Gf2Matrix::identity(N);
  if (tok == "g") {
    std::vector<std::string> rows;
    for (int r = 0; r < N; ++r) rows.push_back(next());
    g = parse_matrix(rows);
    if (g.rows() != N || g.cols() != N) throw ParseError("conjugator shape mismatch");
    tok = next();
  }
  if (tok != "end") throw ParseError("expected 'end', got '" + tok + "'");
  return EmbeddedHiddenSum(StandardHiddenSum(N, d, std::move(free_rows)), std::move(g));
}

EmbeddedHiddenSum parse_group_text(const std::string& text) {
  std::istringstream in(text);
  return parse_group(in);
}

std::string format_count_report(const CountReportRow& row) {
  std::ostringstream out;
  out << "N=" << row.N << " d=" << row.d << " n=" << row.n
      << " variety_count=" << row.variety_count << " bound=" << row.bound
      << " gaussian_binomial=" << row.gaussian << " total=" << row.total;
  return out.str();
}

ExportedClassTable export_class_table(const ClassTable& table) {
  ExportedClassTable out;
  int index = 0;
  for (const auto& c : table.classes) {
    ++index;
    std::string id = "N" + std::to_string(table.N) + "-C" + std::to_string(index);
    out.rows.push_back({table.N, index, c.dim_u, c.size, id});
    out.representatives[id] = format_group(c.representative);
  }
  return out;
}

std::string format_class_table(const ExportedClassTable& t) {
  std::ostringstream out;
  out << "class-table v1\n";
  out << "N\tclass_index\tsize\tdim_u\trepresentative_id\n";
  for (const auto& r : t.rows)
    out << r.N << '\t' << r.class_index << '\t' << r.size << '\t' << r.dim_u << '\t'
        << r.representative_id << '\n';
  out << "end\n";
  return out.str();
}

std::string format_representatives(const ExportedClassTable& t) {
  std::ostringstream out;
  out << "representatives v1\n";
  for (const auto& r : t.rows) {
    out << "id " << r.representative_id << '\n';
    out << t.representatives.at(r.representative_id);
  }
  out << "end\n";
  return out.str();
}

ExportedClassTable parse_class_table(const std::string& table_text,
                                     const std::string& representatives_text) {
  ExportedClassTable out;
  std::istringstream in(table_text);
  std::string line;
  if (!std::getline(in, line) || line != "class-table v1")
    throw ParseError("missing 'class-table v1' header");
  if (!std::getline(in, line) || line.rfind("N\t", 0) != 0)
    throw ParseError("missing class table column header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line == "end") break;
    std::istringstream ls(line);
    ExportedClassTable::Row row;
    std::string size_text;
    if (!(ls >> row.N >> row.class_index >> size_text >> row.dim_u >> row.representative_id))
      throw ParseError("bad class table row: '" + line + "'");
    row.size = bigint(size_text);
    out.rows.push_back(std::move(row));
  }

  std::istringstream rin(representatives_text);
  if (!std::getline(rin, line) || line != "representatives v1")
    throw ParseError("missing 'representatives v1' header");
  while (std::getline(rin, line)) {
    if (line.empty()) continue;
    if (line == "end") break;
    if (line.rfind("id ", 0) != 0) throw ParseError("expected 'id <name>' in representatives");
    std::string id = line.substr(3);
    EmbeddedHiddenSum g = parse_group(rin);  // validates while consuming the document
    out.representatives[id] = format_group(g);
  }
  for (const auto& r : out.rows)
    if (!out.representatives.count(r.representative_id))
      throw ParseError("representative '" + r.representative_id + "' missing from sidecar");
  return out;
}

std::string format_cipher_spec(const ToyCipherSpec& spec) {
  std::ostringstream out;
  out << "toy-cipher v1\n";
  out << "sbox ";
  for (int i = 0; i < 8; ++i) out << int(spec.sbox()[i]);
  out << "\nlambda\n";
  for (int r = 0; r < 6; ++r) out << format_row(spec.mixing().row(r)) << "\n";
  out << "rounds " << spec.rounds() << "\n";
  out << "schedule " << schedule_name(spec.schedule()) << "\n";
  out << "end\n";
  return out.str();
}

ToyCipherSpec parse_cipher_spec(std::istream& in) {
  std::string line;
  auto next = [&]() -> std::string {
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return line;
    }
    throw ParseError("unexpected end of cipher spec");
  };
  if (next() != "toy-cipher v1") throw ParseError("missing 'toy-cipher v1' header");

  std::string sbox_line = next();
  if (sbox_line.rfind("sbox ", 0) != 0 || sbox_line.size() != 5 + 8)
    throw ParseError("expected 'sbox <8 hex digits>'");
  std::array<std::uint8_t, 8> sbox{};
  for (int i = 0; i < 8; ++i) {
    char c = sbox_line[5 + i];
    if (c < '0' || c > '7') throw ParseError("sbox digits must be 0..7");
    sbox[i] = static_cast<std::uint8_t>(c - '0');
  }

  if (next() != "lambda") throw ParseError("expected 'lambda'");
  std::vector<std::string> rows;
  for (int r = 0; r < 6; ++r) rows.push_back(next());
  Gf2Matrix lambda = parse_matrix(rows);

  std::string rounds_line = next();
  std::istringstream rs(rounds_line);
  std::string key;
  int rounds;
  if (!(rs >> key >> rounds) || key != "rounds") throw ParseError("expected 'rounds <int>'");

  std::string sched_line = next();
  std::istringstream ss(sched_line);
  std::string sname;
  if (!(ss >> key >> sname) || key != "schedule") throw ParseError("expected 'schedule <name>'");
  if (next() != "end") throw ParseError("expected 'end'");
  return ToyCipherSpec(sbox, std::move(lambda), rounds, schedule_from_name(sname));
}

ToyCipherSpec parse_cipher_spec_text(const std::string& text) {
  std::istringstream in(text);
  return parse_cipher_spec(in);
}

std::string format_attack_report(const Reconstruction& r, const DeductionReport& rep) {
  std::ostringstream out;
  out << "attack-report v1\n";
  out << "variant " << (r.variant == AttackVariant::cpa ? "cpa" : "cpa-cca") << "\n";
  out << "enc_queries " << rep.attack_enc_queries << "\n";
  out << "dec_queries " << rep.attack_dec_queries << "\n";
  out << "binary_row_ops " << r.binary_row_ops << "\n";
  out << "mismatches " << rep.mismatches << "\n";
  out << "points_checked " << rep.points_checked << "\n";
  out << "verification_queries " << rep.verification_queries << "\n";
  out << "M\n" << format_matrix(r.M);
  out << "M_inv\n" << format_matrix(r.M_inv);
  out << "t\n" << format_row(r.t) << "\n";
  out << "end\n";
  return out.str();
}

}  // namespace hiddensums

