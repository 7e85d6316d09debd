// Command-line frontend: enumeration reports, classification tables, the
// trapdoor attack demo and the named verification suites.  Exit status 0
// means every embedded expectation was met.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "hiddensums/attack.hpp"
#include "hiddensums/classify.hpp"
#include "hiddensums/enumerate.hpp"
#include "hiddensums/parallel.hpp"
#include "hiddensums/reference_tables.hpp"
#include "hiddensums/serialization.hpp"
#include "hiddensums/tb_cipher.hpp"

using namespace hiddensums;

namespace {

int cmd_enumerate(int N, int d, bool count_only, bool emit, std::uint64_t cap,
                  const std::string& out_path) {
  if (count_only || !emit) {
    std::cout << format_count_report(count_report(N, d)) << "\n";
    if (!emit) return 0;
  }
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "cannot open " << out_path << "\n";
      return 2;
    }
    out = &file;
  }
  for_each_embedded(N, d, cap, [&](const EmbeddedHiddenSum& e) { *out << format_group(e); });
  return 0;
}

int cmd_classify(int N, bool allow_slow, const std::string& out_dir) {
  ClassTable table = classify_all(N, allow_slow);
  ExportedClassTable exported = export_class_table(table);
  std::cout << "N=" << N << " classes=" << table.classes.size() << "\n";
  for (const auto& row : exported.rows) {
    std::cout << "class " << row.class_index << ": size=" << row.size << " dim_u=" << row.dim_u
              << " representative=" << row.representative_id << "\n";
  }
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::ofstream(out_dir + "/classes.tsv") << format_class_table(exported);
    std::ofstream(out_dir + "/representatives.txt") << format_representatives(exported);
    std::cout << "wrote " << out_dir << "/classes.tsv and representatives.txt\n";
  }
  // regression contract against the known tables
  const auto& expected = reference_classification(N);
  if (table.classes.size() != expected.size()) {
    std::cerr << "class count differs from the known table\n";
    return 1;
  }
  for (size_t i = 0; i < expected.size(); ++i)
    if (table.classes[i].size != bigint(expected[i].size) ||
        table.classes[i].dim_u != expected[i].dim_u) {
      std::cerr << "class " << (i + 1) << " differs from the known table\n";
      return 1;
    }
  return 0;
}

int cmd_attack_demo(const std::string& spec_path, const std::string& key_text, std::uint64_t seed,
                    const std::string& variant_name, int rounds, const std::string& schedule,
                    const std::string& wrong_sum) {
  ToyCipherSpec spec = spec_path.empty()
                           ? ToyCipherSpec::calibrated(rounds, schedule_from_name(schedule))
                           : [&] {
                               std::ifstream in(spec_path);
                               if (!in) throw ParseError("cannot open " + spec_path);
                               return parse_cipher_spec(in);
                             }();

  Gf2Vector key = Gf2Vector::zero(6);
  if (key_text == "random") {
    std::mt19937_64 rng(seed);
    key = Gf2Vector(6, rng() & 63);
  } else {
    key = Gf2Vector(6, std::stoul(key_text, nullptr, 16) & 63);
  }

  const AttackVariant variant =
      variant_name == "cpa-cca" ? AttackVariant::cpa_cca : AttackVariant::cpa;
  EmbeddedHiddenSum hs = wrong_sum == "trivial"
                             ? EmbeddedHiddenSum::plain(StandardHiddenSum::translations(6))
                             : toy_hidden_sum();

  Oracle oracle([&spec, key](const Gf2Vector& v) { return spec.encrypt(key, v); },
                [&spec, key](const Gf2Vector& c) { return spec.decrypt(key, c); });
  Reconstruction r = mount_attack(oracle, hs, variant);
  DeductionReport rep = verify_global_deduction(oracle, r);
  std::cout << format_attack_report(r, rep);

  const std::uint64_t budget = attack_query_budget(6);
  bool ok = rep.mismatches == 0 && rep.attack_enc_queries == budget &&
            rep.attack_dec_queries == (variant == AttackVariant::cpa_cca ? budget : 0);
  return ok ? 0 : 1;
}

struct SuiteReport {
  int checks = 0, failed = 0;
  void item(const std::string& name, bool ok) {
    ++checks;
    if (!ok) ++failed;
    std::cout << (ok ? "ok " : "FAIL ") << name << "\n";
  }
  int finish() const {
    std::cout << checks - failed << "/" << checks << " properties hold\n";
    return failed ? 1 : 0;
  }
};

int verify_rings() {
  SuiteReport out;
  for (int N = 3; N <= 5; ++N) {
    int idx = 0;
    for (const auto& rep : reference_representatives(N)) {
      ++idx;
      ValidatedGroup g = *validate(rep).group;
      const word_t total = word_t{1} << N;
      bool comm = true, assoc = true, nil = true, splits = true;
      for (word_t x = 0; x < total; ++x)
        for (word_t y = 0; y < total; ++y) {
          Gf2Vector vx(N, x), vy(N, y);
          if (g.ring_product(vx, vy) != g.ring_product(vy, vx)) comm = false;
          if (g.circ(vx, vy) != vx + vy + g.ring_product(vx, vy)) splits = false;
          for (word_t z = 0; z < total; z += 1 + (N > 4))
            if (g.ring_product(g.ring_product(vx, vy), Gf2Vector(N, z)) !=
                g.ring_product(vx, g.ring_product(vy, Gf2Vector(N, z))))
              assoc = false;
          if (y == 0 && !g.ring_product(vx, vx).is_zero()) nil = false;
        }
      std::string tag = "N" + std::to_string(N) + "-rep" + std::to_string(idx);
      out.item(tag + " product commutative", comm);
      out.item(tag + " product associative", assoc);
      out.item(tag + " x*x = 0", nil);
      out.item(tag + " circle sum = x + y + x*y", splits);
    }
  }
  ValidatedGroup ext = *validate(build_exterior_group(7)).group;
  std::mt19937_64 rng(41);
  bool sampled = true;
  for (int t = 0; t < 2000; ++t) {
    Gf2Vector x(7, rng() & 127), y(7, rng() & 127), z(7, rng() & 127);
    if (ext.ring_product(x, y) != ext.ring_product(y, x)) sampled = false;
    if (ext.ring_product(ext.ring_product(x, y), z) !=
        ext.ring_product(x, ext.ring_product(y, z)))
      sampled = false;
  }
  out.item("dim-7 exterior group, sampled ring axioms", sampled);
  return out.finish();
}

int verify_counts() {
  SuiteReport out;
  const std::vector<std::pair<int, int>> grid = {{2, 1}, {2, 4}, {2, 8}, {3, 1}, {3, 2}, {3, 3},
                                                 {3, 4}, {4, 1}, {4, 2}, {4, 3}, {5, 1}, {5, 2},
                                                 {6, 1}};
  for (auto [n, d] : grid) {
    std::uint64_t seen = 0;
    for_each_variety(n, d, [&](const StandardHiddenSum&) { ++seen; });
    std::string tag = "(" + std::to_string(n) + "," + std::to_string(d) + ")";
    out.item("count = enumeration at " + tag, count_variety(n, d) == bigint(seen));
    out.item("count <= bound at " + tag, count_variety(n, d) <= variety_upper_bound(n, d));
    if (n == 2)
      out.item("bound tight at " + tag, count_variety(n, d) == variety_upper_bound(n, d));
  }
  out.item("total(5,3) = 1085", count_total(5, 3) == 1085);
  out.item("total(5,2) = 6510", count_total(5, 2) == 6510);
  out.item("total(6,4) = 9765", count_total(6, 4) == 9765);
  out.item("codim-2 closed form matches totals",
           count_codim2(4) == count_total(4, 2) && count_codim2(5) == count_total(5, 3) &&
               count_codim2(6) == count_total(6, 4));
  out.item("codim-3 closed form matches totals",
           count_codim3(5) == count_total(5, 2) && count_codim3(6) == count_total(6, 3));
  out.item("no dim-U = 1 groups at N = 4", count_variety(3, 1) == 0);
  return out.finish();
}

int verify_dim7() {
  SuiteReport out;
  GeneratedGroup ext = build_exterior_group(7);
  std::string why;
  bool valid = is_elementary_abelian_regular(ext, &why);
  out.item("exterior group is elementary abelian regular", valid);
  if (!valid) return out.finish();
  ValidatedGroup v = *validate(ext).group;
  auto u = v.u_basis();
  out.item("U = span{e7}", u.size() == 1 && u[0] == Gf2Vector::unit(7, 6));
  Gf2Matrix expected = parse_matrix(
      {"1000000", "0101000", "0010100", "0001000", "0000100", "0000011", "0000001"});
  out.item("kappa_{e1} matches the expected matrix bit for bit",
           v.kappa(Gf2Vector::unit(7, 0)) == expected);
  out.item("plain translations do not normalize the group", !v.normalized_by_translations());
  Gf2Vector e12 = v.ring_product(Gf2Vector::unit(7, 0), Gf2Vector::unit(7, 1));
  out.item("e1*e2*e3 = e7", v.ring_product(e12, Gf2Vector::unit(7, 2)) == Gf2Vector::unit(7, 6));
  return out.finish();
}

int verify_appendix(int N) {
  SuiteReport out;
  auto reps = reference_representatives(N);
  std::cout << reps.size() << " representatives at N=" << N << "\n";
  const auto& expected = reference_classification(N);
  out.item("one representative per class", reps.size() == expected.size());
  std::multiset<int> rep_dims, table_dims;
  int idx = 0;
  for (const auto& rep : reps) {
    ++idx;
    std::string why;
    bool valid = is_elementary_abelian_regular(rep, &why);
    out.item("representative " + std::to_string(idx) + " validates", valid);
    if (valid) rep_dims.insert(static_cast<int>(validate(rep).group->u_basis().size()));
  }
  for (const auto& c : expected) table_dims.insert(c.dim_u);
  out.item("dim U multiset matches the class table", rep_dims == table_dims);
  if (N <= 5)
    out.item("classes at this dimension are separated by dim U",
             std::set<int>(table_dims.begin(), table_dims.end()).size() == table_dims.size());
  return out.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hidden-sum toolkit: enumeration, classification and trapdoor attacks"};
  app.require_subcommand(1);

  int N = 0, d = 1, rounds = 5;
  bool count_only = false, emit = false, allow_slow = false;
  std::uint64_t cap = kDefaultEmbeddedCap, seed = 1;
  std::string out_path, out_dir, spec_path, key_text = "random", variant = "cpa";
  std::string schedule = "xor-round-index", wrong_sum, suite;

  auto* enumerate = app.add_subcommand("enumerate", "count or emit groups with dim U = d");
  enumerate->add_option("--N", N, "ambient dimension")->required();
  enumerate->add_option("--d", d, "dimension of U")->required();
  enumerate->add_flag("--count-only", count_only, "print the count report only");
  enumerate->add_flag("--emit", emit, "stream serialized groups");
  enumerate->add_option("--cap", cap, "materialization cap");
  enumerate->add_option("--out", out_path, "write groups to a file instead of stdout");

  auto* classify = app.add_subcommand("classify", "partition into conjugacy classes");
  classify->add_option("--N", N, "ambient dimension (3..6)")->required();
  classify->add_flag("--allow-slow", allow_slow, "enable the N = 6 run");
  classify->add_option("--out", out_dir, "directory for classes.tsv and representatives.txt");

  auto* attack = app.add_subcommand("attack-demo", "reconstruct the demo cipher");
  attack->add_option("--spec", spec_path, "cipher spec file (default: built-in calibrated)");
  attack->add_option("--key", key_text, "session key as hex, or 'random'");
  attack->add_option("--seed", seed, "seed for random keys");
  attack->add_option("--variant", variant, "cpa | cpa-cca")
      ->check(CLI::IsMember({"cpa", "cpa-cca"}));
  attack->add_option("--rounds", rounds, "round count for the built-in spec");
  attack->add_option("--schedule", schedule, "key schedule for the built-in spec")
      ->check(CLI::IsMember({"xor-round-index", "identity"}));
  attack->add_option("--wrong-sum", wrong_sum, "negative control: 'trivial' attacks with T+")
      ->check(CLI::IsMember({"trivial"}));

  auto* verify = app.add_subcommand("verify", "run a named property suite");
  verify->add_option("suite", suite, "rings | counts | dim7 | appendix")
      ->required()
      ->check(CLI::IsMember({"rings", "counts", "dim7", "appendix"}));
  int verify_n = 5;
  verify->add_option("--N", verify_n, "dimension for the appendix suite (3..6)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate) return cmd_enumerate(N, d, count_only, emit, cap, out_path);
    if (*classify) return cmd_classify(N, allow_slow, out_dir);
    if (*attack)
      return cmd_attack_demo(spec_path, key_text, seed, variant, rounds, schedule, wrong_sum);
    if (*verify) {
      if (suite == "rings") return verify_rings();
      if (suite == "counts") return verify_counts();
      if (suite == "dim7") return verify_dim7();
      return verify_appendix(verify_n);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
