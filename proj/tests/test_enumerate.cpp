#include "doctest.h"
#include "hiddensums/classify.hpp"
#include "hiddensums/enumerate.hpp"
#include "hiddensums/serialization.hpp"

using namespace hiddensums;

TEST_CASE("variety counts at small shapes") {
  CHECK(count_variety(2, 1) == 1);
  CHECK(count_variety(3, 1) == 0);
  CHECK(count_variety(3, 3) == 462);
  CHECK(count_variety(4, 1) == 28);
  CHECK(count_variety(4, 2) == 3360);
  CHECK(count_variety(5, 1) == 0);
  CHECK(enumerate_variety(2, 1).size() == 1);
  CHECK(enumerate_variety(3, 1).empty());
  CHECK(enumerate_variety(3, 3).size() == 462);
}

TEST_CASE("free-bit budget") {
  CHECK_THROWS_AS(count_variety(7, 2), BudgetExceeded);  // 42 free bits
  CHECK_THROWS_AS(for_each_variety(10, 1, [](const StandardHiddenSum&) {}), BudgetExceeded);
  CHECK_THROWS_AS(count_variety(1, 1), std::invalid_argument);
}

TEST_CASE("closed form at head dimension 2") {
  for (int d = 1; d <= 12; ++d) {
    bigint expected = (bigint(1) << d) - 1;
    CHECK(count_variety(2, d) == expected);
    CHECK(variety_upper_bound(2, d) == expected);  // bound is tight here
  }
}

TEST_CASE("upper bound evaluation and soundness") {
  CHECK(variety_upper_bound(4, 2) == 3969);
  CHECK(variety_upper_bound(4, 1) == 53);
  const std::vector<std::pair<int, int>> grid = {{2, 1}, {2, 4}, {2, 8}, {3, 1}, {3, 2}, {3, 3},
                                                 {3, 4}, {3, 5}, {3, 6}, {4, 1}, {4, 2}, {4, 3},
                                                 {5, 1}, {5, 2}, {6, 1}};
  for (auto [n, d] : grid) CHECK(count_variety(n, d) <= variety_upper_bound(n, d));
}

TEST_CASE("count matches enumeration over the budget grid") {
  const std::vector<std::pair<int, int>> grid = {{2, 1}, {2, 5}, {2, 10}, {3, 2}, {3, 4},
                                                 {3, 6}, {4, 1}, {4, 3},  {5, 2}, {6, 1}};
  for (auto [n, d] : grid) {
    std::uint64_t seen = 0;
    for_each_variety(n, d, [&](const StandardHiddenSum&) { ++seen; });
    CHECK(count_variety(n, d) == bigint(seen));
  }
}

TEST_CASE("totals over all tail subspaces") {
  CHECK(count_total(6, 4) == 9765);
  CHECK(count_total(5, 3) == 1085);
  CHECK(count_total(5, 2) == 6510);
  CHECK(count_total(5, 1) == 868);
  CHECK(count_total(4, 1) == 0);
  CHECK(count_total(6, 1) == 0);
}

TEST_CASE("closed forms for co-dimension 2 and 3") {
  CHECK(count_codim2(4) == 105);
  CHECK(count_codim2(5) == 1085);
  CHECK(count_codim3(6) == 644490);
  CHECK(count_codim3(5) == 6510);
  // agreement with the general counting route
  for (int N = 4; N <= 6; ++N) CHECK(count_codim2(N) == count_total(N, N - 2));
  for (int N = 4; N <= 6; ++N) CHECK(count_codim3(N) == count_total(N, N - 3));
}

TEST_CASE("every enumerated group is elementary abelian regular") {
  // exhaustive over the strata small enough to close
  const std::vector<std::pair<int, int>> grid = {{2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 1}, {4, 2}};
  for (auto [n, d] : grid) {
    for_each_variety(n, d, [&](const StandardHiddenSum& t) {
      GeneratedGroup g{t.dim(), t.basis_translations()};
      std::string why;
      bool ok = is_elementary_abelian_regular(g, &why);
      CHECK_MESSAGE(ok, "n=", n, " d=", d, ": ", why);
      // the enumeration by block shape loses nothing at these co-dimensions
      CHECK(normalized_by_translations(g));
      // exact tail: U has dimension d
      CHECK(validate(g).group->u_basis().size() == static_cast<size_t>(d));
    });
  }
}

TEST_CASE("embedded enumeration") {
  CHECK(enumerate_all(3, 1).size() == 7);
  CHECK(enumerate_all(4, 2).size() == 105);

  std::uint64_t count63 = 0;
  for_each_embedded(6, 3, kDefaultEmbeddedCap, [&](const EmbeddedHiddenSum&) { ++count63; });
  CHECK(bigint(count63) == count_codim3(6));

  CHECK_THROWS_AS(enumerate_all(6, 3, 1000), CapExceeded);
}

TEST_CASE("embedded groups carry the right fixed space") {
  for_each_embedded(4, 2, kDefaultEmbeddedCap, [&](const EmbeddedHiddenSum& e) {
    const word_t tail_mask = low_mask(4) & ~low_mask(2);
    for (const auto& u : e.u_basis()) {
      // u * g lies in the canonical tail
      CHECK(((u * e.conjugator()).bits() & ~tail_mask) == 0);
    }
  });
}

TEST_CASE("embedded enumeration is duplicate-free at dimension up to 5") {
  // the universe constructor rejects duplicate digests, so building it is
  // the distinctness check
  for (int N = 3; N <= 5; ++N)
    for (int d = 1; d <= N - 2; ++d) {
      StratumUniverse u = StratumUniverse::build(N, d);
      CHECK(bigint(u.size()) == count_total(N, d));
    }
}

TEST_CASE("count report record") {
  CountReportRow row = count_report(5, 3);
  CHECK(format_count_report(row) ==
        "N=5 d=3 n=2 variety_count=7 bound=7 gaussian_binomial=155 total=1085");
}
