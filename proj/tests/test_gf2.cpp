#include <random>
#include <set>

#include "doctest.h"
#include "hiddensums/gf2.hpp"
#include "hiddensums/serialization.hpp"

using namespace hiddensums;

namespace {

Gf2Matrix from_strings(const std::vector<std::string>& rows) { return parse_matrix(rows); }

}  // namespace

TEST_CASE("matrix product") {
  Gf2Matrix i3 = Gf2Matrix::identity(3);
  CHECK(i3 * i3 == i3);

  // linear parts of the two basis translations of the 3-dimensional class
  // representative with dim U = 1
  Gf2Matrix k1 = from_strings({"100", "011", "001"});
  Gf2Matrix k2 = from_strings({"101", "010", "001"});
  CHECK(k1 * k2 == from_strings({"101", "011", "001"}));

  // a permutation of two rows is an involution
  Gf2Matrix p = from_strings({"010", "100", "001"});
  CHECK(p * p == i3);

  CHECK_THROWS_AS(Gf2Matrix(2, 3) * Gf2Matrix(2, 3), DimensionMismatch);
}

TEST_CASE("vector-matrix action uses the row convention") {
  Gf2Matrix m = from_strings({"110", "010", "001"});
  CHECK(Gf2Vector::unit(3, 0) * m == parse_row("110"));
  CHECK(Gf2Vector(3, 0b101) * m == parse_row("110") + parse_row("001"));
}

TEST_CASE("inverse by Gauss-Jordan") {
  for (int n : {1, 2, 5, 8, 64}) {
    Gf2Matrix id = Gf2Matrix::identity(n);
    CHECK(inverse(id) == id);
  }
  // upper unitriangular 2x2 is an involution in characteristic 2
  Gf2Matrix u = from_strings({"11", "01"});
  CHECK(inverse(u) == u);

  Gf2Matrix singular(3, 3);
  singular.set(0, 0, true);
  singular.set(1, 0, true);
  CHECK_THROWS_AS(inverse(singular), SingularMatrix);
  CHECK(!try_inverse(singular).has_value());
}

TEST_CASE("rank") {
  CHECK(rank(Gf2Matrix(4, 4)) == 0);
  for (int n : {1, 3, 7, 64}) CHECK(rank(Gf2Matrix::identity(n)) == n);
  Gf2Matrix m = from_strings({"110", "011", "101"});  // row3 = row1 + row2
  CHECK(rank(m) == 2);
}

TEST_CASE("random invertible matrices satisfy a a^-1 = I") {
  std::mt19937_64 rng(0x5eed);
  for (int n : {2, 5, 9, 33, 64}) {
    for (int t = 0; t < 20; ++t) {
      Gf2Matrix a(n, n);
      for (int r = 0; r < n; ++r) a.set_row_bits(r, rng() & low_mask(n));
      auto inv = try_inverse(a);
      if (!inv) {
        CHECK(rank(a) < n);
        continue;
      }
      CHECK(a * *inv == Gf2Matrix::identity(n));
      CHECK(*inv * a == Gf2Matrix::identity(n));
    }
  }
}

TEST_CASE("rank equals rank of the transpose") {
  // exhaustive over all 3x3 matrices
  for (word_t bits = 0; bits < (word_t{1} << 9); ++bits) {
    Gf2Matrix m(3, 3);
    for (int r = 0; r < 3; ++r) m.set_row_bits(r, (bits >> (3 * r)) & 7);
    CHECK(rank(m) == rank(transpose(m)));
  }
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    int n = 4 + int(rng() % 5);
    Gf2Matrix m(n, n);
    for (int r = 0; r < n; ++r) m.set_row_bits(r, rng() & low_mask(n));
    CHECK(rank(m) == rank(transpose(m)));
  }
}

TEST_CASE("affine maps") {
  // tau_1 and tau_3 of the 3-bit cipher brick group
  AffineMap tau1{from_strings({"100", "010", "011"}), Gf2Vector::unit(3, 0)};
  AffineMap tau3{from_strings({"110", "010", "001"}), Gf2Vector::unit(3, 2)};
  CHECK(tau1(Gf2Vector::zero(3)) == Gf2Vector::unit(3, 0));
  CHECK(tau3(Gf2Vector::unit(3, 0)) == parse_row("111"));

  // the first translation of a group whose canonical basis is not a basis
  // for the induced sum: e2 tau_{e1} = e3
  AffineMap tau_e1{from_strings({"100", "101", "110"}), Gf2Vector::unit(3, 0)};
  CHECK(tau_e1(Gf2Vector::unit(3, 1)) == Gf2Vector::unit(3, 2));

  AffineMap round = compose(tau1, tau3);
  CHECK(round(Gf2Vector::zero(3)) == tau3(tau1(Gf2Vector::zero(3))));
  AffineMap back = inverse(round);
  for (word_t w = 0; w < 8; ++w) {
    Gf2Vector v(3, w);
    CHECK(back(round(v)) == v);
  }
}

TEST_CASE("gaussian binomial") {
  CHECK(gaussian_binomial(5, 0) == 1);
  CHECK(gaussian_binomial(3, 1) == 7);
  CHECK(gaussian_binomial(6, 3) == 1395);
  CHECK(gaussian_binomial(4, 2) == 35);
  CHECK(gaussian_binomial(6, 2) == 651);
  // symmetry [N d] = [N N-d]
  for (int N = 1; N <= 10; ++N)
    for (int d = 0; d <= N; ++d) CHECK(gaussian_binomial(N, d) == gaussian_binomial(N, N - d));
}

TEST_CASE("subspace enumeration") {
  CHECK(enumerate_subspaces(3, 1).size() == 7);
  CHECK(enumerate_subspaces(4, 2).size() == 35);

  auto whole = enumerate_subspaces(4, 4);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].to_tail == Gf2Matrix::identity(4));

  for (int N = 1; N <= 6; ++N) {
    for (int d = 1; d <= N; ++d) {
      std::set<std::vector<word_t>> seen;
      std::uint64_t count = 0;
      for_each_subspace(N, d, [&](const SubspaceFrame& f) {
        ++count;
        // canonical reduced-row-echelon key
        std::vector<Gf2Vector> reduced = rref_basis(f.basis);
        REQUIRE(reduced.size() == static_cast<size_t>(d));
        std::vector<word_t> key;
        for (const auto& v : reduced) key.push_back(v.bits());
        CHECK(seen.insert(key).second);
        // the frame map sends the subspace onto the canonical tail
        CHECK(is_invertible(f.to_tail));
        const word_t tail_mask = low_mask(N) & ~low_mask(N - d);
        for (const auto& v : f.basis) CHECK(((v * f.to_tail).bits() & ~tail_mask) == 0);
      });
      CHECK(bigint(count) == gaussian_binomial(N, d));
    }
  }
}

TEST_CASE("span tracker") {
  SpanTracker s(4);
  CHECK(s.insert(parse_row("1100")));
  CHECK(s.insert(parse_row("0110")));
  CHECK(!s.insert(parse_row("1010")));  // sum of the first two
  CHECK(s.contains(parse_row("1010")));
  CHECK(!s.contains(parse_row("0001")));
  CHECK(s.dim_span() == 2);
}
