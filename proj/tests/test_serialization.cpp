#include <random>

#include "doctest.h"
#include "hiddensums/serialization.hpp"

using namespace hiddensums;

TEST_CASE("row strings, leftmost character is coordinate 1") {
  Gf2Vector v = Gf2Vector::unit(4, 0);
  CHECK(format_row(v) == "1000");
  CHECK(parse_row("0110") == Gf2Vector(4, 0b0110));
  CHECK(parse_row(format_row(Gf2Vector(6, 0b101101))) == Gf2Vector(6, 0b101101));
  CHECK_THROWS_AS(parse_row("01x0"), ParseError);
  CHECK_THROWS_AS(parse_row(""), ParseError);
}

TEST_CASE("matrix strings") {
  Gf2Matrix m = parse_matrix({"10", "11"});
  CHECK(format_matrix(m) == "10\n11\n");
  CHECK_THROWS_AS(parse_matrix({"10", "110"}), ParseError);
}

TEST_CASE("group document grammar") {
  std::string doc =
      "hidden-sum v1\n"
      "N 3\n"
      "n 2\n"
      "d 1\n"
      "B1\n0\n1\nB2\n1\n0\n"
      "end\n";
  EmbeddedHiddenSum g = parse_group_text(doc);
  CHECK(g.standard_form() == StandardHiddenSum(3, 1, {1}));
  CHECK(format_group(g) == doc);

  CHECK_THROWS_AS(parse_group_text("hidden-sum v1\nN 3\nn 2\nd 2\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_group_text("nope\n"), ParseError);
  // diagonal row must be zero
  CHECK_THROWS_AS(parse_group_text("hidden-sum v1\nN 3\nn 2\nd 1\nB1\n1\n1\nB2\n1\n0\nend\n"),
                  ParseError);
  // symmetry between off-diagonal rows
  CHECK_THROWS_AS(parse_group_text("hidden-sum v1\nN 3\nn 2\nd 1\nB1\n0\n1\nB2\n0\n0\nend\n"),
                  ParseError);
}

TEST_CASE("translation group document has no blocks") {
  std::string doc = format_group(StandardHiddenSum::translations(4));
  EmbeddedHiddenSum g = parse_group_text(doc);
  CHECK(g.standard_form().is_translations());
  CHECK(format_group(g) == doc);
}

TEST_CASE("random group documents are stable under re-serialization") {
  std::mt19937_64 rng(404);
  for (int t = 0; t < 30; ++t) {
    int N = 4 + int(rng() % 3);
    int n = 2 + int(rng() % (N - 3));  // keeps d >= 2, so the variety is non-empty
    EmbeddedHiddenSum e(random_standard_hidden_sum(N, n, rng), random_invertible_matrix(N, rng));
    std::string doc = format_group(e);
    CHECK(format_group(parse_group_text(doc)) == doc);
  }
}
