#include <random>

#include "doctest.h"
#include "hiddensums/classify.hpp"
#include "hiddensums/serialization.hpp"
#include "hiddensums/tb_cipher.hpp"

using namespace hiddensums;

namespace {

std::array<BasisOrder, 6> all_orders() {
  return {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
}

std::vector<Gf2Vector> full_table(const std::function<Gf2Vector(const Gf2Vector&)>& f, int N) {
  std::vector<Gf2Vector> t;
  for (word_t w = 0; w < (word_t{1} << N); ++w) t.push_back(f(Gf2Vector(N, w)));
  return t;
}

}  // namespace

TEST_CASE("substitution box evaluation") {
  for (const auto& order : all_orders()) {
    SboxTable s = build_sbox(order);
    CHECK(s.bijective);
    CHECK(s.table[0] == 0);  // the polynomial has no constant term
    // the field element 1 maps to a^2 + a: locate both under this encoding
    word_t one = 0, a2a = 0;
    for (word_t v = 0; v < 8; ++v) {
      std::uint8_t elem = 0;
      for (int k = 0; k < 3; ++k)
        if ((v >> k) & 1) elem ^= (order[k] == 0 ? 1 : (order[k] == 1 ? 2 : 4));
      if (elem == 1) one = v;
      if (elem == 6) a2a = v;  // a^2 + a
    }
    CHECK(s.table[one] == a2a);
  }
  // frozen table for the natural order (1, a, a^2)
  SboxTable nat = build_sbox({0, 1, 2});
  CHECK(nat.table == std::array<std::uint8_t, 8>{0, 6, 3, 7, 4, 1, 5, 2});
}

TEST_CASE("wall invariance") {
  CHECK(!proper_mixing_check(Gf2Matrix::identity(6), WallStructure{6, 3, 2}));
  // block-diagonal: each brick's wall invariant
  Gf2Matrix block = Gf2Matrix::identity(6);
  block.set(0, 1, true);
  block.set(3, 4, true);
  CHECK(!proper_mixing_check(block, WallStructure{6, 3, 2}));
  CHECK(proper_mixing_check(toy_mixing_layer(), WallStructure{6, 3, 2}));
  CHECK(rank(toy_mixing_layer()) == 6);
}

TEST_CASE("brick group and its product") {
  GeneratedGroup brick = toy_brick_group();
  ValidatedGroup v = *validate(brick).group;
  auto u = v.u_basis();
  REQUIRE(u.size() == 1);
  CHECK(u[0] == Gf2Vector::unit(3, 1));  // fixed translations are spanned by e2

  // the standard form of the brick group is the 3-dimensional class
  // representative with blocks [0;1], [1;0]
  EmbeddedHiddenSum emb = to_embedded(v);
  CHECK(emb.standard_form() == StandardHiddenSum(3, 1, {1}));

  // and it coincides, as a map-set, with the member of the embedded
  // enumeration whose fixed space is span{e2}
  Digest128 brick_key = canonical_key(v).digest;
  int hits = 0;
  for (const auto& e : enumerate_all(3, 1))
    if (canonical_key(e).digest == brick_key) ++hits;
  CHECK(hits == 1);

  const EmbeddedHiddenSum& prod = toy_hidden_sum();
  CHECK(prod.dim() == 6);
  CHECK(prod.standard_form().tail_dim() == 2);
  SpanTracker span(6);
  for (const auto& b : prod.u_basis()) span.insert(b);
  CHECK(span.contains(Gf2Vector::unit(6, 1)));
  CHECK(span.contains(Gf2Vector::unit(6, 4)));

  // the brick-wise sum restricted to the first component is the brick sum
  for (word_t x = 0; x < 8; ++x)
    for (word_t y = 0; y < 8; ++y) {
      Gf2Vector lifted = prod.circ(Gf2Vector(6, x), Gf2Vector(6, y));
      CHECK(lifted == Gf2Vector(6, v.circ(Gf2Vector(3, x), Gf2Vector(3, y)).bits()));
    }
}

TEST_CASE("block-diagonal product of standard forms") {
  // translations times translations stays the translation group
  EmbeddedHiddenSum pp =
      product_group(StandardHiddenSum::translations(2), StandardHiddenSum::translations(3));
  CHECK(pp.standard_form().is_translations());
  CHECK(canonical_key(pp).digest ==
        canonical_key(EmbeddedHiddenSum::plain(StandardHiddenSum::translations(5))).digest);

  // the standard product route and the generated product route agree
  StandardHiddenSum rep(3, 1, {1});
  EmbeddedHiddenSum direct = product_group(rep, rep);
  GeneratedGroup gen_prod =
      product_group(GeneratedGroup{3, rep.basis_translations()},
                    GeneratedGroup{3, rep.basis_translations()});
  ValidatedGroup v = *validate(gen_prod).group;
  CHECK(canonical_key(direct).digest == canonical_key(v).digest);
  CHECK(direct.standard_form().head_dim() == 4);
  CHECK(direct.standard_form().tail_dim() == 2);
}

TEST_CASE("calibration finds a verifying encoding") {
  BasisOrder order = calibrate_encoding();
  SboxTable s = build_sbox(order);
  REQUIRE(s.bijective);

  ToyCipherSpec spec = ToyCipherSpec::calibrated();
  auto core = spec.round_core_table();
  auto pair = is_affine_wrt(core, toy_hidden_sum());
  REQUIRE(pair.has_value());
  CHECK(pair->t == toy_hidden_sum().coordinates(core[0]));

  // the plain translations are affine for the product sum as well
  for (int i = 0; i < 6; ++i) {
    Gf2Vector c = Gf2Vector::unit(6, i);
    auto table = full_table([&](const Gf2Vector& v) { return v + c; }, 6);
    CHECK(is_affine_wrt(table, toy_hidden_sum()).has_value());
  }
}

TEST_CASE("affinity check") {
  auto id_table = full_table([](const Gf2Vector& v) { return v; }, 6);
  auto pair = is_affine_wrt(id_table, toy_hidden_sum());
  REQUIRE(pair.has_value());
  CHECK(pair->M == Gf2Matrix::identity(6));
  CHECK(pair->t == Gf2Vector::zero(6));

  // swapping exactly two points breaks affinity
  auto swapped = id_table;
  std::swap(swapped[0], swapped[1]);
  CHECK(!is_affine_wrt(swapped, toy_hidden_sum()).has_value());
  CHECK(!is_affine_wrt(swapped, EmbeddedHiddenSum::plain(StandardHiddenSum::translations(6)))
             .has_value());
}

TEST_CASE("cipher construction asserts its invariants") {
  std::array<std::uint8_t, 8> good = build_sbox(calibrate_encoding()).table;
  CHECK_NOTHROW(ToyCipherSpec(good, toy_mixing_layer(), 5, KeySchedule::xor_round_index));

  std::array<std::uint8_t, 8> repeated = good;
  repeated[3] = repeated[2];
  CHECK_THROWS_AS(ToyCipherSpec(repeated, toy_mixing_layer(), 5, KeySchedule::xor_round_index),
                  InvalidGroup);

  CHECK_THROWS_AS(ToyCipherSpec(good, Gf2Matrix(6, 6), 5, KeySchedule::xor_round_index),
                  SingularMatrix);
  // invertible but wall-preserving mixing is rejected
  CHECK_THROWS_AS(ToyCipherSpec(good, Gf2Matrix::identity(6), 1, KeySchedule::xor_round_index),
                  InvalidGroup);
}

TEST_CASE("encryption and decryption invert each other") {
  std::mt19937_64 rng(0xcafe);
  for (int rounds : {1, 2, 5, 9}) {
    for (KeySchedule sched : {KeySchedule::xor_round_index, KeySchedule::identity}) {
      ToyCipherSpec spec = ToyCipherSpec::calibrated(rounds, sched);
      Gf2Vector key(6, rng() & 63);
      for (word_t w = 0; w < 64; ++w) {
        Gf2Vector p(6, w);
        CHECK(spec.decrypt(key, spec.encrypt(key, p)) == p);
      }
    }
  }
}

TEST_CASE("a single round with the identity box is the mixing layer plus key") {
  std::array<std::uint8_t, 8> identity_box = {0, 1, 2, 3, 4, 5, 6, 7};
  ToyCipherSpec spec(identity_box, toy_mixing_layer(), 1, KeySchedule::identity);
  Gf2Vector key(6, 0b011011);
  for (word_t w = 0; w < 64; ++w) {
    Gf2Vector p(6, w);
    CHECK(spec.encrypt(key, p) == p * toy_mixing_layer() + key);
  }
}

TEST_CASE("every keyed encryption is affine for the product sum") {
  std::mt19937_64 rng(0x7ab1e);
  for (int rounds : {1, 3, 6, 10}) {
    ToyCipherSpec spec = ToyCipherSpec::calibrated(rounds);
    for (int trial = 0; trial < 8; ++trial) {
      Gf2Vector key(6, rng() & 63);
      auto table = full_table([&](const Gf2Vector& v) { return spec.encrypt(key, v); }, 6);
      CHECK(is_affine_wrt(table, toy_hidden_sum()).has_value());
    }
  }
}

TEST_CASE("cipher spec document round-trip") {
  ToyCipherSpec spec = ToyCipherSpec::calibrated(7, KeySchedule::identity);
  std::string doc = format_cipher_spec(spec);
  ToyCipherSpec back = parse_cipher_spec_text(doc);
  CHECK(format_cipher_spec(back) == doc);
  CHECK(back.rounds() == 7);
  CHECK(back.schedule() == KeySchedule::identity);
  CHECK(back.sbox() == spec.sbox());
  Gf2Vector key(6, 0b10);
  for (word_t w = 0; w < 64; ++w)
    CHECK(back.encrypt(key, Gf2Vector(6, w)) == spec.encrypt(key, Gf2Vector(6, w)));
}
