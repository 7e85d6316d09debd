#include "hiddensums/tb_cipher.hpp"

#include <algorithm>

namespace hiddensums {

bool proper_mixing_check(const Gf2Matrix& lambda, const WallStructure& walls) {
  if (walls.N != walls.brick_width * walls.brick_count || walls.brick_width < 1 ||
      walls.brick_count < 2)
    throw std::invalid_argument("bad wall structure");
  if (lambda.rows() != walls.N || lambda.cols() != walls.N)
    throw DimensionMismatch("mixing layer does not match the wall structure");
  const int b = walls.brick_count, m = walls.brick_width;
  // iterate non-empty proper subsets of the bricks
  for (std::uint32_t subset = 1; subset + 1 < (1u << b); ++subset) {
    word_t wall_mask = 0;
    for (int i = 0; i < b; ++i)
      if ((subset >> i) & 1) wall_mask |= low_mask(m) << (i * m);
    bool invariant = true;
    for (int c = 0; c < walls.N && invariant; ++c)
      if ((wall_mask >> c) & 1)
        invariant = ((lambda.row_bits(c) & ~wall_mask) == 0);
    if (invariant) return false;
  }
  return true;
}

namespace {

// F8 with a^3 = a + 1; elements are 3-bit coefficient vectors over {1, a, a^2}.
std::uint8_t f8_mul(std::uint8_t x, std::uint8_t y) {
  std::uint8_t prod = 0;
  for (int k = 0; k < 3; ++k)
    if ((y >> k) & 1) prod ^= x << k;
  // reduce degrees 3 and 4
  if (prod & 0x10) prod ^= 0x10 ^ 0x06;  // a^4 = a^2 + a
  if (prod & 0x08) prod ^= 0x08 ^ 0x03;  // a^3 = a + 1
  return prod;
}

std::uint8_t f8_pow(std::uint8_t x, int e) {
  std::uint8_t r = 1;
  for (int i = 0; i < e; ++i) r = f8_mul(r, x);
  return r;
}

std::uint8_t sbox_poly(std::uint8_t x) {
  const std::uint8_t a = 0x2;
  const std::uint8_t a2 = f8_mul(a, a);
  const std::uint8_t a5 = f8_pow(a, 5);
  std::uint8_t y = 0;
  y ^= f8_mul(a5, f8_pow(x, 6));
  y ^= f8_mul(a, f8_pow(x, 5));
  y ^= f8_mul(a2, f8_pow(x, 4));
  y ^= f8_mul(a5, f8_pow(x, 3));
  y ^= f8_mul(a, f8_pow(x, 2));
  y ^= f8_mul(a, x);
  return y;
}

// brick bits -> field element under the basis order, and back
std::uint8_t encode(std::uint8_t bits, const BasisOrder& order) {
  std::uint8_t elem = 0;
  for (int k = 0; k < 3; ++k)
    if ((bits >> k) & 1) elem ^= f8_pow(0x2, order[k]);
  return elem;
}

std::uint8_t decode(std::uint8_t elem, const BasisOrder& order) {
  for (std::uint8_t bits = 0; bits < 8; ++bits)
    if (encode(bits, order) == elem) return bits;
  throw Error("field decode failed");
}

}  // namespace

SboxTable build_sbox(const BasisOrder& order) {
  SboxTable out{{}, true};
  std::array<bool, 8> seen{};
  for (std::uint8_t v = 0; v < 8; ++v) {
    std::uint8_t img = decode(sbox_poly(encode(v, order)), order);
    out.table[v] = img;
    if (seen[img]) out.bijective = false;
    seen[img] = true;
  }
  return out;
}

const Gf2Matrix& toy_mixing_layer() {
  static const Gf2Matrix lambda = [] {
    const std::vector<std::vector<int>> rows = {
        {0, 1, 1, 0, 1, 0}, {0, 1, 0, 0, 0, 0}, {1, 1, 1, 0, 1, 0},
        {0, 1, 0, 1, 1, 1}, {0, 0, 0, 0, 1, 0}, {0, 1, 0, 1, 1, 0},
    };
    Gf2Matrix m(6, 6);
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c)
        if (rows[r][c]) m.set(r, c, true);
    return m;
  }();
  return lambda;
}

GeneratedGroup toy_brick_group() {
  GeneratedGroup t{3, {}};
  Gf2Matrix k1 = Gf2Matrix::identity(3);
  k1.set(2, 1, true);  // rows (1,0,0),(0,1,0),(0,1,1)
  Gf2Matrix k2 = Gf2Matrix::identity(3);
  Gf2Matrix k3 = Gf2Matrix::identity(3);
  k3.set(0, 1, true);  // rows (1,1,0),(0,1,0),(0,0,1)
  t.generators.push_back(AffineMap{k1, Gf2Vector::unit(3, 0)});
  t.generators.push_back(AffineMap{k2, Gf2Vector::unit(3, 1)});
  t.generators.push_back(AffineMap{k3, Gf2Vector::unit(3, 2)});
  return t;
}

const EmbeddedHiddenSum& toy_hidden_sum() {
  static const EmbeddedHiddenSum hs = [] {
    GeneratedGroup brick = toy_brick_group();
    GeneratedGroup prod = product_group(brick, brick);
    ValidationResult v = validate(prod);
    if (!v.ok()) throw InvalidGroup("brick product failed validation: " + v.failure);
    return to_embedded(*v.group);
  }();
  return hs;
}

std::optional<AffinePair> is_affine_wrt(const std::vector<Gf2Vector>& table,
                                        const EmbeddedHiddenSum& hs) {
  const int N = hs.dim();
  if (table.size() != (size_t{1} << N)) throw DimensionMismatch("value table must cover all points");
  const Gf2Vector t = hs.coordinates(table[0]);
  std::vector<Gf2Vector> rows;
  rows.reserve(N);
  for (int i = 0; i < N; ++i) {
    Gf2Vector vi = Gf2Vector::unit(N, i) * hs.conjugator_inverse();
    rows.push_back(hs.coordinates(table[vi.bits()]) + t);
  }
  Gf2Matrix M = Gf2Matrix::from_rows(rows);
  for (word_t w = 0; w < (word_t{1} << N); ++w) {
    Gf2Vector v(N, w);
    if (hs.coordinates(table[w]) != hs.coordinates(v) * M + t) return std::nullopt;
  }
  return AffinePair{std::move(M), t};
}

namespace {

std::vector<Gf2Vector> compose_sbox_mixing_table(const std::array<std::uint8_t, 8>& sbox,
                                                 const Gf2Matrix& lambda) {
  std::vector<Gf2Vector> table;
  table.reserve(64);
  for (word_t w = 0; w < 64; ++w) {
    word_t sub = word_t(sbox[w & 7]) | (word_t(sbox[(w >> 3) & 7]) << 3);
    table.push_back(Gf2Vector(6, sub) * lambda);
  }
  return table;
}

}  // namespace

BasisOrder calibrate_encoding() {
  BasisOrder order = {0, 1, 2};
  std::array<BasisOrder, 6> candidates;
  int k = 0;
  do {
    candidates[k++] = order;
  } while (std::next_permutation(order.begin(), order.end()));
  for (const auto& cand : candidates) {
    SboxTable s = build_sbox(cand);
    if (!s.bijective) continue;
    auto table = compose_sbox_mixing_table(s.table, toy_mixing_layer());
    if (is_affine_wrt(table, toy_hidden_sum())) return cand;
  }
  throw NoEncodingVerifies("no basis order makes the round core affine for the hidden sum");
}

std::string schedule_name(KeySchedule s) {
  return s == KeySchedule::xor_round_index ? "xor-round-index" : "identity";
}

KeySchedule schedule_from_name(const std::string& name) {
  if (name == "xor-round-index") return KeySchedule::xor_round_index;
  if (name == "identity") return KeySchedule::identity;
  throw ParseError("unknown key schedule '" + name + "'");
}

ToyCipherSpec::ToyCipherSpec(const std::array<std::uint8_t, 8>& sbox, Gf2Matrix mixing, int rounds,
                             KeySchedule schedule)
    : sbox_(sbox), mixing_(std::move(mixing)), rounds_(rounds), schedule_(schedule) {
  if (rounds_ < 1) throw std::invalid_argument("round count must be >= 1");
  std::array<bool, 8> seen{};
  for (int v = 0; v < 8; ++v) {
    if (sbox_[v] > 7 || seen[sbox_[v]]) throw InvalidGroup("S-box table is not a permutation");
    seen[sbox_[v]] = true;
    sbox_inv_[sbox_[v]] = static_cast<std::uint8_t>(v);
  }
  if (mixing_.rows() != 6 || mixing_.cols() != 6)
    throw DimensionMismatch("mixing layer must be 6x6");
  mixing_inv_ = inverse(mixing_);  // throws SingularMatrix
  if (!proper_mixing_check(mixing_, WallStructure{6, 3, 2}))
    throw InvalidGroup("mixing layer leaves a wall invariant");
}

ToyCipherSpec ToyCipherSpec::calibrated(int rounds, KeySchedule schedule) {
  static const std::array<std::uint8_t, 8> table = build_sbox(calibrate_encoding()).table;
  return ToyCipherSpec(table, toy_mixing_layer(), rounds, schedule);
}

Gf2Vector ToyCipherSpec::round_key(const Gf2Vector& key, int round) const {
  switch (schedule_) {
    case KeySchedule::xor_round_index:
      return Gf2Vector(6, key.bits() ^ (static_cast<word_t>(round) & low_mask(6)));
    case KeySchedule::identity:
      return key;
  }
  throw std::logic_error("unreachable");
}

Gf2Vector ToyCipherSpec::substitute(const Gf2Vector& v) const {
  word_t w = v.bits();
  return Gf2Vector(6, word_t(sbox_[w & 7]) | (word_t(sbox_[(w >> 3) & 7]) << 3));
}

Gf2Vector ToyCipherSpec::encrypt(const Gf2Vector& key, const Gf2Vector& plaintext) const {
  if (key.dim() != 6 || plaintext.dim() != 6) throw DimensionMismatch("cipher state is 6 bits");
  Gf2Vector state = plaintext;
  for (int h = 1; h <= rounds_; ++h) {
    state = substitute(state);
    state = state * mixing_;
    state += round_key(key, h);
  }
  return state;
}

Gf2Vector ToyCipherSpec::decrypt(const Gf2Vector& key, const Gf2Vector& ciphertext) const {
  if (key.dim() != 6 || ciphertext.dim() != 6) throw DimensionMismatch("cipher state is 6 bits");
  Gf2Vector state = ciphertext;
  for (int h = rounds_; h >= 1; --h) {
    state += round_key(key, h);
    state = state * mixing_inv_;
    word_t w = state.bits();
    state = Gf2Vector(6, word_t(sbox_inv_[w & 7]) | (word_t(sbox_inv_[(w >> 3) & 7]) << 3));
  }
  return state;
}

std::vector<Gf2Vector> ToyCipherSpec::round_core_table() const {
  return compose_sbox_mixing_table(sbox_, mixing_);
}

EmbeddedHiddenSum product_group(const StandardHiddenSum& a, const StandardHiddenSum& b) {
  const int na = a.head_dim(), nb = b.head_dim();
  const int da = a.tail_dim(), db = b.tail_dim();
  const int n = na + nb, d = da + db, N = n + d;
  if (N > 64) throw DimensionMismatch("product dimension exceeds 64");

  // free rows of the combined blocks: pairs inside one factor keep their
  // rows (b's shifted into the second tail block), cross pairs vanish
  std::vector<word_t> rows(static_cast<size_t>(n) * (n - 1) / 2, 0);
  auto at = [&](int i, int j) -> word_t& { return rows[i * (2 * n - i - 1) / 2 + (j - i - 1)]; };
  for (int i = 0; i < na; ++i)
    for (int j = i + 1; j < na; ++j) at(i, j) = a.block_row(i, j);
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j) at(na + i, na + j) = b.block_row(i, j) << da;

  // permutation sending the interleaved coordinates (a-heads, a-tails,
  // b-heads, b-tails) to standard layout (heads first, tails last)
  Gf2Matrix perm(N, N);
  const int Na = a.dim();
  for (int c = 0; c < N; ++c) {
    int dest;
    if (c < na)
      dest = c;
    else if (c < Na)
      dest = n + (c - na);
    else if (c < Na + nb)
      dest = na + (c - Na);
    else
      dest = n + da + (c - Na - nb);
    perm.set(c, dest, true);
  }
  return EmbeddedHiddenSum(StandardHiddenSum(N, d, std::move(rows)), std::move(perm));
}

}  // namespace hiddensums
