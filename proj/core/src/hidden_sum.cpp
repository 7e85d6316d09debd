#include "hiddensums/hidden_sum.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "hiddensums/digest.hpp"

namespace hiddensums {

namespace {

word_t head_of(const Gf2Vector& v, int n) { return v.bits() & low_mask(n); }

}  // namespace

bool blocks_nondegenerate(int n, int d, const std::vector<word_t>& free_rows) {
  if (n == 0) return true;
  auto pair_row = [&](int i, int j) {  // i < j
    return free_rows[i * (2 * n - i - 1) / 2 + (j - i - 1)];
  };
  // pack each B_{e_s} as an n*d bit string
  const int nd = n * d;
  if (nd <= 128 && n <= 16) {
    std::vector<std::array<word_t, 2>> packed(n, {0, 0});
    for (int s = 0; s < n; ++s)
      for (int i = 0; i < n; ++i) {
        if (i == s) continue;
        word_t row = pair_row(std::min(i, s), std::max(i, s));
        int pos = i * d;
        packed[s][pos / 64] |= (pos % 64) ? (row << (pos % 64)) : row;
        if (pos % 64 && pos % 64 + d > 64) packed[s][1] |= row >> (64 - pos % 64);
      }
    // Gray-code walk over the non-empty subsets; the accumulator always
    // holds the subset sum
    std::array<word_t, 2> acc = {0, 0};
    const word_t total = word_t{1} << n;
    for (word_t k = 1; k < total; ++k) {
      int flip = std::countr_zero(k);
      acc[0] ^= packed[flip][0];
      acc[1] ^= packed[flip][1];
      if (acc[0] == 0 && acc[1] == 0) return false;
    }
    return true;
  }
  // large n: a vanishing subset sum is a linear dependency among the blocks
  const int words = (nd + 63) / 64;
  std::vector<std::vector<word_t>> rows(n, std::vector<word_t>(words, 0));
  for (int s = 0; s < n; ++s)
    for (int i = 0; i < n; ++i) {
      if (i == s) continue;
      word_t row = pair_row(std::min(i, s), std::max(i, s));
      int pos = i * d;
      rows[s][pos / 64] |= (pos % 64) ? (row << (pos % 64)) : row;
      if (pos % 64 && pos % 64 + d > 64) rows[s][pos / 64 + 1] |= row >> (64 - pos % 64);
    }
  int rk = 0;
  for (int bit = 0; bit < nd && rk < n; ++bit) {
    int w = bit / 64, b = bit % 64;
    int pivot = -1;
    for (int r = rk; r < n; ++r)
      if ((rows[r][w] >> b) & 1) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rk], rows[pivot]);
    for (int r = rk + 1; r < n; ++r)
      if ((rows[r][w] >> b) & 1)
        for (int k = 0; k < words; ++k) rows[r][k] ^= rows[rk][k];
    ++rk;
  }
  return rk == n;
}

StandardHiddenSum::StandardHiddenSum(int N, int d, std::vector<word_t> free_rows)
    : N_(N), n_(N - d), d_(d), rows_(std::move(free_rows)) {
  if (N < 1 || N > 64) throw DimensionMismatch("dimension must be in 1..64");
  if (d != N && !(1 <= d && d <= N - 2))
    throw InvalidGroup("tail dimension must satisfy 1 <= d <= N-2 or d = N");
  if (rows_.size() != static_cast<size_t>(n_ * (n_ - 1) / 2))
    throw InvalidGroup("wrong number of free block rows");
  const word_t mask = low_mask(d_);
  for (word_t r : rows_)
    if (r & ~mask) throw InvalidGroup("block row wider than tail dimension");
  if (!blocks_nondegenerate(n_, d_, rows_))
    throw InvalidGroup("degenerate blocks: a subset of B_{e_i} sums to zero");
}

StandardHiddenSum StandardHiddenSum::translations(int N) {
  return StandardHiddenSum(N, N, {});
}

word_t StandardHiddenSum::block_row(int i, int j) const {
  if (i == j) return 0;
  return rows_[pair_index(std::min(i, j), std::max(i, j))];
}

Gf2Matrix StandardHiddenSum::block(int i) const {
  Gf2Matrix b(n_, d_);
  for (int j = 0; j < n_; ++j) b.set_row_bits(j, block_row(i, j));
  return b;
}

Gf2Matrix StandardHiddenSum::kappa_head(word_t head_mask) const {
  Gf2Matrix k = Gf2Matrix::identity(N_);
  if (!head_mask) return k;
  for (int j = 0; j < n_; ++j) {
    word_t tail = 0;
    word_t sel = head_mask;
    while (sel) {
      int i = std::countr_zero(sel);
      tail ^= block_row(i, j);
      sel &= sel - 1;
    }
    k.set_row_bits(j, (word_t{1} << j) | (tail << n_));
  }
  return k;
}

Gf2Matrix StandardHiddenSum::kappa(const Gf2Vector& a) const {
  if (a.dim() != N_) throw DimensionMismatch("kappa argument dimension mismatch");
  return kappa_head(head_of(a, n_));
}

Gf2Vector StandardHiddenSum::circ(const Gf2Vector& x, const Gf2Vector& y) const {
  if (x.dim() != N_ || y.dim() != N_) throw DimensionMismatch("circ dimension mismatch");
  // x kappa_y + y = x + y + (sum over head bits of x of the y-block rows)
  word_t tail = 0;
  word_t sel = head_of(x, n_);
  const word_t yhead = head_of(y, n_);
  while (sel) {
    int i = std::countr_zero(sel);
    word_t row = 0;
    word_t ys = yhead;
    while (ys) {
      int j = std::countr_zero(ys);
      row ^= block_row(j, i);
      ys &= ys - 1;
    }
    tail ^= row;
    sel &= sel - 1;
  }
  return Gf2Vector(N_, x.bits() ^ y.bits() ^ (tail << n_));
}

Gf2Vector StandardHiddenSum::ring_product(const Gf2Vector& x, const Gf2Vector& y) const {
  return circ(x, y) + x + y;  // x kappa_y + x
}

Gf2Vector StandardHiddenSum::coordinates(const Gf2Vector& v) const {
  if (v.dim() != N_) throw DimensionMismatch("coordinates dimension mismatch");
  const word_t head = head_of(v, n_);
  Gf2Vector w = v;
  word_t sel = head;
  while (sel) {
    int i = std::countr_zero(sel);
    w = circ(w, Gf2Vector::unit(N_, i));
    sel &= sel - 1;
  }
  return Gf2Vector(N_, head | (w.bits() & ~low_mask(n_)));
}

Gf2Vector StandardHiddenSum::from_coordinates(const Gf2Vector& lambda) const {
  if (lambda.dim() != N_) throw DimensionMismatch("coordinate vector dimension mismatch");
  Gf2Vector acc = Gf2Vector::zero(N_);
  word_t sel = lambda.bits();
  while (sel) {
    int i = std::countr_zero(sel);
    acc = circ(acc, Gf2Vector::unit(N_, i));
    sel &= sel - 1;
  }
  return acc;
}

std::vector<Gf2Vector> StandardHiddenSum::u_basis() const {
  std::vector<Gf2Vector> out;
  for (int i = n_; i < N_; ++i) out.push_back(Gf2Vector::unit(N_, i));
  return out;
}

std::vector<AffineMap> StandardHiddenSum::basis_translations() const {
  std::vector<AffineMap> out;
  out.reserve(N_);
  for (int i = 0; i < N_; ++i) {
    Gf2Vector e = Gf2Vector::unit(N_, i);
    out.push_back(AffineMap{kappa(e), e});
  }
  return out;
}

EmbeddedHiddenSum::EmbeddedHiddenSum(StandardHiddenSum std_form, Gf2Matrix g)
    : std_(std::move(std_form)), g_(std::move(g)) {
  if (g_.rows() != std_.dim() || g_.cols() != std_.dim())
    throw DimensionMismatch("conjugator shape mismatch");
  g_inv_ = inverse(g_);
}

EmbeddedHiddenSum EmbeddedHiddenSum::plain(StandardHiddenSum std_form) {
  int N = std_form.dim();
  return EmbeddedHiddenSum(std::move(std_form), Gf2Matrix::identity(N));
}

Gf2Matrix EmbeddedHiddenSum::kappa(const Gf2Vector& a) const {
  return g_ * std_.kappa(a * g_) * g_inv_;
}

AffineMap EmbeddedHiddenSum::tau(const Gf2Vector& a) const { return AffineMap{kappa(a), a}; }

Gf2Vector EmbeddedHiddenSum::circ(const Gf2Vector& x, const Gf2Vector& y) const {
  return std_.circ(x * g_, y * g_) * g_inv_;
}

std::vector<Gf2Vector> EmbeddedHiddenSum::u_basis() const {
  std::vector<Gf2Vector> out;
  for (int i = std_.head_dim(); i < std_.dim(); ++i)
    out.push_back(Gf2Vector::unit(std_.dim(), i) * g_inv_);
  return out;
}

GeneratedGroup conjugate(const GeneratedGroup& t, const Gf2Matrix& g) {
  Gf2Matrix g_inv = inverse(g);  // throws SingularMatrix
  GeneratedGroup out{t.N, {}};
  out.generators.reserve(t.generators.size());
  for (const auto& m : t.generators)
    out.generators.push_back(AffineMap{g_inv * m.linear * g, m.offset * g});
  return out;
}

GeneratedGroup product_group(const GeneratedGroup& a, const GeneratedGroup& b) {
  const int N = a.N + b.N;
  GeneratedGroup out{N, {}};
  auto lift = [&](const AffineMap& m, bool second) {
    Gf2Matrix lin = Gf2Matrix::identity(N);
    const int off = second ? a.N : 0;
    for (int r = 0; r < m.linear.rows(); ++r)
      lin.set_row_bits(off + r, m.linear.row_bits(r) << off);
    return AffineMap{lin, Gf2Vector(N, word_t(m.offset.bits()) << off)};
  };
  for (const auto& m : a.generators) out.generators.push_back(lift(m, false));
  for (const auto& m : b.generators) out.generators.push_back(lift(m, true));
  return out;
}

struct ValidationAccess {
  static ValidatedGroup make(int N, std::vector<AffineMap> gens, std::vector<Gf2Matrix> kappa) {
    ValidatedGroup g;
    g.N_ = N;
    g.generators_ = std::move(gens);
    g.kappa_ = std::move(kappa);
    return g;
  }
};

namespace {

struct MapKey {
  std::vector<word_t> data;
  bool operator==(const MapKey&) const = default;
};

struct MapKeyHash {
  size_t operator()(const MapKey& k) const {
    std::span<const std::uint8_t> bytes(reinterpret_cast<const std::uint8_t*>(k.data.data()),
                                        k.data.size() * sizeof(word_t));
    return static_cast<size_t>(digest128(bytes).lo);
  }
};

MapKey key_of(const AffineMap& m) {
  MapKey k;
  k.data.reserve(m.linear.rows() + 1);
  for (int r = 0; r < m.linear.rows(); ++r) k.data.push_back(m.linear.row_bits(r));
  k.data.push_back(m.offset.bits());
  return k;
}

}  // namespace

ValidationResult validate(const GeneratedGroup& t) {
  ValidationResult res;
  const int N = t.N;
  if (N < 1 || N > 16) {
    res.failure = "dimension out of the exhaustive-closure range 1..16";
    return res;
  }
  if (t.generators.empty()) {
    res.failure = "no generators";
    return res;
  }
  for (size_t i = 0; i < t.generators.size(); ++i) {
    const auto& m = t.generators[i];
    if (m.linear.rows() != N || m.linear.cols() != N || m.offset.dim() != N) {
      res.failure = "generator " + std::to_string(i + 1) + " has wrong dimensions";
      return res;
    }
    if (!is_invertible(m.linear)) {
      res.failure = "generator " + std::to_string(i + 1) + " has a singular linear part";
      return res;
    }
  }
  for (size_t i = 0; i < t.generators.size(); ++i)
    if (!compose(t.generators[i], t.generators[i]).is_identity()) {
      res.failure = "generator " + std::to_string(i + 1) + " has order greater than 2";
      return res;
    }
  for (size_t i = 0; i < t.generators.size(); ++i)
    for (size_t j = i + 1; j < t.generators.size(); ++j)
      if (compose(t.generators[i], t.generators[j]) != compose(t.generators[j], t.generators[i])) {
        res.failure = "generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                      " do not commute";
        return res;
      }

  // semigroup closure; in a finite group this is the generated subgroup
  const size_t want = size_t{1} << N;
  const size_t cap = size_t{1} << (N + 2);
  std::vector<AffineMap> elements;
  std::unordered_set<MapKey, MapKeyHash> seen;
  AffineMap id{Gf2Matrix::identity(N), Gf2Vector::zero(N)};
  elements.push_back(id);
  seen.insert(key_of(id));
  for (size_t head = 0; head < elements.size(); ++head) {
    AffineMap cur = elements[head];
    for (const auto& gen : t.generators) {
      AffineMap next = compose(cur, gen);
      if (seen.insert(key_of(next)).second) {
        if (elements.size() + 1 > cap) throw ClosureOverflow("closure exceeded 2^(N+2) elements");
        elements.push_back(std::move(next));
      }
    }
  }

  if (elements.size() != want) {
    res.failure = "group order " + std::to_string(elements.size()) + " differs from 2^N";
    return res;
  }
  std::vector<Gf2Matrix> kappa(want);
  std::vector<bool> hit(want, false);
  for (auto& m : elements) {
    word_t off = m.offset.bits();
    if (hit[off]) {
      res.failure = "not transitive: two elements share the image of 0";
      return res;
    }
    hit[off] = true;
    kappa[off] = std::move(m.linear);
  }
  res.group = ValidationAccess::make(N, t.generators, std::move(kappa));
  return res;
}

bool is_elementary_abelian_regular(const GeneratedGroup& t, std::string* reason) {
  ValidationResult r = validate(t);
  if (reason) *reason = r.failure;
  return r.ok();
}

std::vector<Gf2Vector> ValidatedGroup::u_basis() const {
  std::vector<Gf2Vector> fixed;
  for (word_t a = 0; a < kappa_.size(); ++a)
    if (kappa_[a].is_identity()) fixed.emplace_back(N_, a);
  return rref_basis(fixed);
}

bool ValidatedGroup::normalized_by_translations() const {
  SpanTracker u(N_);
  for (const auto& v : u_basis()) u.insert(v);
  // the ring product is bilinear, so basis pairs suffice
  for (int i = 0; i < N_; ++i)
    for (int j = i; j < N_; ++j)
      if (!u.contains(ring_product(Gf2Vector::unit(N_, i), Gf2Vector::unit(N_, j)))) return false;
  return true;
}

std::vector<Gf2Vector> ValidatedGroup::weak_key_basis() const {
  SpanTracker u(N_);
  for (const auto& v : u_basis()) u.insert(v);
  std::vector<Gf2Vector> good;
  for (word_t a = 0; a < kappa_.size(); ++a) {
    Gf2Vector v(N_, a);
    bool ok = true;
    for (int i = 0; i < N_ && ok; ++i)
      ok = u.contains(ring_product(Gf2Vector::unit(N_, i), v));
    if (ok) good.push_back(v);
  }
  return rref_basis(good);
}

bool normalized_by_translations(const StandardHiddenSum&) { return true; }

bool normalized_by_translations(const GeneratedGroup& t) {
  ValidationResult r = validate(t);
  if (!r.ok()) throw InvalidGroup("not an elementary abelian regular group: " + r.failure);
  return r.group->normalized_by_translations();
}

Standardization standardize(const ValidatedGroup& t) {
  const int N = t.dim();
  const word_t total = word_t{1} << N;

  std::vector<Gf2Matrix> gen_kappa;
  for (const auto& g : t.generators()) gen_kappa.push_back(g.linear);

  // stages[k] = basis vectors of the common fixed space on V / span(earlier
  // stages), chosen greedily in increasing packed-word order
  std::vector<std::vector<Gf2Vector>> stages;
  SpanTracker covered(N);
  while (covered.dim_span() < N) {
    SpanTracker prev = covered;  // span at the start of the stage
    std::vector<Gf2Vector> stage;
    for (word_t w = 1; w < total; ++w) {
      Gf2Vector v(N, w);
      if (covered.contains(v)) continue;
      bool fixed_mod_prev = true;
      for (const auto& k : gen_kappa)
        if (!prev.contains(v * k + v)) {
          fixed_mod_prev = false;
          break;
        }
      if (fixed_mod_prev && covered.insert(v)) stage.push_back(v);
    }
    if (stage.empty()) throw InvalidGroup("fixed-space iteration stalled; group not unipotent");
    stages.push_back(std::move(stage));
  }

  // later stages come first so that v_i kappa - v_i lands in the span of the
  // vectors after it; stage 0 (= U(T)) fills the last slots
  std::vector<Gf2Vector> basis;
  for (auto it = stages.rbegin(); it != stages.rend(); ++it)
    for (const auto& v : *it) basis.push_back(v);

  Standardization out{Gf2Matrix::identity(N), {}, std::nullopt};
  Gf2Matrix h = Gf2Matrix::from_rows(basis);  // e_i h = v_i
  out.g = inverse(h);

  out.triangular_generators.reserve(N);
  for (int i = 0; i < N; ++i) {
    const Gf2Vector& v = basis[i];  // = e_i g^-1
    Gf2Matrix lin = h * t.kappa(v) * out.g;  // g^-1 kappa_v g, h = g^-1
    out.triangular_generators.push_back(AffineMap{std::move(lin), Gf2Vector::unit(N, i)});
  }

  // extract the block normal form when all heads are identity blocks
  const int d = static_cast<int>(stages.front().size());
  const int n = N - d;
  bool block_shape = true;
  std::vector<word_t> free_rows(n * (n - 1) / 2, 0);
  for (int i = 0; i < N && block_shape; ++i) {
    const Gf2Matrix& k = out.triangular_generators[i].linear;
    for (int r = 0; r < N && block_shape; ++r) {
      word_t row = k.row_bits(r);
      if (i >= n || r >= n) {
        block_shape = (row == (word_t{1} << r));
      } else {
        if ((row & low_mask(n)) != (word_t{1} << r)) block_shape = false;
        word_t tail = row >> n;
        if (r == i) {
          if (tail) block_shape = false;
        } else if (r > i) {
          free_rows[i * (2 * n - i - 1) / 2 + (r - i - 1)] = tail;
        } else {
          // symmetry: row i of kappa_{e_r} must already hold this value
          if (free_rows[r * (2 * n - r - 1) / 2 + (i - r - 1)] != tail) block_shape = false;
        }
      }
    }
  }
  if (block_shape && (d == N || (1 <= d && d <= N - 2)))
    out.block_form = StandardHiddenSum(N, d, std::move(free_rows));
  return out;
}

EmbeddedHiddenSum to_embedded(const ValidatedGroup& t) {
  Standardization s = standardize(t);
  if (!s.block_form)
    throw NotNormalized("group is not normalized by the plain translations; no block form");
  return EmbeddedHiddenSum(*s.block_form, s.g);
}

GeneratedGroup build_exterior_group(int N) {
  if (N < 7) throw std::invalid_argument("exterior group needs N >= 7");
  if (N > 16) throw std::invalid_argument("exterior group capped at N = 16 for validation");
  // non-zero basis products, 0-based indices
  auto mult = [](int i, int j) -> word_t {
    if (i > j) std::swap(i, j);
    if (i == 0 && j == 1) return word_t{1} << 3;  // e1 e2 = e4
    if (i == 0 && j == 2) return word_t{1} << 4;  // e1 e3 = e5
    if (i == 1 && j == 2) return word_t{1} << 5;  // e2 e3 = e6
    if (i == 0 && j == 5) return word_t{1} << 6;  // e1 (e2 e3) = e7
    if (i == 1 && j == 4) return word_t{1} << 6;  // e2 (e1 e3) = e7
    if (i == 2 && j == 3) return word_t{1} << 6;  // e3 (e1 e2) = e7
    return 0;
  };
  GeneratedGroup out{N, {}};
  for (int j = 0; j < N; ++j) {
    Gf2Matrix k = Gf2Matrix::identity(N);
    for (int i = 0; i < N; ++i) k.set_row_bits(i, (word_t{1} << i) ^ mult(i, j));
    out.generators.push_back(AffineMap{std::move(k), Gf2Vector::unit(N, j)});
  }
  return out;
}

std::vector<Gf2Vector> weak_keys(const StandardHiddenSum& t) {
  std::vector<Gf2Vector> out;
  for (int i = 0; i < t.dim(); ++i) out.push_back(Gf2Vector::unit(t.dim(), i));
  return out;
}

StandardHiddenSum random_standard_hidden_sum(int N, int n, std::mt19937_64& rng) {
  if (n < 2 || N - n < 1 || N - n > N - 2) throw std::invalid_argument("need 2 <= n <= N-1, d >= 1");
  const int d = N - n;
  const word_t mask = low_mask(d);
  // some shapes have empty varieties (e.g. n = 3, d = 1), so cap the
  // rejection sampling instead of spinning
  for (int attempt = 0; attempt < 2'000'000; ++attempt) {
    std::vector<word_t> rows(n * (n - 1) / 2);
    for (auto& r : rows) r = rng() & mask;
    if (blocks_nondegenerate(n, d, rows)) return StandardHiddenSum(N, d, std::move(rows));
  }
  throw InvalidGroup("no non-degenerate block assignment found for this shape");
}

}  // namespace hiddensums
