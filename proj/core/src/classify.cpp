#include "hiddensums/classify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <unordered_set>

#include "hiddensums/parallel.hpp"

namespace hiddensums {

namespace {

void append_matrix_bytes(std::vector<std::uint8_t>& out, const Gf2Matrix& m) {
  const int bytes_per_row = (m.cols() + 7) / 8;
  for (int r = 0; r < m.rows(); ++r) {
    word_t bits = m.row_bits(r);
    for (int b = 0; b < bytes_per_row; ++b) out.push_back((bits >> (8 * b)) & 0xFF);
  }
}

// Key of an embedded group through the closed form: the element sending 0 to
// a has linear part g kappa^std_{ag} g^-1, and kappa^std depends only on the
// head bits, so 2^n sandwich products cover all 2^N elements.
void key_bytes_embedded(const EmbeddedHiddenSum& g, std::vector<std::uint8_t>& out) {
  const int N = g.dim();
  const int n = g.standard_form().head_dim();
  const Gf2Matrix& G = g.conjugator();
  const Gf2Matrix& Ginv = g.conjugator_inverse();
  std::vector<Gf2Matrix> sandwich;
  sandwich.reserve(size_t{1} << n);
  for (word_t h = 0; h < (word_t{1} << n); ++h)
    sandwich.push_back(G * g.standard_form().kappa_head(h) * Ginv);
  out.clear();
  out.reserve((size_t{1} << N) * N * ((N + 7) / 8));
  for (word_t a = 0; a < (word_t{1} << N); ++a) {
    word_t head = (Gf2Vector(N, a) * G).bits() & low_mask(n);
    append_matrix_bytes(out, sandwich[head]);
  }
}

}  // namespace

std::vector<std::uint8_t> canonical_key_bytes(const EmbeddedHiddenSum& g) {
  std::vector<std::uint8_t> out;
  key_bytes_embedded(g, out);
  return out;
}

std::vector<std::uint8_t> canonical_key_bytes(const ValidatedGroup& g) {
  std::vector<std::uint8_t> out;
  const word_t total = word_t{1} << g.dim();
  out.reserve(total * g.dim() * ((g.dim() + 7) / 8));
  for (word_t a = 0; a < total; ++a) append_matrix_bytes(out, g.kappa(Gf2Vector(g.dim(), a)));
  return out;
}

CanonicalKey canonical_key(const EmbeddedHiddenSum& g, bool keep_bytes) {
  std::vector<std::uint8_t> bytes = canonical_key_bytes(g);
  CanonicalKey key{digest128(bytes), {}};
  if (keep_bytes) key.bytes = std::move(bytes);
  return key;
}

CanonicalKey canonical_key(const ValidatedGroup& g, bool keep_bytes) {
  std::vector<std::uint8_t> bytes = canonical_key_bytes(g);
  CanonicalKey key{digest128(bytes), {}};
  if (keep_bytes) key.bytes = std::move(bytes);
  return key;
}

std::pair<Gf2Matrix, Gf2Matrix> gl_generators(int N) {
  if (N < 2) throw std::invalid_argument("GL generators need N >= 2");
  Gf2Matrix cycle(N, N);
  for (int i = 0; i + 1 < N; ++i) cycle.set(i, i + 1, true);
  cycle.set(N - 1, 0, true);
  Gf2Matrix transvection = Gf2Matrix::identity(N);
  transvection.set(0, 1, true);
  return {cycle, transvection};
}

StratumUniverse StratumUniverse::build(int N, int d, std::uint64_t cap) {
  StratumUniverse u;
  u.N_ = N;
  u.d_ = d;
  bigint total = count_total(N, d);
  if (total > cap) throw CapExceeded("stratum universe beyond cap");
  u.stds_ = enumerate_variety(N - d, d);
  u.frames_ = enumerate_subspaces(N, d);

  const std::uint64_t S = u.stds_.size();
  const std::uint64_t W = u.frames_.size();
  u.entries_.resize(S * W);
  parallel_ranges(W, [&](std::uint64_t wb, std::uint64_t we) {
    std::vector<std::uint8_t> bytes;
    for (std::uint64_t w = wb; w < we; ++w)
      for (std::uint64_t s = 0; s < S; ++s) {
        EmbeddedHiddenSum g(u.stds_[s], u.frames_[w].to_tail);
        key_bytes_embedded(g, bytes);
        u.entries_[w * S + s] =
            Entry{digest128(bytes), static_cast<std::uint32_t>(w), static_cast<std::uint32_t>(s)};
      }
  });
  std::sort(u.entries_.begin(), u.entries_.end(),
            [](const Entry& a, const Entry& b) { return a.digest < b.digest; });
  for (std::size_t i = 1; i < u.entries_.size(); ++i)
    if (u.entries_[i].digest == u.entries_[i - 1].digest) {
      // distinct groups by construction, so equal digests mean either an
      // enumeration bug or a hash collision; compare the full keys
      auto a = canonical_key_bytes(u.group(i));
      auto b = canonical_key_bytes(u.group(i - 1));
      throw Error(a == b ? "duplicate group in stratum enumeration"
                         : "128-bit digest collision; change the digest seed");
    }
  u.orbit_.assign(u.entries_.size(), -1);
  return u;
}

std::optional<std::size_t> StratumUniverse::find(const Digest128& digest) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), digest,
                             [](const Entry& e, const Digest128& d) { return e.digest < d; });
  if (it == entries_.end() || it->digest != digest) return std::nullopt;
  return static_cast<std::size_t>(it - entries_.begin());
}

EmbeddedHiddenSum StratumUniverse::group(std::size_t index) const {
  const Entry& e = entries_[index];
  return EmbeddedHiddenSum(stds_[e.std_index], frames_[e.frame].to_tail);
}

namespace {

struct OrbitResult {
  std::vector<std::size_t> members;
  std::vector<std::uint8_t> best_key;
  std::optional<EmbeddedHiddenSum> best_group;
};

}  // namespace

class OrbitPartitioner {
 public:
  // Flood fill from the seed under conjugation by the GL generating pair.
  // `try_mark(i)` must return true exactly once per universe index.
  static OrbitResult run(const EmbeddedHiddenSum& seed, const StratumUniverse& u,
                         const std::function<bool(std::size_t)>& try_mark) {
    auto [cyc, trans] = gl_generators(u.dim());
    const std::array<Gf2Matrix, 2> gens_inv = {inverse(cyc), inverse(trans)};

    OrbitResult res;
    std::vector<std::uint8_t> bytes;
    key_bytes_embedded(seed, bytes);
    auto seed_idx = u.find(digest128(bytes));
    if (!seed_idx) throw OrbitEscapedUniverse("orbit seed not in universe");
    if (!try_mark(*seed_idx)) throw Error("orbit seed already claimed");

    res.members.push_back(*seed_idx);
    res.best_key = bytes;
    res.best_group = seed;

    // conjugating an embedded group by h only replaces its map g with h^-1 g,
    // so the seed's standard form serves for the whole orbit
    const StandardHiddenSum& seed_std = seed.standard_form();
    std::vector<Gf2Matrix> frontier{seed.conjugator()};
    while (!frontier.empty()) {
      Gf2Matrix cur = std::move(frontier.back());
      frontier.pop_back();
      for (const auto& hinv : gens_inv) {
        Gf2Matrix g2 = hinv * cur;
        EmbeddedHiddenSum conj(seed_std, g2);
        key_bytes_embedded(conj, bytes);
        auto idx = u.find(digest128(bytes));
        if (!idx) throw OrbitEscapedUniverse("conjugate left the enumerated universe");
        if (try_mark(*idx)) {
          res.members.push_back(*idx);
          if (bytes < res.best_key) {
            res.best_key = bytes;
            res.best_group = conj;
          }
          frontier.push_back(std::move(g2));
        }
      }
    }
    return res;
  }
};

std::vector<std::size_t> gl_orbit(const EmbeddedHiddenSum& seed, StratumUniverse& universe) {
  std::unordered_set<std::size_t> seen;
  OrbitResult r = OrbitPartitioner::run(seed, universe,
                                        [&](std::size_t i) { return seen.insert(i).second; });
  return r.members;
}

ClassTable classify_all(int N, bool allow_slow) {
  if (N < 3 || N > 6) throw std::invalid_argument("classification covers 3 <= N <= 6");
  if (N == 6 && !allow_slow)
    throw CapExceeded("the N = 6 universe holds ~2.8M groups; pass allow_slow to run it");

  ClassTable table;
  table.N = N;

  // the plain translation group is a singleton class at every dimension
  EmbeddedHiddenSum tplus = EmbeddedHiddenSum::plain(StandardHiddenSum::translations(N));
  table.classes.push_back(
      ClassInfo{bigint(1), N, tplus, canonical_key_bytes(tplus)});

  for (int d = N - 2; d >= 1; --d) {
    StratumUniverse u = StratumUniverse::build(N, d);
    std::int32_t next_orbit = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u.orbit_of(i) >= 0) continue;
      const std::int32_t id = next_orbit++;
      OrbitResult orbit = OrbitPartitioner::run(
          u.group(i), u, [&](std::size_t j) { return u.claim(j, id); });
      table.classes.push_back(ClassInfo{bigint(orbit.members.size()), d, *orbit.best_group,
                                        std::move(orbit.best_key)});
    }
    // every group in the stratum must have been claimed by some orbit
    bigint claimed = 0;
    for (const auto& c : table.classes)
      if (c.dim_u == d) claimed += c.size;
    if (claimed != bigint(u.size())) throw Error("orbits do not partition the stratum");
  }

  std::sort(table.classes.begin(), table.classes.end(), [](const ClassInfo& a, const ClassInfo& b) {
    if (a.dim_u != b.dim_u) return a.dim_u > b.dim_u;
    if (a.size != b.size) return a.size < b.size;
    return a.representative_key < b.representative_key;
  });
  return table;
}

}  // namespace hiddensums
