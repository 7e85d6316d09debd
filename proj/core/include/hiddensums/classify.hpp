#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hiddensums/digest.hpp"
#include "hiddensums/enumerate.hpp"
#include "hiddensums/hidden_sum.hpp"

namespace hiddensums {

// A group is determined by its table of linear parts {kappa_a}: the full key
// is the concatenation of the kappa_a row bytes over all a in packed-word
// order.  Equal map-sets give equal keys; the 128-bit digest stands in for
// the key, with collisions detected against retained full keys.
struct CanonicalKey {
  Digest128 digest;
  std::vector<std::uint8_t> bytes;  // empty unless retained
};

std::vector<std::uint8_t> canonical_key_bytes(const EmbeddedHiddenSum& g);
std::vector<std::uint8_t> canonical_key_bytes(const ValidatedGroup& g);
CanonicalKey canonical_key(const EmbeddedHiddenSum& g, bool keep_bytes = false);
CanonicalKey canonical_key(const ValidatedGroup& g, bool keep_bytes = false);

// Generating pair for GL(N, 2): the full-cycle permutation e_i -> e_{i+1}
// and the elementary transvection e_1 -> e_1 + e_2.
std::pair<Gf2Matrix, Gf2Matrix> gl_generators(int N);

// All groups with dim U = d on (F2)^N, indexed by digest.  Entries point
// back into the materialized standard forms and tail subspaces, so groups
// can be reconstructed without storing full keys.
class StratumUniverse {
 public:
  static StratumUniverse build(int N, int d, std::uint64_t cap = kDefaultEmbeddedCap);

  int dim() const { return N_; }
  int dim_u() const { return d_; }
  std::size_t size() const { return entries_.size(); }
  std::optional<std::size_t> find(const Digest128& digest) const;
  EmbeddedHiddenSum group(std::size_t index) const;

  int orbit_of(std::size_t index) const { return orbit_[index]; }
  // Marks the entry with an orbit id; false when already claimed.
  bool claim(std::size_t index, std::int32_t id) {
    if (orbit_[index] >= 0) return false;
    orbit_[index] = id;
    return true;
  }

 private:
  int N_ = 0, d_ = 0;
  std::vector<StandardHiddenSum> stds_;
  std::vector<SubspaceFrame> frames_;
  struct Entry {
    Digest128 digest;
    std::uint32_t frame, std_index;
  };
  std::vector<Entry> entries_;     // sorted by digest
  std::vector<std::int32_t> orbit_;  // -1 until assigned
};

// Conjugation orbit of the seed under the GL generating pair; the closure is
// taken inside the universe and every conjugate must be found there.
// Returns the member indices.  Throws OrbitEscapedUniverse otherwise.
std::vector<std::size_t> gl_orbit(const EmbeddedHiddenSum& seed, StratumUniverse& universe);

struct ClassInfo {
  bigint size;
  int dim_u;
  EmbeddedHiddenSum representative;           // lexicographically least full key
  std::vector<std::uint8_t> representative_key;
};

struct ClassTable {
  int N = 0;
  std::vector<ClassInfo> classes;  // dim_u descending, then size, then key
};

// Partition of all elementary abelian regular subgroups of AGL((F2)^N) into
// GL-conjugacy classes, 3 <= N <= 6.  The N = 6 run walks ~2.8M groups and
// must be enabled explicitly.
ClassTable classify_all(int N, bool allow_slow = false);

}  // namespace hiddensums
