#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hiddensums/hidden_sum.hpp"

namespace hiddensums {

// Bricks of a translation-based round: N = brick_width * brick_count.
struct WallStructure {
  int N;
  int brick_width;
  int brick_count;
};

// True when no wall (direct sum of a proper non-empty subset of the bricks)
// is invariant under lambda.
bool proper_mixing_check(const Gf2Matrix& lambda, const WallStructure& walls);

// F8 = F2[a]/(a^3 = a + 1).  A basis order assigns the exponent of a carried
// by each of the three brick coordinates; the six orders are the candidate
// bit encodings of the field.
using BasisOrder = std::array<std::uint8_t, 3>;

struct SboxTable {
  std::array<std::uint8_t, 8> table;
  bool bijective;
};

// Evaluates a^5 x^6 + a x^5 + a^2 x^4 + a^5 x^3 + a x^2 + a x on all eight
// field elements under the given encoding.
SboxTable build_sbox(const BasisOrder& order);

// The 6x6 mixing layer of the demo cipher.
const Gf2Matrix& toy_mixing_layer();

// The 3-dimensional group inducing the brick hidden sum, and its square
// acting brick-wise on (F2)^6 (the cipher's trapdoor structure).
GeneratedGroup toy_brick_group();
const EmbeddedHiddenSum& toy_hidden_sum();

struct AffinePair {
  Gf2Matrix M;
  Gf2Vector t;
};

// Whether the map given by its full value table is affine for the hidden
// sum: builds M from the basis images in Algorithm-1 coordinates and checks
// every point.  Empty when the check fails.
std::optional<AffinePair> is_affine_wrt(const std::vector<Gf2Vector>& table,
                                        const EmbeddedHiddenSum& hs);

// Tries the six basis orders and returns the one under which the composed
// substitution/mixing map is affine for the brick-wise hidden sum.  Throws
// NoEncodingVerifies if none passes (a transcription error upstream).
BasisOrder calibrate_encoding();

enum class KeySchedule { xor_round_index, identity };
std::string schedule_name(KeySchedule s);
KeySchedule schedule_from_name(const std::string& name);

// Iterated 6-bit cipher: each round applies the parallel 3-bit S-box, the
// mixing layer, then round-key addition.
class ToyCipherSpec {
 public:
  ToyCipherSpec(const std::array<std::uint8_t, 8>& sbox, Gf2Matrix mixing, int rounds,
                KeySchedule schedule);
  // Built from the calibrated encoding and the default schedule.
  static ToyCipherSpec calibrated(int rounds = 5,
                                  KeySchedule schedule = KeySchedule::xor_round_index);

  const std::array<std::uint8_t, 8>& sbox() const { return sbox_; }
  const Gf2Matrix& mixing() const { return mixing_; }
  int rounds() const { return rounds_; }
  KeySchedule schedule() const { return schedule_; }

  Gf2Vector round_key(const Gf2Vector& key, int round) const;  // round = 1..rounds
  Gf2Vector substitute(const Gf2Vector& v) const;              // parallel S-box
  Gf2Vector encrypt(const Gf2Vector& key, const Gf2Vector& plaintext) const;
  Gf2Vector decrypt(const Gf2Vector& key, const Gf2Vector& ciphertext) const;

  // Value table of one keyless round core (substitution then mixing).
  std::vector<Gf2Vector> round_core_table() const;

 private:
  std::array<std::uint8_t, 8> sbox_;
  std::array<std::uint8_t, 8> sbox_inv_;
  Gf2Matrix mixing_, mixing_inv_;
  int rounds_;
  KeySchedule schedule_;
};

// Block-diagonal product re-standardized by the coordinate permutation that
// moves both tail spans to the end.
EmbeddedHiddenSum product_group(const StandardHiddenSum& a, const StandardHiddenSum& b);

}  // namespace hiddensums
