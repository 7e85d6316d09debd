#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>

namespace hiddensums {

struct Digest128 {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;
  friend auto operator<=>(const Digest128&, const Digest128&) = default;
};

// 128-bit MurmurHash3-style digest, fixed seed; stable across runs and
// machines (little-endian byte interpretation is done explicitly).
Digest128 digest128(std::span<const std::uint8_t> bytes);

}  // namespace hiddensums
