#pragma once

#include <cstdint>
#include <random>

namespace hyperring {

using Rng = std::mt19937_64;

// Uniform draw from [lo, hi]. Written out by hand because the standard
// distributions are not reproducible across library implementations.
inline std::int64_t draw(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const auto limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

}  // namespace hyperring
