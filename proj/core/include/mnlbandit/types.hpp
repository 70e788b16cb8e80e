#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace mnlbandit {

// Items are 0-based internally. Anything user-facing (CLI output, config
// files, CSV dumps) shifts to 1-based.
using Item = std::size_t;
using ItemList = std::vector<Item>;

// Round index t, starting at 1.
using Round = std::uint64_t;

using Rng = std::mt19937_64;

// Uniform double in [0, 1) built from the top 53 bits, so draws do not depend
// on the standard library's distribution implementation.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection; bound must be positive.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % bound;
}

enum class Objective { winner, top_k };

}  // namespace mnlbandit
