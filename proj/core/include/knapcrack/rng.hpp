#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace knapcrack {

using Rng = std::mt19937_64;

// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed for a sub-task (a sweep cell, an attacked block). Absorbing each
// coordinate through the bijective mixer keeps streams distinct for
// distinct coordinate tuples under the same base seed.
constexpr std::uint64_t derive_seed(std::uint64_t base,
                                    std::initializer_list<std::uint64_t> coords) noexcept {
  std::uint64_t s = mix64(base);
  for (std::uint64_t c : coords) {
    s = mix64(s ^ c);
  }
  return s;
}

}  // namespace knapcrack
