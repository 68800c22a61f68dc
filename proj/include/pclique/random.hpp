#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace pclique {

// SplitMix64 finalizer. Used for every seed derivation in the project.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Order-sensitive combination of a running seed with one more word.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t word) noexcept {
  return splitmix64(seed ^ splitmix64(word + 0x632BE59BD9B4E019ULL));
}

// FNV-1a, so substream labels are stable across builds.
constexpr std::uint64_t label_hash(std::string_view label) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Every random draw in the library comes from a std::mt19937_64 seeded by
// substream(seed, label). Labels in use: "poisson", "positions", "clique".
using Rng = std::mt19937_64;

inline Rng substream(std::uint64_t seed, std::string_view label) {
  return Rng(mix_seed(seed, label_hash(label)));
}

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace pclique
