#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace optsel {

// Deterministic, seedable, counter-based random generator. Every stochastic
// step in this library (bootstrap draws, feature subsets, dataset splits)
// goes through CounterRng so that a (seed, stream) pair pins the exact
// sequence, independent of platform, thread schedule, or call site.
//
// The generator is SplitMix64 evaluated in counter mode:
//
//   golden = 0x9E3779B97F4A7C15
//   mix64(z): z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//             z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//             return z ^ (z >> 31)
//   output(key, i) = mix64(key + golden * i)   for i = 1, 2, 3, ...
//   derive_stream(seed, index) = mix64(mix64(seed + golden) ^ (golden * (index + 1)))
//
// Derived quantities:
//   next_below(n) = floor(next_u64() * n / 2^64)          (multiply-shift)
//   next_unit()   = (next_u64() >> 11) * 2^-53            (double in [0,1))
//   shuffle       = Fisher-Yates from the back using next_below
//
// These formulas are the contract; independent implementations that follow
// them reproduce identical models byte for byte.

inline constexpr std::uint64_t kGolden64 = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Independent stream key for substream `index` of a master seed.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
  return mix64(mix64(seed + kGolden64) ^ (kGolden64 * (index + 1)));
}

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() {
    counter_ += 1;
    return mix64(key_ + kGolden64 * counter_);
  }

  /// Uniform integer in [0, bound). bound must be nonzero.
  std::uint64_t next_below(std::uint64_t bound) {
    using u128 = unsigned __int128;
    return static_cast<std::uint64_t>((static_cast<u128>(next_u64()) * bound) >> 64);
  }

  /// Uniform double in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace optsel
