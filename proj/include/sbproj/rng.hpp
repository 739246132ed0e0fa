#pragma once

#include <cmath>
#include <cstdint>

namespace sbproj {

// All randomness in this project is derived from one counter-based scheme so
// that matrices, Monte Carlo trials and experiment runs regenerate bit-exactly
// from (parameters, seed) alone, in any generation order. The constants are
// the splitmix64 finalizer and the 64-bit golden-ratio increment.

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

// 64-bit avalanche mixer (splitmix64 finalizer).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

// Key of substream `idx` under `seed`: matrix rows, Monte Carlo trials and
// experiment runs all derive their streams through this one function.
constexpr std::uint64_t substream(std::uint64_t seed, std::uint64_t idx) noexcept {
  return mix64(seed ^ (kGoldenGamma * (idx + 1)));
}

// Counter-based generator: draw k of stream `key` is mix64(key + k * gamma),
// i.e. splitmix64 starting at state `key`. No hidden state beyond the counter,
// so a stream is a pure function of its key.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

  std::uint64_t next_u64() noexcept {
    counter_ += kGoldenGamma;
    return mix64(key_ + counter_);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_unit() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in (0, 1].
  double next_unit_positive() noexcept {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform integer in [0, n); rejection removes the modulo bias.
  std::uint64_t next_below(std::uint64_t n) noexcept {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  // Standard normal by inverting the normal CDF (Wichura's AS241, double
  // precision) on one mid-point uniform. Exactly one counter draw per
  // variate, so variate k of a stream is a pure function of (key, k) and
  // generators that draw one value per matrix entry stay entry-aligned
  // across models sharing a seed.
  double next_gaussian() noexcept {
    const double u = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    return inverse_normal_cdf(u);
  }

  static double inverse_normal_cdf(double p) noexcept;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace sbproj
