#pragma once

// Counter-based random generator built on SplitMix64.  Every draw hashes
// (seed, stream, counter), so forking independent streams for replicas,
// tasks and rounds is cheap and reproducible regardless of draw order.

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace metabandit {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  // Derive an independent generator keyed by `stream` under this one.
  SplitRng fork(std::uint64_t stream) const {
    return SplitRng(detail::splitmix64(seed_ ^ detail::splitmix64(stream_ + 0x632be59bd9b4e019ULL)),
                    stream);
  }

  std::uint64_t next_u64() {
    return detail::splitmix64(seed_ ^ detail::splitmix64(stream_ * 0xd1342543de82ef95ULL + counter_++));
  }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("SplitRng::uniform_int: n must be positive");
    // Rejection sampling to avoid modulo bias.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

  // Standard normal via Box-Muller.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

}  // namespace metabandit
