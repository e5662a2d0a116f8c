#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace pace::core {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based random stream. The i-th draw is a pure function of
// (key, i), so a stream can be copied, split, or replayed without any
// shared state. Child streams derive their key from (parent key, id).
class RngStream {
 public:
  RngStream() = default;
  explicit RngStream(std::uint64_t seed) : key_(mix64(seed ^ 0x6a09e667f3bcc909ULL)) {}

  // Independent stream for (this key, id); does not advance this stream.
  [[nodiscard]] RngStream split(std::uint64_t id) const {
    RngStream child;
    child.key_ = mix64(key_ ^ mix64(id + 0x9e3779b97f4a7c15ULL));
    return child;
  }

  std::uint64_t next_u64() noexcept {
    const std::uint64_t c = counter_++;
    return mix64(key_ + (c + 1) * 0x9e3779b97f4a7c15ULL);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n). Lemire-free modulo reduction is fine at these sizes.
  std::uint64_t below(std::uint64_t n) noexcept { return n == 0 ? 0 : next_u64() % n; }

  bool bernoulli(double p) noexcept { return uniform() < p; }

  // Box-Muller; one draw per call keeps the counter arithmetic simple.
  double normal() noexcept {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  [[nodiscard]] std::uint64_t key() const noexcept { return key_; }
  [[nodiscard]] std::uint64_t counter() const noexcept { return counter_; }

  friend bool operator==(const RngStream&, const RngStream&) = default;

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace pace::core
