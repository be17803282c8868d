#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace rcc {

/// Seeded generator with every transform spelled out, so streams are
/// bit-identical across platforms and standard-library versions (std::
/// distribution objects are implementation-defined; these are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller. Two raw draws per variate; the sine
  /// companion is discarded to keep the stream stateless.
  double normal() {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  /// Exp(1) by inversion.
  double exponential() { return -std::log(1.0 - uniform01()); }

  /// Student t with 2 degrees of freedom: Z / sqrt(chi^2_2 / 2) where
  /// chi^2_2 / 2 is a unit exponential. Z is drawn first.
  double student_t2() {
    const double z = normal();
    const double e = exponential();
    return z / std::sqrt(e);
  }

  /// exp(N(0, 1)), the log-normal as printed (not mean-centered).
  double lognormal() { return std::exp(normal()); }

  /// Unbiased integer in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = gen_();
      if (r >= threshold) return r % bound;
    }
  }

  /// k distinct indices from 0..n-1, uniformly, returned sorted.
  std::vector<int> sample_without_replacement(int n, int k);

 private:
  static constexpr double kPi = 3.141592653589793238462643383279502884;
  std::mt19937_64 gen_;
};

}  // namespace rcc
