#pragma once

#include <cstdint>

#include "aristotle/scalar.hpp"

namespace aristotle {

/// Counter-based generator: draw i is a pure function of (seed, i), so every
/// randomized check is reproducible across platforms and compilers.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next() { return at(counter_++); }
  [[nodiscard]] std::uint64_t at(std::uint64_t index) const;
  [[nodiscard]] std::uint64_t seed() const { return seed_; }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform double in [lo, hi).
  double uniform_real(double lo, double hi);

  /// num/den with num in [-max_num, max_num] and den in [1, max_den].
  Rational rational(std::int64_t max_num = 24, std::int64_t max_den = 8);

  /// Backend-dispatching sample: small rationals or doubles of similar range.
  template <Scalar T>
  T scalar() {
    if constexpr (ScalarTraits<T>::exact) {
      return rational();
    } else {
      return uniform_real(-3.0, 3.0);
    }
  }

  /// Like scalar() but never zero.
  template <Scalar T>
  T nonzero_scalar() {
    for (;;) {
      T v = scalar<T>();
      if (!(v == T(0))) return v;
    }
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace aristotle
