#pragma once

#include <random>

#include "vir/scalar.hpp"

namespace vir::test {

/// Small pseudo-random rationals for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Scalar rational(int num = 9, int den = 5) {
    Scalar x(integer(-num, num), integer(1, den));
    x.canonicalize();
    return x;
  }

  Scalar nonzero(int num = 9, int den = 5) {
    for (;;) {
      Scalar x = rational(num, den);
      if (!is_zero(x)) return x;
    }
  }

  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace vir::test
