#pragma once

#include <cstdint>
#include <random>

#include "hlab/linalg.hpp"

namespace hlab {

/// Seeded generator with a fixed integer mapping, so draws are identical on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t k) { return engine_() % k; }
  long long between(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  /// p/q with p in [lo, hi] and q in [1, max_den].
  Rational rational(long long lo, long long hi, long long max_den) {
    const long long p = between(lo, hi);
    const long long q = between(1, max_den);
    return Rational(mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(q)));
  }
  VecQ vector(Index n, long long lo, long long hi, long long max_den) {
    VecQ v(n);
    for (Index i = 0; i < n; ++i) v(i) = rational(lo, hi, max_den);
    return v;
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace hlab
