#pragma once

#include <cmath>

#include "argbound/zeros.hpp"

namespace testing_support {

inline const argbound::ZeroTable& zeros100() {
  static const argbound::ZeroTable z = argbound::load_zero_table(ARGBOUND_ZEROS100);
  return z;
}

inline const argbound::ZeroTable& zeros2600() {
  static const argbound::ZeroTable z = argbound::load_zero_table(ARGBOUND_ZEROS2600);
  return z;
}

// Lambda(n) by trial division, independent of the sieve
inline double mangoldt_naive(long long n) {
  if (n < 2) return 0.0;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
    }
  }
  return std::log(static_cast<double>(n));
}

}  // namespace testing_support
