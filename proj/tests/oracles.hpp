#pragma once

// Independent reference computations for tests. Nothing here calls into the
// library.

#include <cmath>
#include <cstdint>
#include <vector>

namespace harmlog::testing {

/// Unsigned Stirling numbers of the first kind c(n, k), 0 <= k <= n, via
/// c(n, k) = c(n-1, k-1) + (n-1) c(n-1, k).
inline std::vector<std::vector<std::uint64_t>> stirling_first_table(std::uint64_t max_n) {
  std::vector<std::vector<std::uint64_t>> c(max_n + 1);
  c[0] = {1};
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    c[n].assign(n + 1, 0);
    for (std::uint64_t k = 1; k <= n; ++k) {
      const std::uint64_t carry = k - 1 < c[n - 1].size() ? c[n - 1][k - 1] : 0;
      const std::uint64_t stay = k < c[n - 1].size() ? c[n - 1][k] : 0;
      c[n][k] = carry + (n - 1) * stay;
    }
  }
  return c;
}

/// sum_{i=1}^{x} 1/i^power in long double, ascending order (differs from
/// the library's descending double sum).
inline long double harmonic_power(std::uint64_t x, int power) {
  long double sum = 0.0L;
  for (std::uint64_t i = 1; i <= x; ++i) {
    sum += 1.0L / std::pow(static_cast<long double>(i), power);
  }
  return sum;
}

/// Variance of the record count of a random ordering of length x. Record
/// indicators are independent Bernoulli(1/i), so Var = sum (1/i)(1 - 1/i).
inline double record_count_variance(std::uint64_t x) {
  return static_cast<double>(harmonic_power(x, 1) - harmonic_power(x, 2));
}

inline std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace harmlog::testing
