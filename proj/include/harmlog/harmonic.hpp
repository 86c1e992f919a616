#pragma once

#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <vector>

namespace harmlog {

/// Euler-Mascheroni constant at full double precision.
inline constexpr double euler_gamma = std::numbers::egamma;

/*
 * Exact nonnegative rational with 128-bit numerator and denominator, kept in
 * lowest terms. Only wide enough for the small-x oracles in this module
 * (H_30 has a 13-digit denominator); arithmetic that would overflow throws
 * std::overflow_error.
 */
class Rational {
 public:
  __extension__ typedef unsigned __int128 value_type;

  constexpr Rational() = default;
  Rational(value_type numerator, value_type denominator);

  value_type numerator() const noexcept { return num_; }
  value_type denominator() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }
  double to_double() const noexcept;

  Rational& operator+=(const Rational& rhs);
  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  value_type num_ = 0;
  value_type den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// The interval (1/(2(x+1)), 1/(2x)) containing H_x - ln x - gamma.
struct EpsilonBounds {
  std::uint64_t x = 0;
  double lower = 0.0;
  double upper = 0.0;
};

/// H_x = sum_{i=1}^{x} 1/i in double precision, smallest terms added first.
double exact_harmonic(std::uint64_t x);

inline constexpr std::uint64_t kMaxExactRationalX = 30;

/// H_x as an exact fraction, 1 <= x <= 30.
Rational exact_harmonic_rational(std::uint64_t x);

EpsilonBounds epsilon_bounds(std::uint64_t x);

/// ln x ~= h - gamma - 1/(2x), using the upper end of the epsilon interval.
double harmonic_to_ln(double h, std::uint64_t x);

/// 1/(2x(x+1)): bound on the deterministic error of harmonic_to_ln applied to
/// the exact H_x. The conversion always underestimates ln x.
double bias_bound(std::uint64_t x);

inline constexpr std::uint64_t kMaxOracleX = 8;

/// Histogram of record counts over all x! orderings of 1..x; element k is the
/// number of orderings with exactly k records (element 0 is always zero).
/// Brute force, 1 <= x <= 8.
std::vector<std::uint64_t> record_count_histogram(std::uint64_t x);

/// Exact mean record count over all x! orderings of 1..x, 1 <= x <= 8.
Rational oracle_mean_records(std::uint64_t x);

}  // namespace harmlog
