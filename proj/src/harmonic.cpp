#include "harmlog/harmonic.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>

#include "harmlog/records.hpp"

namespace harmlog {

namespace {

using u128 = Rational::value_type;

u128 gcd128(u128 a, u128 b) noexcept {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 checked_mul(u128 a, u128 b) {
  u128 out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("Rational: 128-bit overflow");
  }
  return out;
}

u128 checked_add(u128 a, u128 b) {
  u128 out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("Rational: 128-bit overflow");
  }
  return out;
}

void require_positive(std::uint64_t x, const char* what) {
  if (x == 0) {
    throw std::invalid_argument(std::string(what) + ": x must be positive");
  }
}

std::string to_decimal(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace

Rational::Rational(value_type numerator, value_type denominator)
    : num_(numerator), den_(denominator) {
  if (den_ == 0) {
    throw std::invalid_argument("Rational: zero denominator");
  }
  const u128 g = gcd128(num_, den_);
  num_ /= g;
  den_ /= g;
}

double Rational::to_double() const noexcept {
  return static_cast<double>(static_cast<long double>(num_) /
                             static_cast<long double>(den_));
}

Rational& Rational::operator+=(const Rational& rhs) {
  // a/b + c/d = (a*(d/g) + c*(b/g)) / (b/g*d) with g = gcd(b, d)
  const u128 g = gcd128(den_, rhs.den_);
  const u128 num = checked_add(checked_mul(num_, rhs.den_ / g),
                               checked_mul(rhs.num_, den_ / g));
  const u128 den = checked_mul(den_ / g, rhs.den_);
  *this = Rational(num, den);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << to_decimal(r.numerator()) << '/' << to_decimal(r.denominator());
}

double exact_harmonic(std::uint64_t x) {
  require_positive(x, "exact_harmonic");
  double sum = 0.0;
  for (std::uint64_t i = x; i >= 1; --i) {
    sum += 1.0 / static_cast<double>(i);
  }
  return sum;
}

Rational exact_harmonic_rational(std::uint64_t x) {
  if (x == 0 || x > kMaxExactRationalX) {
    throw std::invalid_argument("exact_harmonic_rational: x must be in [1, 30]");
  }
  Rational sum;
  for (std::uint64_t i = 1; i <= x; ++i) {
    sum += Rational(1, i);
  }
  if (x > 1 && sum.is_integer()) {
    throw std::logic_error("exact_harmonic_rational: H_x integral for x > 1");
  }
  return sum;
}

EpsilonBounds epsilon_bounds(std::uint64_t x) {
  require_positive(x, "epsilon_bounds");
  const double xd = static_cast<double>(x);
  return {x, 1.0 / (2.0 * (xd + 1.0)), 1.0 / (2.0 * xd)};
}

double harmonic_to_ln(double h, std::uint64_t x) {
  require_positive(x, "harmonic_to_ln");
  return h - euler_gamma - 1.0 / (2.0 * static_cast<double>(x));
}

double bias_bound(std::uint64_t x) {
  require_positive(x, "bias_bound");
  const double xd = static_cast<double>(x);
  return 1.0 / (2.0 * xd * (xd + 1.0));
}

std::vector<std::uint64_t> record_count_histogram(std::uint64_t x) {
  if (x == 0 || x > kMaxOracleX) {
    throw std::invalid_argument("record_count_histogram: x must be in [1, 8]");
  }
  std::vector<std::uint64_t> perm(x);
  std::iota(perm.begin(), perm.end(), std::uint64_t{1});
  std::vector<std::uint64_t> hist(x + 1, 0);
  do {
    ++hist[count_records_list(std::span<const std::uint64_t>(perm)).count];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return hist;
}

Rational oracle_mean_records(std::uint64_t x) {
  if (x == 0 || x > kMaxOracleX) {
    throw std::invalid_argument("oracle_mean_records: x must be in [1, 8]");
  }
  const auto hist = record_count_histogram(x);
  u128 total = 0;
  u128 orderings = 0;
  for (std::size_t k = 0; k < hist.size(); ++k) {
    total += static_cast<u128>(k) * hist[k];
    orderings += hist[k];
  }
  return Rational(total, orderings);
}

}  // namespace harmlog
