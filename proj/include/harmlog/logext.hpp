#pragma once

#include <cstdint>

#include "harmlog/estimator.hpp"

namespace harmlog {

/// p/q with p, q >= 1.
class RationalArg {
 public:
  RationalArg(std::uint64_t numerator, std::uint64_t denominator);

  std::uint64_t numerator() const noexcept { return p_; }
  std::uint64_t denominator() const noexcept { return q_; }

 private:
  std::uint64_t p_;
  std::uint64_t q_;
};

/// A value derived from two ln estimates, with a first-order error bound
/// built from each component's bias bound plus kErrorBoundSigmas standard
/// errors. The bound is approximate.
struct DerivedEstimate {
  double value = 0.0;
  double error_bound = 0.0;
  LnEstimate first;
  LnEstimate second;
};

inline constexpr double kErrorBoundSigmas = 4.0;

/// Stream id of `trial` when estimating ln(argument). Mixes both through
/// mix64 so different arguments never share a sequence of streams.
std::uint64_t argument_stream_id(std::uint64_t argument, std::uint64_t trial) noexcept;

/// ln estimate for k whose value depends only on (master_seed, k, trials).
/// Equal arguments therefore always get bit-identical estimates.
LnEstimate estimate_ln_for_argument(std::uint64_t k, std::uint64_t trials,
                                    std::uint64_t master_seed,
                                    unsigned parallelism = 1);

/// bias bound + kErrorBoundSigmas * std_error.
double component_error_bound(const LnEstimate& est) noexcept;

/// log_base(x) as ln^(x) / ln^(base). Exactly 1.0 when x == base.
/// Throws std::invalid_argument for x == 0 or base < 2.
DerivedEstimate estimate_log_base(std::uint64_t x, std::uint64_t base,
                                  std::uint64_t trials, std::uint64_t master_seed,
                                  unsigned parallelism = 1);

/// ln(p/q) as ln^(p) - ln^(q). Exactly 0.0 when p == q and exactly
/// antisymmetric under swapping p and q.
DerivedEstimate estimate_ln_rational(const RationalArg& arg, std::uint64_t trials,
                                     std::uint64_t master_seed,
                                     unsigned parallelism = 1);

}  // namespace harmlog
