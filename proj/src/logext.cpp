#include "harmlog/logext.hpp"

#include <cmath>
#include <stdexcept>

#include "harmlog/rng.hpp"

namespace harmlog {

namespace {
constexpr std::uint64_t kArgumentTag = 0x6c6f67657874ull;  // "logext"
}

RationalArg::RationalArg(std::uint64_t numerator, std::uint64_t denominator)
    : p_(numerator), q_(denominator) {
  if (p_ == 0 || q_ == 0) {
    throw std::invalid_argument("RationalArg: numerator and denominator must be positive");
  }
}

std::uint64_t argument_stream_id(std::uint64_t argument, std::uint64_t trial) noexcept {
  return mix64(mix64(argument ^ kArgumentTag) + trial);
}

LnEstimate estimate_ln_for_argument(std::uint64_t k, std::uint64_t trials,
                                    std::uint64_t master_seed, unsigned parallelism) {
  if (k == 0) throw std::invalid_argument("estimate_ln_for_argument: k must be positive");
  const auto harmonic =
      estimate_harmonic_with(k, trials, parallelism, [k, master_seed](std::uint64_t trial) {
        return make_stream(master_seed, argument_stream_id(k, trial));
      });
  return to_ln_estimate(harmonic);
}

double component_error_bound(const LnEstimate& est) noexcept {
  return est.deterministic_bias_bound + kErrorBoundSigmas * est.std_error;
}

DerivedEstimate estimate_log_base(std::uint64_t x, std::uint64_t base,
                                  std::uint64_t trials, std::uint64_t master_seed,
                                  unsigned parallelism) {
  if (x == 0) throw std::invalid_argument("estimate_log_base: x must be positive");
  if (base < 2) throw std::invalid_argument("estimate_log_base: base must be at least 2");
  DerivedEstimate out;
  out.first = estimate_ln_for_argument(x, trials, master_seed, parallelism);
  out.second = x == base ? out.first
                         : estimate_ln_for_argument(base, trials, master_seed, parallelism);
  const double num = out.first.value;
  const double den = out.second.value;
  if (den == 0.0) {
    throw std::domain_error("estimate_log_base: estimated ln(base) is zero");
  }
  out.value = num / den;
  if (x != base) {
    // d(a/b) ~ da/|b| + |a| db / b^2
    out.error_bound = component_error_bound(out.first) / std::abs(den) +
                      std::abs(num) * component_error_bound(out.second) / (den * den);
  }
  return out;
}

DerivedEstimate estimate_ln_rational(const RationalArg& arg, std::uint64_t trials,
                                     std::uint64_t master_seed, unsigned parallelism) {
  const std::uint64_t p = arg.numerator();
  const std::uint64_t q = arg.denominator();
  DerivedEstimate out;
  out.first = estimate_ln_for_argument(p, trials, master_seed, parallelism);
  out.second = p == q ? out.first
                      : estimate_ln_for_argument(q, trials, master_seed, parallelism);
  out.value = out.first.value - out.second.value;
  out.error_bound = p == q ? 0.0
                           : component_error_bound(out.first) + component_error_bound(out.second);
  return out;
}

}  // namespace harmlog
