#include "harmlog/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

#include "harmlog/harmonic.hpp"
#include "harmlog/records.hpp"

namespace harmlog {

namespace {

struct Sums {
  std::uint64_t count = 0;
  std::uint64_t squared = 0;
};

void accumulate(Sums& into, std::uint64_t count, std::uint64_t squared) {
  if (__builtin_add_overflow(into.count, count, &into.count) ||
      __builtin_add_overflow(into.squared, squared, &into.squared)) {
    throw std::overflow_error("estimate_harmonic: record count sums overflow 64 bits");
  }
}

Sums run_block(std::uint64_t x, std::uint64_t first, std::uint64_t last,
               const TrialStreamFactory& streams) {
  Sums sums;
  for (std::uint64_t trial = first; trial < last; ++trial) {
    RandomStream stream = streams(trial);
    const std::uint64_t c = count_records_stream(stream, x).count;
    accumulate(sums, c, c * c);  // c <= x, and x * x is checked by the caller
  }
  return sums;
}

}  // namespace

unsigned default_parallelism() noexcept {
  return std::max(1u, std::thread::hardware_concurrency());
}

HarmonicEstimate estimate_harmonic_with(std::uint64_t x, std::uint64_t trials,
                                        unsigned parallelism,
                                        const TrialStreamFactory& streams) {
  if (x == 0) throw std::invalid_argument("estimate_harmonic: x must be positive");
  if (trials == 0) throw std::invalid_argument("estimate_harmonic: trials must be positive");
  if (parallelism == 0) {
    throw std::invalid_argument("estimate_harmonic: parallelism must be positive");
  }
  std::uint64_t x_squared;
  if (__builtin_mul_overflow(x, x, &x_squared)) {
    throw std::overflow_error("estimate_harmonic: x too large for squared counts");
  }

  const std::uint64_t workers = std::min<std::uint64_t>(parallelism, trials);
  std::vector<Sums> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t first = trials * w / workers;
      const std::uint64_t last = trials * (w + 1) / workers;
      auto job = [&, w, first, last] {
        try {
          partial[w] = run_block(x, first, last, streams);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      };
      if (workers == 1) {
        job();
      } else {
        pool.emplace_back(job);
      }
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Sums total;
  for (const auto& p : partial) accumulate(total, p.count, p.squared);

  HarmonicEstimate est;
  est.x = x;
  est.trials = trials;
  est.sum_counts = total.count;
  est.sum_squared_counts = total.squared;
  est.mean = static_cast<double>(total.count) / static_cast<double>(trials);
  if (trials > 1) {
    // n * sum(c^2) - (sum c)^2 >= 0, exact in 128 bits.
    using u128 = Rational::value_type;
    const u128 n = trials;
    const u128 centered = n * total.squared - static_cast<u128>(total.count) * total.count;
    const long double variance = static_cast<long double>(centered) /
                                 (static_cast<long double>(n) * static_cast<long double>(n - 1));
    est.sample_std = static_cast<double>(std::sqrt(variance));
    est.std_error = static_cast<double>(std::sqrt(variance / static_cast<long double>(n)));
  }
  return est;
}

HarmonicEstimate estimate_harmonic(std::uint64_t x, std::uint64_t trials,
                                   std::uint64_t master_seed, unsigned parallelism) {
  return estimate_harmonic_with(x, trials, parallelism, [master_seed](std::uint64_t trial) {
    return make_stream(master_seed, trial);
  });
}

LnEstimate to_ln_estimate(const HarmonicEstimate& harmonic) {
  LnEstimate ln;
  ln.x = harmonic.x;
  ln.value = harmonic_to_ln(harmonic.mean, harmonic.x);
  ln.harmonic = harmonic;
  ln.epsilon_used = epsilon_bounds(harmonic.x).upper;
  ln.deterministic_bias_bound = bias_bound(harmonic.x);
  ln.std_error = harmonic.std_error;
  return ln;
}

LnEstimate estimate_ln(std::uint64_t x, std::uint64_t trials,
                       std::uint64_t master_seed, unsigned parallelism) {
  return to_ln_estimate(estimate_harmonic(x, trials, master_seed, parallelism));
}

}  // namespace harmlog
