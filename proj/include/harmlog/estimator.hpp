#pragma once

#include <cstdint>
#include <functional>

#include "harmlog/rng.hpp"

namespace harmlog {

/// Trials used when the caller does not choose.
inline constexpr std::uint64_t kDefaultTrials = 1000;

/*
 * Aggregate of n independent record-count trials of length x.
 *
 * Counts are accumulated exactly as integers (sum and sum of squares), so the
 * aggregate does not depend on the order trials finish in. mean estimates
 * H_x. sample_std uses the n - 1 divisor; with a single trial it is reported
 * as 0, as is std_error.
 */
struct HarmonicEstimate {
  std::uint64_t x = 0;
  std::uint64_t trials = 0;
  std::uint64_t sum_counts = 0;
  std::uint64_t sum_squared_counts = 0;
  double mean = 0.0;
  double sample_std = 0.0;
  double std_error = 0.0;

  friend bool operator==(const HarmonicEstimate&, const HarmonicEstimate&) = default;
};

/// ln x estimate: harmonic.mean - gamma - epsilon_used.
struct LnEstimate {
  std::uint64_t x = 0;
  double value = 0.0;
  HarmonicEstimate harmonic;
  double epsilon_used = 0.0;             // 1/(2x)
  double deterministic_bias_bound = 0.0; // 1/(2x(x+1))
  double std_error = 0.0;                // same as harmonic.std_error

  friend bool operator==(const LnEstimate&, const LnEstimate&) = default;
};

/// Maps a trial index to the stream that trial consumes.
using TrialStreamFactory = std::function<RandomStream(std::uint64_t trial)>;

/// Hardware concurrency, at least 1.
unsigned default_parallelism() noexcept;

/// Runs `trials` trials of length x on up to `parallelism` threads. Trial i
/// draws from streams(i). Throws std::invalid_argument on zero x, trials or
/// parallelism and std::overflow_error if the integer sums would wrap.
HarmonicEstimate estimate_harmonic_with(std::uint64_t x, std::uint64_t trials,
                                        unsigned parallelism,
                                        const TrialStreamFactory& streams);

/// Trial i uses stream (master_seed, i).
HarmonicEstimate estimate_harmonic(std::uint64_t x, std::uint64_t trials,
                                   std::uint64_t master_seed,
                                   unsigned parallelism = 1);

LnEstimate to_ln_estimate(const HarmonicEstimate& harmonic);

LnEstimate estimate_ln(std::uint64_t x, std::uint64_t trials,
                       std::uint64_t master_seed, unsigned parallelism = 1);

}  // namespace harmlog
