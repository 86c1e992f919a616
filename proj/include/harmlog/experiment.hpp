#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "harmlog/estimator.hpp"

namespace harmlog {

/// Estimates ln at x = base^k for k = 1..max_power. Defaults reproduce the
/// published run: powers of 4 up to 4^8, 1000 trials each.
struct ExperimentConfig {
  std::uint64_t base = 4;
  std::uint64_t max_power = 8;
  std::uint64_t trials = kDefaultTrials;
  std::uint64_t master_seed = 0;
  unsigned parallelism = default_parallelism();

  /// Throws std::invalid_argument for a bad field or when base^max_power
  /// does not fit in 64 bits.
  void validate() const;
};

struct ExperimentRow {
  std::uint64_t x = 0;
  double h_estimate = 0.0;
  double approx_ln = 0.0;
  double reference_ln = 0.0;
  double abs_error = 0.0;
  std::optional<double> rel_error;  // absent when reference_ln == 0
  double std_error = 0.0;

  friend bool operator==(const ExperimentRow&, const ExperimentRow&) = default;
};

/// One row per power, ascending x. Each row uses per-argument seeding, so a
/// row's numbers do not depend on max_power.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

inline constexpr const char* kCsvHeader =
    "x,h_estimate,approx_ln,reference_ln,abs_error,rel_error,std_error";

/// Shortest-safe round-trip rendering: 17 significant digits.
std::string format_real(double v);

/// Header plus one LF-terminated line per row. Throws
/// std::ios_base::failure if the sink goes bad.
void write_csv(std::span<const ExperimentRow> rows, std::ostream& sink);

/// Inverse of write_csv. Throws std::runtime_error on malformed input.
std::vector<ExperimentRow> read_csv(std::istream& source);

}  // namespace harmlog
