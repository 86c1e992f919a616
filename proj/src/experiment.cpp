#include "harmlog/experiment.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <system_error>

#include "harmlog/logext.hpp"

namespace harmlog {

namespace {

std::uint64_t power_of(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(out, base, &out)) {
      throw std::invalid_argument("experiment: base^max_power overflows 64 bits");
    }
  }
  return out;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename T>
T parse_field(std::string_view field) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::runtime_error("read_csv: malformed field '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (base < 2) throw std::invalid_argument("experiment: base must be at least 2");
  if (max_power == 0) throw std::invalid_argument("experiment: max_power must be positive");
  if (trials == 0) throw std::invalid_argument("experiment: trials must be positive");
  if (parallelism == 0) throw std::invalid_argument("experiment: parallelism must be positive");
  power_of(base, max_power);
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config) {
  config.validate();
  std::vector<ExperimentRow> rows;
  rows.reserve(config.max_power);
  std::uint64_t x = 1;
  for (std::uint64_t k = 1; k <= config.max_power; ++k) {
    x *= config.base;
    const LnEstimate est =
        estimate_ln_for_argument(x, config.trials, config.master_seed, config.parallelism);
    ExperimentRow row;
    row.x = x;
    row.h_estimate = est.harmonic.mean;
    row.approx_ln = est.value;
    row.reference_ln = std::log(static_cast<double>(x));
    row.abs_error = std::abs(row.approx_ln - row.reference_ln);
    if (row.reference_ln != 0.0) row.rel_error = row.abs_error / std::abs(row.reference_ln);
    row.std_error = est.std_error;
    rows.push_back(row);
  }
  return rows;
}

std::string format_real(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  if (ec != std::errc{}) throw std::runtime_error("format_real: conversion failed");
  return std::string(buf, ptr);
}

void write_csv(std::span<const ExperimentRow> rows, std::ostream& sink) {
  if (rows.empty()) throw std::invalid_argument("write_csv: no rows");
  sink << kCsvHeader << '\n';
  for (const auto& r : rows) {
    sink << r.x << ',' << format_real(r.h_estimate) << ',' << format_real(r.approx_ln) << ','
         << format_real(r.reference_ln) << ',' << format_real(r.abs_error) << ','
         << (r.rel_error ? format_real(*r.rel_error) : std::string()) << ','
         << format_real(r.std_error) << '\n';
  }
  sink.flush();
  if (!sink) throw std::ios_base::failure("write_csv: write to sink failed");
}

std::vector<ExperimentRow> read_csv(std::istream& source) {
  std::string line;
  if (!std::getline(source, line) || line != kCsvHeader) {
    throw std::runtime_error("read_csv: missing or unexpected header");
  }
  std::vector<ExperimentRow> rows;
  while (std::getline(source, line)) {
    const auto f = split_fields(line);
    if (f.size() != 7) throw std::runtime_error("read_csv: expected 7 fields");
    ExperimentRow r;
    r.x = parse_field<std::uint64_t>(f[0]);
    r.h_estimate = parse_field<double>(f[1]);
    r.approx_ln = parse_field<double>(f[2]);
    r.reference_ln = parse_field<double>(f[3]);
    r.abs_error = parse_field<double>(f[4]);
    if (!f[5].empty()) r.rel_error = parse_field<double>(f[5]);
    r.std_error = parse_field<double>(f[6]);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace harmlog
