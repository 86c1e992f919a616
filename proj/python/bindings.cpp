#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "harmlog/cli.hpp"
#include "harmlog/estimator.hpp"
#include "harmlog/experiment.hpp"
#include "harmlog/harmonic.hpp"
#include "harmlog/logext.hpp"
#include "harmlog/records.hpp"
#include "harmlog/rng.hpp"

namespace py = pybind11;
using namespace harmlog;

namespace {

py::tuple rational_tuple(const Rational& r) {
  // Small-x oracles only; both parts fit in 64 bits.
  return py::make_tuple(static_cast<std::uint64_t>(r.numerator()),
                        static_cast<std::uint64_t>(r.denominator()));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Harmonic numbers and logarithms from running-maximum update counts.";

  m.attr("euler_gamma") = euler_gamma;
  m.attr("csv_header") = kCsvHeader;

  py::class_<RandomStream>(m, "RandomStream")
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("master_seed"), py::arg("stream_id"))
      .def_property_readonly("master_seed", &RandomStream::master_seed)
      .def_property_readonly("stream_id", &RandomStream::stream_id)
      .def("next_uniform", &RandomStream::next_uniform)
      .def("next_u64", &RandomStream::next_u64);

  py::class_<HarmonicEstimate>(m, "HarmonicEstimate")
      .def_readonly("x", &HarmonicEstimate::x)
      .def_readonly("trials", &HarmonicEstimate::trials)
      .def_readonly("sum_counts", &HarmonicEstimate::sum_counts)
      .def_readonly("sum_squared_counts", &HarmonicEstimate::sum_squared_counts)
      .def_readonly("mean", &HarmonicEstimate::mean)
      .def_readonly("sample_std", &HarmonicEstimate::sample_std)
      .def_readonly("std_error", &HarmonicEstimate::std_error)
      .def("__eq__", [](const HarmonicEstimate& a, const HarmonicEstimate& b) { return a == b; });

  py::class_<LnEstimate>(m, "LnEstimate")
      .def_readonly("x", &LnEstimate::x)
      .def_readonly("value", &LnEstimate::value)
      .def_readonly("harmonic", &LnEstimate::harmonic)
      .def_readonly("epsilon_used", &LnEstimate::epsilon_used)
      .def_readonly("deterministic_bias_bound", &LnEstimate::deterministic_bias_bound)
      .def_readonly("std_error", &LnEstimate::std_error)
      .def("__eq__", [](const LnEstimate& a, const LnEstimate& b) { return a == b; });

  py::class_<DerivedEstimate>(m, "DerivedEstimate")
      .def_readonly("value", &DerivedEstimate::value)
      .def_readonly("error_bound", &DerivedEstimate::error_bound)
      .def_readonly("first", &DerivedEstimate::first)
      .def_readonly("second", &DerivedEstimate::second);

  py::class_<ExperimentRow>(m, "ExperimentRow")
      .def_readonly("x", &ExperimentRow::x)
      .def_readonly("h_estimate", &ExperimentRow::h_estimate)
      .def_readonly("approx_ln", &ExperimentRow::approx_ln)
      .def_readonly("reference_ln", &ExperimentRow::reference_ln)
      .def_readonly("abs_error", &ExperimentRow::abs_error)
      .def_readonly("rel_error", &ExperimentRow::rel_error)
      .def_readonly("std_error", &ExperimentRow::std_error);

  m.def("count_records", [](const std::vector<double>& values) {
    return count_records_list(std::span<const double>(values)).count;
  }, py::arg("values"));
  m.def("count_records_stream", [](RandomStream& stream, std::uint64_t x) {
    return count_records_stream(stream, x).count;
  }, py::arg("stream"), py::arg("x"));

  m.def("exact_harmonic", &exact_harmonic, py::arg("x"));
  m.def("exact_harmonic_rational", [](std::uint64_t x) {
    return rational_tuple(exact_harmonic_rational(x));
  }, py::arg("x"), "H_x as a (numerator, denominator) pair, 1 <= x <= 30.");
  m.def("oracle_mean_records", [](std::uint64_t x) {
    return rational_tuple(oracle_mean_records(x));
  }, py::arg("x"));
  m.def("record_count_histogram", &record_count_histogram, py::arg("x"));
  m.def("epsilon_bounds", [](std::uint64_t x) {
    const auto b = epsilon_bounds(x);
    return py::make_tuple(b.lower, b.upper);
  }, py::arg("x"));
  m.def("harmonic_to_ln", &harmonic_to_ln, py::arg("h"), py::arg("x"));
  m.def("bias_bound", &bias_bound, py::arg("x"));

  m.def("default_parallelism", &default_parallelism);
  m.def("estimate_harmonic", &estimate_harmonic, py::arg("x"),
        py::arg("trials") = kDefaultTrials, py::arg("seed") = 0, py::arg("parallelism") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("estimate_ln", &estimate_ln, py::arg("x"), py::arg("trials") = kDefaultTrials,
        py::arg("seed") = 0, py::arg("parallelism") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("estimate_ln_for_argument", &estimate_ln_for_argument, py::arg("k"),
        py::arg("trials") = kDefaultTrials, py::arg("seed") = 0, py::arg("parallelism") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("estimate_log_base", &estimate_log_base, py::arg("x"), py::arg("base"),
        py::arg("trials") = kDefaultTrials, py::arg("seed") = 0, py::arg("parallelism") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("estimate_ln_rational", [](std::uint64_t p, std::uint64_t q, std::uint64_t trials,
                                   std::uint64_t seed, unsigned parallelism) {
    return estimate_ln_rational(RationalArg(p, q), trials, seed, parallelism);
  }, py::arg("p"), py::arg("q"), py::arg("trials") = kDefaultTrials, py::arg("seed") = 0,
     py::arg("parallelism") = 1, py::call_guard<py::gil_scoped_release>());

  m.def("run_experiment", [](std::uint64_t base, std::uint64_t max_power, std::uint64_t trials,
                             std::uint64_t seed, unsigned parallelism) {
    ExperimentConfig config;
    config.base = base;
    config.max_power = max_power;
    config.trials = trials;
    config.master_seed = seed;
    config.parallelism = parallelism;
    py::gil_scoped_release release;
    return run_experiment(config);
  }, py::arg("base") = 4, py::arg("max_power") = 8, py::arg("trials") = kDefaultTrials,
     py::arg("seed") = 0, py::arg("parallelism") = default_parallelism());
  m.def("experiment_csv", [](const std::vector<ExperimentRow>& rows) {
    std::ostringstream os;
    write_csv(rows, os);
    return os.str();
  }, py::arg("rows"));

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
