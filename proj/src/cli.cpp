#include "harmlog/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "harmlog/estimator.hpp"
#include "harmlog/experiment.hpp"
#include "harmlog/harmonic.hpp"
#include "harmlog/logext.hpp"

namespace harmlog {

namespace {

enum class Format { table, csv };

struct CommonOptions {
  std::uint64_t trials = kDefaultTrials;
  std::uint64_t seed = 0;
  unsigned parallelism = default_parallelism();
  Format format = Format::table;
  std::string out;
};

using Record = std::vector<std::pair<std::string, std::string>>;

std::string integer(std::uint64_t v) { return std::to_string(v); }

void print_record(const Record& rec, Format format, std::ostream& os) {
  if (format == Format::csv) {
    for (std::size_t i = 0; i < rec.size(); ++i) os << (i ? "," : "") << rec[i].first;
    os << '\n';
    for (std::size_t i = 0; i < rec.size(); ++i) os << (i ? "," : "") << rec[i].second;
    os << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [key, value] : rec) width = std::max(width, key.size());
  for (const auto& [key, value] : rec) {
    os << std::left << std::setw(static_cast<int>(width)) << key << "  " << value << '\n';
  }
}

void print_experiment_table(const std::vector<ExperimentRow>& rows, std::ostream& os) {
  constexpr int w = 22;
  os << std::right << std::setw(12) << "x" << std::setw(w) << "h_estimate" << std::setw(w)
     << "approx_ln" << std::setw(w) << "reference_ln" << std::setw(w) << "abs_error"
     << std::setw(w) << "rel_error" << std::setw(w) << "std_error" << '\n';
  for (const auto& r : rows) {
    os << std::setw(12) << r.x << std::setw(w) << format_real(r.h_estimate) << std::setw(w)
       << format_real(r.approx_ln) << std::setw(w) << format_real(r.reference_ln)
       << std::setw(w) << format_real(r.abs_error) << std::setw(w)
       << (r.rel_error ? format_real(*r.rel_error) : std::string("-")) << std::setw(w)
       << format_real(r.std_error) << '\n';
  }
}

void add_common(CLI::App& cmd, CommonOptions& opts) {
  const auto positive = CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max());
  cmd.add_option("--trials,-n", opts.trials, "Independent trials averaged")
      ->check(positive)
      ->capture_default_str();
  cmd.add_option("--seed,-s", opts.seed, "Master seed")->capture_default_str();
  cmd.add_option("--parallelism,-j", opts.parallelism, "Worker threads")
      ->check(CLI::Range(1u, std::numeric_limits<unsigned>::max()));
  const std::map<std::string, Format> formats{{"table", Format::table}, {"csv", Format::csv}};
  cmd.add_option("--format", opts.format, "Output format: table or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd.add_option("--out,-o", opts.out, "Write results to this file instead of stdout");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Harmonic numbers and logarithms from running-maximum update counts"};
  app.name("harmlog");
  app.require_subcommand(1);

  const auto positive = CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max());
  const auto at_least_two = CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max());

  CommonOptions opts;
  std::uint64_t x = 0;
  std::uint64_t base = 0;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  ExperimentConfig config;

  auto* harmonic = app.add_subcommand("harmonic", "Estimate the harmonic number H_x");
  harmonic->add_option("x", x, "List length")->required()->check(positive);
  add_common(*harmonic, opts);

  auto* ln = app.add_subcommand("ln", "Estimate ln x");
  ln->add_option("x", x, "Argument")->required()->check(positive);
  add_common(*ln, opts);

  auto* log = app.add_subcommand("log", "Estimate log_base x");
  log->add_option("x", x, "Argument")->required()->check(positive);
  log->add_option("--base,-b", base, "Integer base")->required()->check(at_least_two);
  add_common(*log, opts);

  auto* rational = app.add_subcommand("ln-rational", "Estimate ln(p/q)");
  rational->add_option("p", p, "Numerator")->required()->check(positive);
  rational->add_option("q", q, "Denominator")->required()->check(positive);
  add_common(*rational, opts);

  auto* experiment = app.add_subcommand("experiment", "Error table for ln at base^1..base^K");
  experiment->add_option("--base,-b", config.base, "Base of the powers")
      ->check(at_least_two)
      ->capture_default_str();
  experiment->add_option("--powers,-k", config.max_power, "Largest exponent K")
      ->check(positive)
      ->capture_default_str();
  add_common(*experiment, opts);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  std::ofstream file;
  if (!opts.out.empty()) {
    file.open(opts.out, std::ios::binary);
    if (!file) {
      err << "harmlog: cannot open '" << opts.out << "' for writing\n";
      return kExitRuntimeError;
    }
  }
  std::ostream& sink = opts.out.empty() ? out : file;

  try {
    if (harmonic->parsed()) {
      const auto est = estimate_harmonic(x, opts.trials, opts.seed, opts.parallelism);
      print_record({{"x", integer(x)},
                    {"trials", integer(opts.trials)},
                    {"seed", integer(opts.seed)},
                    {"harmonic_estimate", format_real(est.mean)},
                    {"sample_std", format_real(est.sample_std)},
                    {"std_error", format_real(est.std_error)},
                    {"exact_harmonic", format_real(exact_harmonic(x))}},
                   opts.format, sink);
    } else if (ln->parsed()) {
      const auto est = estimate_ln(x, opts.trials, opts.seed, opts.parallelism);
      print_record({{"x", integer(x)},
                    {"trials", integer(opts.trials)},
                    {"seed", integer(opts.seed)},
                    {"ln_estimate", format_real(est.value)},
                    {"harmonic_estimate", format_real(est.harmonic.mean)},
                    {"std_error", format_real(est.std_error)},
                    {"bias_bound", format_real(est.deterministic_bias_bound)},
                    {"reference_ln", format_real(std::log(static_cast<double>(x)))}},
                   opts.format, sink);
    } else if (log->parsed()) {
      const auto est = estimate_log_base(x, base, opts.trials, opts.seed, opts.parallelism);
      const double reference = std::log(static_cast<double>(x)) / std::log(static_cast<double>(base));
      print_record({{"x", integer(x)},
                    {"base", integer(base)},
                    {"trials", integer(opts.trials)},
                    {"seed", integer(opts.seed)},
                    {"log_estimate", format_real(est.value)},
                    {"error_bound", format_real(est.error_bound)},
                    {"ln_x_estimate", format_real(est.first.value)},
                    {"ln_base_estimate", format_real(est.second.value)},
                    {"reference_log", format_real(reference)}},
                   opts.format, sink);
    } else if (rational->parsed()) {
      const auto est = estimate_ln_rational(RationalArg(p, q), opts.trials, opts.seed,
                                            opts.parallelism);
      const double reference =
          std::log(static_cast<double>(p)) - std::log(static_cast<double>(q));
      print_record({{"p", integer(p)},
                    {"q", integer(q)},
                    {"trials", integer(opts.trials)},
                    {"seed", integer(opts.seed)},
                    {"ln_estimate", format_real(est.value)},
                    {"error_bound", format_real(est.error_bound)},
                    {"ln_p_estimate", format_real(est.first.value)},
                    {"ln_q_estimate", format_real(est.second.value)},
                    {"reference_ln", format_real(reference)}},
                   opts.format, sink);
    } else if (experiment->parsed()) {
      config.trials = opts.trials;
      config.master_seed = opts.seed;
      config.parallelism = opts.parallelism;
      config.validate();
      const auto rows = run_experiment(config);
      if (opts.format == Format::csv) {
        write_csv(rows, sink);
      } else {
        print_experiment_table(rows, sink);
      }
    }
    sink.flush();
    if (!sink) {
      err << "harmlog: failed to write output\n";
      return kExitRuntimeError;
    }
  } catch (const std::invalid_argument& e) {
    err << "harmlog: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "harmlog: " << e.what() << '\n';
    return kExitRuntimeError;
  }
  return kExitOk;
}

}  // namespace harmlog
