#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "harmlog/cli.hpp"
#include "harmlog/estimator.hpp"
#include "harmlog/experiment.hpp"
#include "harmlog/logext.hpp"

using namespace harmlog;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Value of `key` in table output.
std::string table_value(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string k, v;
    fields >> k >> v;
    if (k == key) return v;
  }
  return {};
}

}  // namespace

TEST_CASE("harmonic subcommand") {
  const auto r = run({"harmonic", "10", "--trials", "100000", "--seed", "7"});
  REQUIRE(r.code == kExitOk);
  const double mean = std::stod(table_value(r.out, "harmonic_estimate"));
  CHECK(std::abs(mean - 2.9289683) <= 0.01486);
  CHECK(!table_value(r.out, "std_error").empty());
  CHECK(mean == estimate_harmonic(10, 100000, 7).mean);
}

TEST_CASE("ln subcommand prints the deterministic x = 1 value") {
  const auto r = run({"ln", "1", "--trials", "5"});
  REQUIRE(r.code == kExitOk);
  CHECK(table_value(r.out, "ln_estimate") == format_real(estimate_ln(1, 5, 0).value));
  CHECK(std::stod(table_value(r.out, "ln_estimate")) == doctest::Approx(-0.0772157).epsilon(1e-6));
  CHECK(table_value(r.out, "bias_bound") == format_real(0.25));
}

TEST_CASE("log and ln-rational reproduce the module values") {
  auto r = run({"log", "8", "--base", "2", "--trials", "300", "--seed", "4"});
  REQUIRE(r.code == kExitOk);
  CHECK(table_value(r.out, "log_estimate") == format_real(estimate_log_base(8, 2, 300, 4).value));

  r = run({"ln-rational", "3", "2", "--trials", "300", "--seed", "4", "--format", "csv"});
  REQUIRE(r.code == kExitOk);
  const auto first_newline = r.out.find('\n');
  CHECK(r.out.substr(0, first_newline).rfind("p,q,trials,seed,ln_estimate", 0) == 0);
  CHECK(r.out.find(format_real(estimate_ln_rational(RationalArg(3, 2), 300, 4).value)) !=
        std::string::npos);
}

TEST_CASE("experiment csv equals the module output") {
  const auto r = run({"experiment", "--base", "4", "--powers", "3", "--trials", "50", "--seed",
                      "0", "--format", "csv", "-j", "3"});
  REQUIRE(r.code == kExitOk);
  ExperimentConfig c;
  c.base = 4;
  c.max_power = 3;
  c.trials = 50;
  c.master_seed = 0;
  std::ostringstream expected;
  write_csv(run_experiment(c), expected);
  CHECK(r.out == expected.str());

  const auto table = run({"experiment", "--powers", "2", "--trials", "10"});
  REQUIRE(table.code == kExitOk);
  CHECK(table.out.find("reference_ln") != std::string::npos);
}

TEST_CASE("output is independent of parallelism") {
  for (const std::string cmd : {"harmonic", "ln"}) {
    const auto a = run({cmd, "77", "--trials", "999", "-j", "1"});
    const auto b = run({cmd, "77", "--trials", "999", "-j", "8"});
    CHECK(a.out == b.out);
  }
}

TEST_CASE("--out writes to a file") {
  const auto path = std::filesystem::temp_directory_path() / "harmlog_cli_test.csv";
  const auto r = run({"experiment", "--powers", "2", "--trials", "5", "--format", "csv", "--out",
                      path.string()});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == kCsvHeader);
  in.close();
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"ln"}).code == kExitUsage);
  CHECK(run({"ln", "0"}).code == kExitUsage);
  CHECK(run({"ln", "-3"}).code == kExitUsage);
  CHECK(run({"ln", "abc"}).code == kExitUsage);
  CHECK(run({"ln", "4", "--trials", "0"}).code == kExitUsage);
  CHECK(run({"ln", "4", "--trials", "-5"}).code == kExitUsage);
  CHECK(run({"ln", "4", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"log", "8"}).code == kExitUsage);
  CHECK(run({"log", "8", "--base", "1"}).code == kExitUsage);
  CHECK(run({"ln-rational", "3"}).code == kExitUsage);
  CHECK(run({"experiment", "--base", "4", "--powers", "40"}).code == kExitUsage);
  const auto r = run({"ln", "--bogus"});
  CHECK(r.code == kExitUsage);
  CHECK(!r.err.empty());
  CHECK(r.out.empty());
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("experiment") != std::string::npos);
}

TEST_CASE("unwritable --out is a runtime error") {
  const auto r = run({"ln", "4", "--out", "/nonexistent-dir/x.csv"});
  CHECK(r.code == kExitRuntimeError);
}
