#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "harmlog/rng.hpp"

using harmlog::make_stream;

TEST_CASE("streams are a pure function of (seed, id)") {
  auto a = make_stream(42, 0);
  auto b = make_stream(42, 0);
  for (int i = 0; i < 10; ++i) CHECK(a.next_uniform() == b.next_uniform());
  CHECK(a.master_seed() == 42);
  CHECK(a.stream_id() == 0);
}

TEST_CASE("adjacent stream ids give different sequences") {
  auto a = make_stream(42, 0);
  auto b = make_stream(42, 1);
  int equal = 0;
  for (int i = 0; i < 1000; ++i) equal += a.next_uniform() == b.next_uniform();
  CHECK(equal < 1000);
  CHECK(equal == 0);
}

TEST_CASE("a million draws stay in [0, 1) with mean near 1/2") {
  auto s = make_stream(0, 0);
  constexpr int n = 1'000'000;
  double sum = 0.0;
  bool in_range = true;
  for (int i = 0; i < n; ++i) {
    const double v = s.next_uniform();
    in_range = in_range && v >= 0.0 && v < 1.0;
    sum += v;
  }
  CHECK(in_range);
  // 3 sigma: sigma / sqrt(n) = 0.000289 for Uniform(0, 1)
  const double mean = sum / n;
  CHECK(mean >= 0.497);
  CHECK(mean <= 0.503);
}

TEST_CASE("samples carry 53 bits") {
  auto s = make_stream(3, 9);
  bool low_bit_seen = false;
  for (int i = 0; i < 1000 && !low_bit_seen; ++i) {
    const double v = s.next_uniform() * 0x1.0p53;
    low_bit_seen = std::fmod(v, 2.0) == 1.0;
  }
  CHECK(low_bit_seen);
}

TEST_CASE("neighbouring streams are uncorrelated") {
  for (std::uint64_t seed : {0ull, 1ull, 12345ull, 0xffffffffffffffffull}) {
    auto a = make_stream(seed, 0);
    auto b = make_stream(seed, 1);
    constexpr int n = 10'000;
    std::vector<double> u(n), v(n);
    double mu = 0, mv = 0;
    for (int i = 0; i < n; ++i) {
      u[i] = a.next_uniform();
      v[i] = b.next_uniform();
      mu += u[i];
      mv += v[i];
    }
    mu /= n;
    mv /= n;
    double suv = 0, suu = 0, svv = 0;
    for (int i = 0; i < n; ++i) {
      suv += (u[i] - mu) * (v[i] - mv);
      suu += (u[i] - mu) * (u[i] - mu);
      svv += (v[i] - mv) * (v[i] - mv);
    }
    CAPTURE(seed);
    CHECK(std::abs(suv / std::sqrt(suu * svv)) < 0.05);
  }
}

TEST_CASE("mix64 is injective on a sample") {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < 4096; ++i) out.push_back(harmlog::mix64(i));
  std::sort(out.begin(), out.end());
  CHECK(std::adjacent_find(out.begin(), out.end()) == out.end());
}
