#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

#include "harmlog/rng.hpp"

namespace harmlog {

/// Number of running-maximum updates (left-to-right maxima) in one scan.
/// Always 1 <= count <= x.
struct TrialCount {
  std::uint64_t x = 0;
  std::uint64_t count = 0;

  friend bool operator==(const TrialCount&, const TrialCount&) = default;
};

/// Draws exactly x samples from the stream and counts how often the running
/// maximum is replaced. The first sample always counts; later samples count
/// only when strictly greater than the current maximum. Nothing is stored.
TrialCount count_records_stream(RandomStream& stream, std::uint64_t x);

/// Same counting rule over an explicit sequence.
template <typename T>
TrialCount count_records_list(std::span<const T> values) {
  if (values.empty()) {
    throw std::invalid_argument("count_records_list: sequence must be nonempty");
  }
  std::uint64_t count = 1;
  T best = values.front();
  for (const T& v : values.subspan(1)) {
    if (v > best) {
      best = v;
      ++count;
    }
  }
  return {values.size(), count};
}

}  // namespace harmlog
