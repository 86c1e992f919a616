#include "harmlog/records.hpp"

namespace harmlog {

TrialCount count_records_stream(RandomStream& stream, std::uint64_t x) {
  if (x == 0) {
    throw std::invalid_argument("count_records_stream: x must be positive");
  }
  // Below every sample in [0, 1), so the first draw is always a record.
  double best = -1.0;
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < x; ++i) {
    const double v = stream.next_uniform();
    if (v > best) {
      best = v;
      ++count;
    }
  }
  return {x, count};
}

}  // namespace harmlog
