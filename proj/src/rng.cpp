#include "harmlog/rng.hpp"

namespace harmlog {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;
}

RandomStream::RandomStream(std::uint64_t master_seed,
                           std::uint64_t stream_id) noexcept
    : master_seed_(master_seed), stream_id_(stream_id), state_{} {
  // For a fixed master seed the map stream_id -> seed is a bijection.
  std::uint64_t sm = mix64(master_seed ^ mix64(stream_id + kGolden));
  for (auto& word : state_) {
    sm += kGolden;
    word = mix64(sm);
  }
  if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
    state_[0] = kGolden;
  }
}

}  // namespace harmlog
