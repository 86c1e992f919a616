#pragma once

#include <array>
#include <cstdint>

namespace harmlog {

/// SplitMix64 finalizer. A bijection on 64-bit words with full avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/*
 * A reproducible stream of uniform samples in [0, 1).
 *
 * The generator is xoshiro256**. Its state is derived from
 * (master_seed, stream_id) in O(1): the pair is folded through mix64 and
 * the result seeds a SplitMix64 sequence that fills the four state words.
 * Any trial's stream can therefore be built directly from its index, in
 * any order and on any thread.
 */
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t stream_id) noexcept;

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  /// Next raw 64-bit output.
  std::uint64_t next_u64() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Next sample in [0, 1), built from the top 53 bits of one output.
  double next_uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::array<std::uint64_t, 4> state_;
};

inline RandomStream make_stream(std::uint64_t master_seed,
                                std::uint64_t stream_id) noexcept {
  return RandomStream(master_seed, stream_id);
}

}  // namespace harmlog
