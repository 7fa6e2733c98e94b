#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace casino {

namespace detail {
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key);
}  // namespace detail

struct StreamKey {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;
};

// Philox4x32-10 (Salmon et al., SC'11) keyed by the master seed. The 128-bit
// counter is split into (stream_id, block index), so every stream is a
// disjoint slice of one keyed bijection and derivation is O(1).
class Stream {
 public:
  using result_type = std::uint32_t;

  explicit Stream(StreamKey key);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    if (pos_ == 4) refill();
    return buf_[pos_++];
  }

  std::uint64_t next_u64() {
    std::uint64_t hi = (*this)();
    return (hi << 32) | (*this)();
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  const StreamKey& key() const { return key_; }

 private:
  void refill();

  StreamKey key_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  unsigned pos_ = 4;
};

inline Stream derive_stream(std::uint64_t master_seed, std::uint64_t stream_id) {
  return Stream({master_seed, stream_id});
}

/// Uniform integer in [0, n) by Lemire's widening multiply with rejection.
/// Throws std::domain_error for n == 0.
std::uint32_t next_below(Stream& stream, std::uint32_t n);

}  // namespace casino
