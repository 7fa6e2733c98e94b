#include "casino/rng.hpp"

#include <stdexcept>

namespace casino {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53;
constexpr std::uint32_t kMul1 = 0xCD9E8D57;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

}  // namespace

namespace detail {

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

}  // namespace detail

Stream::Stream(StreamKey key) : key_(key) {}

void Stream::refill() {
  std::array<std::uint32_t, 4> ctr = {
      static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
      static_cast<std::uint32_t>(key_.stream_id),
      static_cast<std::uint32_t>(key_.stream_id >> 32)};
  std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(key_.master_seed),
                                      static_cast<std::uint32_t>(key_.master_seed >> 32)};
  buf_ = detail::philox4x32_10(ctr, key);
  ++block_;
  pos_ = 0;
}

std::uint32_t next_below(Stream& stream, std::uint32_t n) {
  if (n == 0) throw std::domain_error("next_below: n must be positive");
  std::uint64_t m = static_cast<std::uint64_t>(stream()) * n;
  auto low = static_cast<std::uint32_t>(m);
  if (low < n) {
    std::uint32_t threshold = static_cast<std::uint32_t>(-n) % n;
    while (low < threshold) {
      m = static_cast<std::uint64_t>(stream()) * n;
      low = static_cast<std::uint32_t>(m);
    }
  }
  return static_cast<std::uint32_t>(m >> 32);
}

}  // namespace casino
