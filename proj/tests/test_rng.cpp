#include <array>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include <omp.h>

#include "casino/rng.hpp"
#include "doctest.h"

using namespace casino;

TEST_SUITE("rng") {
  TEST_CASE("philox4x32-10 known-answer vectors") {
    using detail::philox4x32_10;
    CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) ==
          std::array<std::uint32_t, 4>{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          std::array<std::uint32_t, 4>{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          std::array<std::uint32_t, 4>{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
  }

  TEST_CASE("same key gives the same stream") {
    Stream a = derive_stream(42, 0);
    Stream b = derive_stream(42, 0);
    for (int i = 0; i < 100; ++i) CHECK(a() == b());
  }

  TEST_CASE("different stream ids diverge") {
    Stream a = derive_stream(42, 0);
    Stream b = derive_stream(42, 1);
    Stream c = derive_stream(43, 0);
    int same_ab = 0, same_ac = 0;
    for (int i = 0; i < 100; ++i) {
      auto x = a();
      same_ab += x == b();
      same_ac += x == c();
    }
    CHECK(same_ab < 3);
    CHECK(same_ac < 3);
  }

  TEST_CASE("a stream's output does not depend on the thread that draws it") {
    std::vector<std::uint32_t> reference;
    Stream s = derive_stream(42, 7);
    for (int i = 0; i < 1000; ++i) reference.push_back(s());

    std::vector<std::vector<std::uint32_t>> per_thread(8);
#pragma omp parallel for num_threads(8) schedule(static, 1)
    for (int t = 0; t < 8; ++t) {
      Stream local = derive_stream(42, 7);
      for (int i = 0; i < 1000; ++i) per_thread[t].push_back(local());
    }
    for (const auto& v : per_thread) CHECK(v == reference);
  }

  TEST_CASE("next_below small ranges") {
    Stream s = derive_stream(1, 1);
    for (int i = 0; i < 1000; ++i) CHECK(next_below(s, 1) == 0);
    std::set<std::uint32_t> seen;
    for (int i = 0; i < 1000; ++i) {
      auto v = next_below(s, 6);
      CHECK(v < 6);
      seen.insert(v);
    }
    CHECK(seen.size() == 6);
    CHECK_THROWS_AS(next_below(s, 0), std::domain_error);
  }

  TEST_CASE("next_unit stays in [0, 1)") {
    Stream s = derive_stream(9, 9);
    for (int i = 0; i < 10000; ++i) {
      double u = s.next_unit();
      CHECK(u >= 0.0);
      CHECK(u < 1.0);
    }
  }

  TEST_CASE("37-way frequencies at 10^7 draws") {
    const std::uint64_t n = 10'000'000;
    std::array<std::uint64_t, 37> counts{};
    Stream s = derive_stream(20240101, 0);
    for (std::uint64_t i = 0; i < n; ++i) ++counts[next_below(s, 37)];
    const double p = 1.0 / 37;
    const double se = std::sqrt(p * (1 - p) / n);
    // 37 simultaneous 3-SE checks: a fixed seed keeps this deterministic.
    for (auto c : counts) CHECK(std::abs(static_cast<double>(c) / n - p) < 3 * se);
  }

  TEST_CASE("ranges that do not divide 2^32 are unbiased") {
    // 3 * 2^30 leaves a residue of 2^30 in 2^32; a plain modulo would put
    // half again as much mass on the lower third.
    const std::uint32_t n = 3u << 30;
    const std::uint64_t draws = 3'000'000;
    std::uint64_t low = 0;
    Stream s = derive_stream(5, 5);
    for (std::uint64_t i = 0; i < draws; ++i) low += next_below(s, n) < (1u << 30);
    const double se = std::sqrt((1.0 / 3) * (2.0 / 3) / draws);
    CHECK(std::abs(static_cast<double>(low) / draws - 1.0 / 3) < 4 * se);
  }
}
