#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "casino/rng.hpp"
#include "casino/roulette.hpp"
#include "casino/wager.hpp"
#include "doctest.h"

using namespace casino;

namespace {

// Profit distribution of one unit on an even chance under en prison, written
// out from the coup model: +1 on 18 of 37 pockets, 0 on a zero followed by a
// hit (1/37 * 1/2), -1 otherwise.
struct EvenChanceLaw {
  Rational p_win{18, 37};
  Rational p_tie = Rational(1, 37) * Rational(1, 2);
  Rational p_loss = Rational(18, 37) + Rational(1, 37) * Rational(1, 2);

  Rational mean() const { return p_win - p_loss; }
  Rational variance() const { return p_win + p_loss - mean() * mean(); }
};

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("settle forms the profit as return minus bet") {
    CHECK(settle(0, 0).profit() == 0);
    CHECK(settle(1, 2).profit() == 1);
    CHECK(settle(5, 0).profit() == -5);
    CHECK(settle(5, 5).profit() == 0);
    CHECK_THROWS_AS(settle(-1, 0), std::domain_error);
    CHECK_THROWS_AS(settle(1, -1), std::domain_error);
    CHECK_THROWS_AS(settle(0, 3), std::domain_error);
  }

  TEST_CASE("profit never falls below minus the bet") {
    for (Money b = 0; b < 20; ++b) {
      for (Money r = 0; r < 60; ++r) {
        if (b == 0 && r != 0) continue;
        Wager w = settle(b, r);
        CHECK(w.profit() == w.ret() - w.bet());
        CHECK(w.profit() >= -w.bet());
      }
    }
  }

  TEST_CASE("rtp_ha matches the compound-game examples") {
    auto tcp = rtp_ha(Rational(-686689, 20358520), Rational(370, 221));
    CHECK(tcp.ha == Rational(686689, 34084400));
    CHECK(tcp.rtp + tcp.ha == 1);
    CHECK(to_double(tcp.ha) == doctest::Approx(0.020147).epsilon(1e-5));

    auto craps = rtp_ha(Rational(-7, 495), Rational(34, 9));
    CHECK(craps.ha == Rational(7, 1870));
    CHECK(to_double(craps.ha) == doctest::Approx(0.0037433).epsilon(1e-4));

    auto fair = rtp_ha(0, 1);
    CHECK(fair.ha == 0);
    CHECK(fair.rtp == 1);

    CHECK_THROWS_AS(rtp_ha(1, 0), std::domain_error);
    CHECK_THROWS_AS(rtp_ha(1, -2), std::domain_error);
  }

  TEST_CASE("rational formatting") {
    CHECK(to_fraction_string(Rational(7, 1870)) == "7/1870");
    CHECK(to_fraction_string(Rational(4)) == "4");
    CHECK(format_rational(Rational(7, 1870)) == "7/1870 (0.00374331551)");
  }

  TEST_CASE("ratio_update accumulates") {
    RatioState s;
    CHECK_FALSE(s.profit_ratio().has_value());
    s = ratio_update(s, settle(1, 2));
    CHECK(s.n == 1);
    CHECK(*s.profit_ratio() == 1.0);
    CHECK(*s.return_ratio() == 2.0);

    RatioState flat;
    for (int i = 0; i < 1000; ++i) flat = ratio_update(flat, settle(1, i < 490 ? 2 : 0));
    CHECK(*flat.profit_ratio() == doctest::Approx(-0.02));
    CHECK(flat.cum_profit == flat.cum_ret - flat.cum_bet);
  }

  TEST_CASE("ratio_update rejects overflow") {
    RatioState s;
    s.cum_bet = INT64_MAX - 1;
    CHECK_THROWS_AS(ratio_update(s, settle(5, 0)), std::overflow_error);
  }

  TEST_CASE("merge of split streams equals the whole stream") {
    Stream rng = derive_stream(5, 0);
    std::vector<Wager> ws;
    for (int i = 0; i < 5000; ++i) {
      Money b = next_below(rng, 50);
      Money r = b == 0 ? 0 : next_below(rng, static_cast<std::uint32_t>(3 * b));
      ws.push_back(settle(b, r));
    }
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t cut = next_below(rng, static_cast<std::uint32_t>(ws.size() + 1));
      RatioState whole, left, right;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        whole = ratio_update(whole, ws[i]);
        (i < cut ? left : right) = ratio_update(i < cut ? left : right, ws[i]);
      }
      CHECK(merge(left, right) == whole);
      CHECK(merge(right, left) == whole);
      CHECK(whole.cum_profit == whole.cum_ret - whole.cum_bet);
    }
  }

  TEST_CASE("flat en prison play converges to -1/74 within 3 SE") {
    const EvenChanceLaw law;
    REQUIRE(law.mean() == Rational(-1, 74));
    const std::uint64_t coups = 10'000'000;
    const double se = std::sqrt(to_double(law.variance()) / static_cast<double>(coups));
    Stream stream = derive_stream(2024, 1);
    std::vector<roulette::BetSpec> bets = {{roulette::Chance::red, 1}};
    std::vector<std::uint64_t> none;
    auto run = roulette::simulate(stream, coups, bets, roulette::SettleMode::en_prison, none);
    const double ratio = *run.totals.profit_ratio();
    CHECK(std::abs(ratio - (-1.0 / 74)) < 3 * se);
  }

  TEST_CASE("martingale differences average out at 4 SE") {
    const EvenChanceLaw law;
    const std::uint64_t n = 1'000'000;
    Stream stream = derive_stream(77, 3);
    double sum = 0;
    for (std::uint64_t k = 0; k < n; ++k) {
      auto coup = roulette::resolve_coup(stream);
      Wager w = roulette::settle_bet({roulette::Chance::odd, 1}, coup, roulette::SettleMode::en_prison);
      sum += static_cast<double>(w.profit()) - to_double(law.mean());
    }
    CHECK(std::abs(sum / n) < 4 * std::sqrt(to_double(law.variance()) / n));
  }

  TEST_CASE("check_bounds on constant traces") {
    BoundSpec spec(Rational(-1, 37), Rational(-1, 74));
    CHECK(spec.rho_lo() == Rational(36, 37));
    CHECK(spec.rho_hi() == Rational(73, 74));
    std::vector<double> inside(100, -1.0 / 74);
    CHECK(check_bounds(inside, spec, 10, 0.0).pass);
    std::vector<double> zero(100, 0.0);
    CHECK_FALSE(check_bounds(zero, spec, 10, 1e-6).pass);
    CHECK_THROWS_AS(check_bounds(zero, spec, 100, 0.0), std::domain_error);
    CHECK_THROWS_AS(BoundSpec(Rational(0), Rational(-1)), std::domain_error);
  }

  TEST_CASE("mixed even-chance and straight-up play stays inside the bracket") {
    using namespace roulette;
    // Bracket from the exact per-bet house advantages.
    std::vector<BetSpec> bets = {{Chance::red, 2}, {Chance::high, 1}, {NumberSet(std::vector<int>{17}), 1}};
    std::vector<Rational> chi;
    for (const auto& b : bets) chi.push_back(exact_profit_per_unit(b.target, SettleMode::en_prison));
    BoundSpec spec(*std::min_element(chi.begin(), chi.end()), *std::max_element(chi.begin(), chi.end()));
    CHECK(spec.chi_lo() == Rational(-1, 37));
    CHECK(spec.chi_hi() == Rational(-1, 74));

    const std::uint64_t coups = 1'000'000;
    const std::uint64_t burn_in = 100'000;
    std::vector<std::uint64_t> every(coups);
    for (std::uint64_t k = 0; k < coups; ++k) every[k] = k + 1;
    Stream stream = derive_stream(31337, 0);
    auto run = simulate(stream, coups, bets, SettleMode::en_prison, every);
    std::vector<double> trace;
    for (const auto& p : run.trace) trace.push_back(p.profit_ratio);

    // Per-coup standard deviation of total profit over total stake, from
    // exact per-bet second moments (bets on one coup are dependent, so bound
    // the coup variance by (sum of per-bet sds)^2).
    const double sd_even = std::sqrt(5401.0 / 5476.0);
    const double sd_straight = std::sqrt(35.0 * 35.0 / 37 + 36.0 / 37 - 1.0 / (37.0 * 37.0));
    const double coup_sd = 2 * sd_even + sd_even + sd_straight;
    const double se = coup_sd / 4.0 / std::sqrt(static_cast<double>(burn_in));
    auto report = check_bounds(trace, spec, burn_in, 3 * se);
    CHECK(report.pass);
    CHECK(report.tail_length == coups - burn_in);
  }
}
