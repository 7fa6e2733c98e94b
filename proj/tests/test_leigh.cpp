#include <cmath>
#include <stdexcept>
#include <vector>

#include "casino/leigh.hpp"
#include "doctest.h"

using namespace casino;
using namespace casino::leigh;

namespace {

SessionConfig one_day(int coups) {
  SessionConfig c;
  c.days = 1;
  c.coups_per_day = coups;
  return c;
}

}  // namespace

TEST_SUITE("leigh") {
  TEST_CASE("config validation") {
    CHECK_NOTHROW(SessionConfig{}.validate());
    SessionConfig c;
    c.coups_per_day = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = SessionConfig{};
    c.days = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  }

  TEST_CASE("scripted pockets 2, 4: red, odd and high lose twice") {
    // 2 and 4 are black, even and low. Red, odd and high go L, L and
    // complete a losing progression each; black, even and low go W, W and are
    // left incomplete at [1..6] (sum 21, +11) when the day ends.
    roulette::ScriptedWheel wheel({2, 4});
    std::vector<ProgressionEvent> events;
    std::vector<ProgressionOutcome> outcomes;
    auto stats = run_session(wheel, one_day(2), [&](const ProgressionEvent& e) {
      events.push_back(e);
      outcomes.push_back(*e.progression);
    });
    CHECK(stats.n_losing == 3);
    CHECK(stats.n_winning == 0);
    CHECK(stats.n_incomplete == 3);
    CHECK(stats.sum_losing == 30);
    CHECK(stats.sum_incomplete == 33);
    CHECK(stats.total_bet == 30 + 33);
    CHECK(stats.total_profit == 3);
    CHECK(stats.total_profit == stats.progression_profit());
    CHECK(stats.coups == 2);
    CHECK(stats.spins == 2);
    CHECK(stats.progression_coups == 12);
    REQUIRE(events.size() == 6);
    CHECK(events[0].chance == Chance::red);
    CHECK(outcomes[0].kind == ProgressionKind::losing);
    CHECK(outcomes[0].amount_sys == -10);
  }

  TEST_CASE("a progression completed on the last coup is not also incomplete") {
    roulette::ScriptedWheel wheel({2, 4});
    auto stats = run_session(wheel, one_day(2));
    // Red's losing progression ends on coup 2 and no second red record appears.
    CHECK(stats.n_losing + stats.n_incomplete + stats.n_winning == 6);
  }

  TEST_CASE("days restart every chance") {
    // Two days of one coup on pocket 2: red loses once per day and is
    // incomplete at -5 each day instead of completing L, L.
    roulette::ScriptedWheel wheel({2, 2});
    SessionConfig c = one_day(1);
    c.days = 2;
    auto stats = run_session(wheel, c);
    CHECK(stats.n_losing == 0);
    CHECK(stats.n_incomplete == 12);
    CHECK(stats.total_profit == stats.progression_profit());
  }

  TEST_CASE("accounting closes on random sessions") {
    SessionConfig c;
    for (std::uint64_t r = 0; r < 50; ++r) {
      Stream s = derive_stream(123, r);
      auto st = run_session(s, c);
      CAPTURE(r);
      CHECK(st.total_profit == st.progression_profit());
      CHECK(st.progression_coups == 6 * st.coups);
      CHECK(st.coups == c.days * c.coups_per_day);
      CHECK(st.sum_losing_sys == 10 * st.n_losing);
      CHECK(st.n_incomplete <= 6 * c.days);
    }
  }

  TEST_CASE("serial reference and blocked parallel runs agree") {
    SessionConfig c;
    auto serial = run_experiment_serial(7, 700, c);
    auto parallel = run_experiment(7, 700, c, 2);
    CHECK(same_results(serial, parallel));
    CHECK(serial.replications == 700);
  }

  TEST_CASE("worker-count invariance") {
    SessionConfig c;
    auto w1 = run_experiment(42, 1100, c, 1);
    for (int w : {4, 8}) {
      CAPTURE(w);
      CHECK(same_results(w1, run_experiment(42, 1100, c, w)));
    }
  }

  TEST_CASE("replication r uses stream r") {
    SessionConfig c;
    auto agg = run_experiment(42, 8, c, 1);
    AggregateStats by_hand;
    for (std::uint64_t r = 0; r < 8; ++r) {
      Stream s = derive_stream(42, r);
      by_hand.add(run_session(s, c));
    }
    CHECK(same_results(agg, by_hand));
  }

  TEST_CASE("aggregate invariants") {
    SessionConfig c;
    auto agg = run_experiment(5, 600, c);
    std::uint64_t n_total = 0, h_total = 0;
    for (auto [n, k] : agg.counts_of_n) n_total += k;
    for (auto [b, k] : agg.ratio_histogram) h_total += k;
    CHECK(n_total == 600);
    CHECK(h_total == 600);
    CHECK(agg.histogram().total() == 600);
    CHECK(agg.p_profitable() >= 0.0);
    CHECK(agg.p_profitable() <= 1.0);
  }

  TEST_CASE("consistency ratio of the published aggregates") {
    double r = consistency_ratio(12227.812000, 20502.704884, 2691.843352, 413287.742596);
    CHECK(r == doctest::Approx(-0.0135089).epsilon(1e-6));
    CHECK_THROWS_AS(consistency_ratio(1, 1, 1, 0), std::domain_error);
  }

  TEST_CASE("one replication: consistency equals the session profit ratio") {
    SessionConfig c;
    auto agg = run_experiment(3, 1, c);
    Stream s = derive_stream(3, 0);
    auto st = run_session(s, c);
    CHECK(consistency_ratio(agg) ==
          doctest::Approx(static_cast<double>(st.total_profit) / static_cast<double>(st.total_bet)));
    CHECK_THROWS_AS(consistency_ratio(AggregateStats{}), std::domain_error);
  }

  TEST_CASE("poisson report columns") {
    SessionConfig c;
    auto agg = run_experiment(9, 300, c);
    auto rep = poisson_report(agg);
    CHECK(rep.mu1 == 1.51);
    CHECK(rep.mu0 == agg.n_winning.mean());
    CHECK(rep.log10_tail27 < std::log10(1.5e-24));
    REQUIRE(!rep.rows.empty());
    CHECK(rep.rows[0].ccdf_hat == 1.0);
    CHECK(rep.rows[0].poisson_mu1_ccdf == 1.0);
    CHECK(rep.rows[1].poisson_mu1_ccdf == doctest::Approx(1 - std::exp(-1.51)));
    CHECK(rep.rows.back().n == rep.max_n);
    CHECK_FALSE(rep.exceeds_conjectured_max);
    double mass = 0;
    for (const auto& row : rep.rows) mass += row.p_hat;
    CHECK(mass == doctest::Approx(1.0));
  }
}
