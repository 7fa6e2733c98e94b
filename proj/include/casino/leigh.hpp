#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "casino/labouchere.hpp"
#include "casino/roulette.hpp"
#include "casino/stats.hpp"

namespace casino::leigh {

using labouchere::LabConfig;
using labouchere::ProgressionKind;
using labouchere::ProgressionOutcome;
using roulette::Chance;

struct SessionConfig {
  int days = 8;
  int coups_per_day = 360;
  LabConfig lab;

  void validate() const;
};

/// Totals for one multi-day session of six simultaneous bettors. Money sums
/// are on the actual-money basis; the *_sys fields count virtual bets as staked.
/// sum_losing is a positive magnitude.
struct SessionStats {
  std::int64_t n_winning = 0;
  std::int64_t n_losing = 0;
  std::int64_t n_incomplete = 0;
  Money sum_winning = 0;
  Money sum_losing = 0;
  Money sum_incomplete = 0;
  Money total_bet = 0;
  Money total_profit = 0;
  Money sum_winning_sys = 0;
  Money sum_losing_sys = 0;
  Money sum_incomplete_sys = 0;
  std::int64_t coups = 0;
  std::int64_t spins = 0;
  std::int64_t progression_coups = 0;  // coups summed over every classified progression

  void record(const ProgressionOutcome& p);
  /// sum_winning - sum_losing + sum_incomplete
  Money progression_profit() const { return sum_winning - sum_losing + sum_incomplete; }

  friend bool operator==(const SessionStats&, const SessionStats&) = default;
};

struct ProgressionEvent {
  int day = 0;
  int coup = 0;
  Chance chance = Chance::red;
  const ProgressionOutcome* progression = nullptr;
};
using ProgressionObserver = std::function<void(const ProgressionEvent&)>;

/// Plays one session: each day every chance restarts from the initial list,
/// each coup is one en prison resolution shared by all six chances, and each
/// day ends by closing in-flight progressions as incomplete.
template <roulette::SpinSource S>
SessionStats run_session(S& wheel, const SessionConfig& config,
                         const ProgressionObserver& observer = {}) {
  SessionStats stats;
  std::array<labouchere::LabState, 6> states;
  auto emit = [&](int day, int coup, std::size_t i, const ProgressionOutcome& p) {
    stats.record(p);
    if (observer) observer({day, coup, roulette::kAllChances[i], &p});
  };
  for (int day = 0; day < config.days; ++day) {
    for (auto& s : states) s = labouchere::LabState::fresh(config.lab);
    for (int coup = 0; coup < config.coups_per_day; ++coup) {
      const roulette::CoupResult result = roulette::resolve_coup(wheel);
      stats.spins += result.spins_used;
      ++stats.coups;
      for (std::size_t i = 0; i < states.size(); ++i) {
        auto step = labouchere::apply(states[i], result.outcome[i], config.lab);
        stats.total_bet += step.wager.bet();
        stats.total_profit += step.wager.profit();
        if (step.completed) emit(day, coup, i, *step.completed);
      }
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (auto p = labouchere::finalize(states[i], config.lab)) emit(day, config.coups_per_day, i, *p);
    }
  }
  return stats;
}

SessionStats run_session(Stream& stream, const SessionConfig& config);

/// Merged statistics over replicated sessions. Every per-session quantity is
/// an integer, so the moments are exact and merge order cannot change them.
struct AggregateStats {
  std::uint64_t replications = 0;
  IntegerMoments n_winning, n_losing, n_incomplete;
  IntegerMoments sum_winning, sum_losing, sum_incomplete;
  IntegerMoments total_bet, total_profit;
  IntegerMoments sum_winning_sys, sum_losing_sys, sum_incomplete_sys;
  IntegerMoments spins;
  /// Session profit/bet ratio in percent; bin k holds ratios in [k, k+1).
  std::map<std::int64_t, std::uint64_t> ratio_histogram;
  StreamingMoments ratio;
  std::map<std::int64_t, std::uint64_t> counts_of_n;
  std::uint64_t n_profitable = 0;
  std::int64_t max_n_winning = 0;
  Money max_sum_winning = 0;

  void add(const SessionStats& s);
  double p_profitable() const;
  Histogram histogram() const;
};

AggregateStats merge(const AggregateStats& a, const AggregateStats& b);
bool same_results(const AggregateStats& a, const AggregateStats& b);

/// Replication r draws from derive_stream(master_seed, r). Replications are
/// processed in fixed-size blocks merged in index order, so the result is
/// bit-identical for every worker count. workers == 0 uses the OpenMP default.
AggregateStats run_experiment(std::uint64_t master_seed, std::uint64_t replications,
                              const SessionConfig& config, int workers = 0);

/// Single-threaded reference: one pass over replications with no blocking.
AggregateStats run_experiment_serial(std::uint64_t master_seed, std::uint64_t replications,
                                     const SessionConfig& config);

/// (mean win - mean loss + mean incomplete) / mean total bet.
double consistency_ratio(const AggregateStats& agg);
double consistency_ratio(double mean_win, double mean_loss, double mean_incomplete, double mean_bet);

struct PoissonRow {
  std::int64_t n = 0;
  std::uint64_t count = 0;
  double p_hat = 0;
  double se = 0;
  double poisson_mu0 = 0;
  double ccdf_hat = 0;
  double ccdf_se = 0;
  double poisson_mu1_ccdf = 0;
  bool bound_holds = true;     // ccdf_hat <= poisson_mu1_ccdf
  double bound_margin_se = 0;  // (bound - ccdf_hat) / ccdf_se, infinite when ccdf_se = 0
};

struct PoissonReport {
  double mu0 = 0;
  double mu1 = 0;
  std::vector<PoissonRow> rows;
  double log10_tail27 = 0;
  int bound_violations = 0;
  int rows_under_two_se = 0;
  std::int64_t max_n = 0;
  bool exceeds_conjectured_max = false;  // max_n > 144
};

inline constexpr double kDefaultMu1 = 1.51;
inline constexpr std::int64_t kConjecturedMaxWinning = 144;

PoissonReport poisson_report(const AggregateStats& agg, double mu1 = kDefaultMu1);

}  // namespace casino::leigh
