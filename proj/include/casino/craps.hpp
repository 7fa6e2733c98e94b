#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "casino/rng.hpp"
#include "casino/stats.hpp"
#include "casino/wager.hpp"

namespace casino::craps {

enum class Odds : std::uint8_t { none, three_four_five };
std::string_view to_string(Odds o);
/// Accepts "none" and "345".
Odds parse_odds(std::string_view text);

/// P(total = k) = (6 - |7 - k|)/36 for k in 2..12, else 0.
Rational roll_probability(int total);

template <class D>
concept DiceSource = requires(D& d) {
  { d.roll() } -> std::same_as<int>;
};

/// Sum of two independent fair dice.
int craps_roll(Stream& stream);

class RandomDice {
 public:
  explicit RandomDice(Stream& stream) : stream_(&stream) {}
  int roll() { return craps_roll(*stream_); }

 private:
  Stream* stream_;
};

/// Replays scripted totals; throws std::out_of_range when exhausted.
class ScriptedDice {
 public:
  explicit ScriptedDice(std::vector<int> totals);
  int roll();
  std::size_t remaining() const { return totals_.size() - next_; }

 private:
  std::vector<int> totals_;
  std::size_t next_ = 0;
};

bool is_point(int total);
/// Free-odds multiple of the pass-line stake for a point: 3, 4, 5 for
/// 4/10, 5/9, 6/8 under three_four_five; 0 with no odds.
int odds_multiple(int point, Odds odds);
/// Fair payout per unit of odds bet: P(7)/P(point), i.e. 2, 3/2, 6/5.
Rational odds_payout(int point);

/// Amount won by `multiple` units of odds when the point repeats.
Money odds_win(int point, int multiple);

/// One pass-line decision per unit pass-line stake, odds included.
struct CrapsDecision {
  Money total_bet = 1;
  Money profit = 0;
  int rolls_used = 1;
  std::optional<int> point;
  bool seven_out = false;
};

template <DiceSource D>
CrapsDecision craps_pass_decision(D& dice, Odds odds) {
  CrapsDecision d;
  const int come_out = dice.roll();
  if (come_out == 7 || come_out == 11) {
    d.profit = 1;
    return d;
  }
  if (come_out == 2 || come_out == 3 || come_out == 12) {
    d.profit = -1;
    return d;
  }
  d.point = come_out;
  const int multiple = odds_multiple(come_out, odds);
  d.total_bet = 1 + multiple;
  while (true) {
    const int t = dice.roll();
    ++d.rolls_used;
    if (t == come_out) {
      d.profit = 1 + odds_win(come_out, multiple);
      return d;
    }
    if (t == 7) {
      d.profit = -d.total_bet;
      d.seven_out = true;
      return d;
    }
  }
}

inline CrapsDecision craps_pass_decision(Stream& stream, Odds odds) {
  RandomDice dice(stream);
  return craps_pass_decision(dice, odds);
}

struct CrapsAnalysis {
  Rational e_bet;
  Rational e_profit;
  Rational ha_total;
  Rational ha_base;
  Rational p_win;
};

/// Closed-form expectations per unit pass-line stake.
CrapsAnalysis craps_exact(Odds odds);

/// Expected profit of the odds bet alone given the point, per unit odds stake.
Rational odds_expected_profit(int point);

/// Rolls from one come-out after the previous seven-out up to and including the next seven-out.
struct CrapsRound {
  std::int64_t length = 0;
  std::int64_t decisions = 0;
  Money base_stake = 0;
  Money round_bet = 0;
  Money round_profit = 0;
};

/// Chooses the base stake for the next round from the rounds completed so far.
struct StakePolicy {
  Money max_stake = 1;
  std::function<Money(std::span<const CrapsRound>)> next;

  static StakePolicy flat(Money stake);
  /// Throws std::invalid_argument unless 1 <= max_stake <= 10^9 and next is set.
  void validate() const;
};

struct CrapsRun {
  std::vector<CrapsRound> rounds;
  RatioState totals;  // one entry per decision
  Money decision_profit_sum = 0;
  IntegerMoments round_length;

  /// Sum of round profits over sum of round bets.
  std::optional<double> round_profit_ratio() const;
  /// Mean of squared round lengths.
  double second_moment_length() const;
};

template <DiceSource D>
CrapsRun craps_run_rounds(D& dice, std::uint64_t n_rounds, Odds odds, const StakePolicy& policy) {
  if (n_rounds < 1) throw std::invalid_argument("n_rounds must be >= 1");
  policy.validate();
  CrapsRun run;
  run.rounds.reserve(n_rounds);
  for (std::uint64_t m = 0; m < n_rounds; ++m) {
    CrapsRound round;
    round.base_stake = policy.next(std::span<const CrapsRound>(run.rounds));
    if (round.base_stake < 1 || round.base_stake > policy.max_stake) {
      throw std::out_of_range("stake policy returned a stake outside [1, max_stake]");
    }
    while (true) {
      CrapsDecision d = craps_pass_decision(dice, odds);
      Money bet = round.base_stake * d.total_bet;
      Money profit = round.base_stake * d.profit;
      run.totals = ratio_update(run.totals, settle(bet, bet + profit));
      run.decision_profit_sum += profit;
      round.length += d.rolls_used;
      ++round.decisions;
      round.round_bet += bet;
      round.round_profit += profit;
      if (d.seven_out) break;
    }
    run.round_length.update(round.length);
    run.rounds.push_back(round);
  }
  return run;
}

inline CrapsRun craps_run_rounds(Stream& stream, std::uint64_t n_rounds, Odds odds, const StakePolicy& policy) {
  RandomDice dice(stream);
  return craps_run_rounds(dice, n_rounds, odds, policy);
}

struct DecisionStats {
  IntegerMoments bet;
  IntegerMoments profit;
  Int128 bet_profit = 0;  // sum of bet*profit, for the ratio's delta-method error
  std::int64_t wins = 0;

  /// Standard error of sum(profit)/sum(bet) by the delta method.
  double ratio_stderr() const;
};

DecisionStats merge(const DecisionStats& a, const DecisionStats& b);

/// Independent pass-line decisions with unit stake, split into fixed blocks
/// with one stream per block so the result is worker-count invariant.
DecisionStats simulate_decisions(std::uint64_t master_seed, std::uint64_t n_decisions, Odds odds,
                                 int workers = 0);
DecisionStats simulate_decisions_serial(std::uint64_t master_seed, std::uint64_t n_decisions, Odds odds);

}  // namespace casino::craps
