#include "casino/craps.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include <omp.h>

namespace casino::craps {

namespace {

constexpr std::uint64_t kDecisionBlock = 1 << 16;

int ways(int total) { return (total < 2 || total > 12) ? 0 : 6 - std::abs(7 - total); }

constexpr std::array<int, 6> kPoints = {4, 5, 6, 8, 9, 10};

void play_block(Stream& stream, std::uint64_t count, Odds odds, DecisionStats& out) {
  RandomDice dice(stream);
  for (std::uint64_t i = 0; i < count; ++i) {
    CrapsDecision d = craps_pass_decision(dice, odds);
    out.bet.update(d.total_bet);
    out.profit.update(d.profit);
    out.bet_profit += static_cast<Int128>(d.total_bet) * d.profit;
    if (d.profit > 0) ++out.wins;
  }
}

}  // namespace

std::string_view to_string(Odds o) { return o == Odds::none ? "none" : "345"; }

Odds parse_odds(std::string_view text) {
  if (text == "none") return Odds::none;
  if (text == "345" || text == "3-4-5") return Odds::three_four_five;
  throw std::invalid_argument("unknown odds '" + std::string(text) + "'");
}

Rational roll_probability(int total) { return Rational(ways(total), 36); }

int craps_roll(Stream& stream) {
  int a = static_cast<int>(next_below(stream, 6)) + 1;
  int b = static_cast<int>(next_below(stream, 6)) + 1;
  return a + b;
}

ScriptedDice::ScriptedDice(std::vector<int> totals) : totals_(std::move(totals)) {
  for (int t : totals_) {
    if (t < 2 || t > 12) throw std::domain_error("ScriptedDice: totals must lie in 2..12");
  }
}

int ScriptedDice::roll() {
  if (next_ >= totals_.size()) throw std::out_of_range("ScriptedDice: script exhausted");
  return totals_[next_++];
}

bool is_point(int total) {
  return total == 4 || total == 5 || total == 6 || total == 8 || total == 9 || total == 10;
}

int odds_multiple(int point, Odds odds) {
  if (!is_point(point)) throw std::domain_error("odds_multiple: not a point");
  if (odds == Odds::none) return 0;
  switch (point) {
    case 4: case 10: return 3;
    case 5: case 9: return 4;
    default: return 5;
  }
}

Rational odds_payout(int point) {
  if (!is_point(point)) throw std::domain_error("odds_payout: not a point");
  return roll_probability(7) / roll_probability(point);
}

Money odds_win(int point, int multiple) {
  if (!is_point(point)) throw std::domain_error("odds_win: not a point");
  const int num = 6 * multiple;
  if (num % ways(point) != 0) throw std::domain_error("odds_win: payout is not a whole unit");
  return num / ways(point);
}

Rational odds_expected_profit(int point) {
  const Rational p = roll_probability(point);
  const Rational q = roll_probability(7);
  const Rational win = p / (p + q);
  return win * odds_payout(point) - (1 - win);
}

CrapsAnalysis craps_exact(Odds odds) {
  CrapsAnalysis a;
  const Rational p7 = roll_probability(7);
  a.e_bet = roll_probability(2) + roll_probability(3) + p7 + roll_probability(11) + roll_probability(12);
  a.p_win = p7 + roll_probability(11);
  a.e_profit = p7 + roll_probability(11) - roll_probability(2) - roll_probability(3) - roll_probability(12);
  for (int k : kPoints) {
    const Rational pk = roll_probability(k);
    const Rational win = pk / (pk + p7);
    const int m = odds_multiple(k, odds);
    a.e_bet += pk * (1 + m);
    a.p_win += pk * win;
    a.e_profit += pk * (win * (1 + m * odds_payout(k)) - (1 - win) * (1 + m));
  }
  a.ha_total = rtp_ha(a.e_profit, a.e_bet).ha;
  a.ha_base = rtp_ha(a.e_profit, 1).ha;
  return a;
}

StakePolicy StakePolicy::flat(Money stake) {
  return {stake, [stake](std::span<const CrapsRound>) { return stake; }};
}

void StakePolicy::validate() const {
  if (max_stake < 1 || max_stake > 1'000'000'000) {
    throw std::invalid_argument("stake policy needs a bound 1 <= max_stake <= 1e9");
  }
  if (!next) throw std::invalid_argument("stake policy has no rule");
}

std::optional<double> CrapsRun::round_profit_ratio() const {
  Money bet = 0, profit = 0;
  for (const auto& r : rounds) {
    bet += r.round_bet;
    profit += r.round_profit;
  }
  if (bet <= 0) return std::nullopt;
  return static_cast<double>(profit) / static_cast<double>(bet);
}

double CrapsRun::second_moment_length() const {
  return round_length.n == 0 ? 0.0
                             : static_cast<double>(round_length.sum_sq) / static_cast<double>(round_length.n);
}

double DecisionStats::ratio_stderr() const {
  if (bet.n < 2 || bet.sum == 0) return 0.0;
  const double sb = static_cast<double>(bet.sum);
  const double r = static_cast<double>(profit.sum) / sb;
  const double resid = static_cast<double>(profit.sum_sq) - 2 * r * static_cast<double>(bet_profit) +
                       r * r * static_cast<double>(bet.sum_sq);
  const double n = static_cast<double>(bet.n);
  return std::sqrt(std::max(resid, 0.0) * n / (n - 1)) / sb;
}

DecisionStats merge(const DecisionStats& a, const DecisionStats& b) {
  return {merge(a.bet, b.bet), merge(a.profit, b.profit), a.bet_profit + b.bet_profit, a.wins + b.wins};
}

DecisionStats simulate_decisions(std::uint64_t master_seed, std::uint64_t n_decisions, Odds odds, int workers) {
  const std::uint64_t n_blocks = (n_decisions + kDecisionBlock - 1) / kDecisionBlock;
  std::vector<DecisionStats> blocks(n_blocks);
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(n_blocks); ++b) {
    const std::uint64_t first = static_cast<std::uint64_t>(b) * kDecisionBlock;
    Stream stream = derive_stream(master_seed, static_cast<std::uint64_t>(b));
    play_block(stream, std::min(kDecisionBlock, n_decisions - first), odds, blocks[static_cast<std::size_t>(b)]);
  }
  DecisionStats out;
  for (const auto& b : blocks) out = merge(out, b);
  return out;
}

DecisionStats simulate_decisions_serial(std::uint64_t master_seed, std::uint64_t n_decisions, Odds odds) {
  DecisionStats out;
  for (std::uint64_t first = 0, b = 0; first < n_decisions; first += kDecisionBlock, ++b) {
    Stream stream = derive_stream(master_seed, b);
    play_block(stream, std::min(kDecisionBlock, n_decisions - first), odds, out);
  }
  return out;
}

}  // namespace casino::craps
