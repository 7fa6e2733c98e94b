#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "casino/roulette.hpp"
#include "casino/wager.hpp"

namespace casino::labouchere {

using roulette::Outcome;

struct LabConfig {
  std::vector<Money> init_list = {1, 2, 3, 4};
  Money min_bet = 5;
  Money max_bet = 2600;

  /// Throws std::invalid_argument unless the list is nonempty and positive,
  /// min_bet <= max_bet, and the opening bet does not already exceed max_bet.
  void validate() const;
  Money init_sum() const;
};

/// Scorecard terms with O(1) removal at both ends.
class ScoreCard {
 public:
  ScoreCard() = default;
  explicit ScoreCard(std::span<const Money> terms);

  bool empty() const { return head_ == terms_.size(); }
  std::size_t size() const { return terms_.size() - head_; }
  Money front() const { return terms_[head_]; }
  Money back() const { return terms_.back(); }
  Money sum() const { return sum_; }

  void push_back(Money x) {
    terms_.push_back(x);
    sum_ += x;
  }
  void pop_front();
  void pop_back() {
    sum_ -= terms_.back();
    terms_.pop_back();
  }
  void assign(std::span<const Money> terms);
  std::vector<Money> to_vector() const { return {terms_.begin() + static_cast<std::ptrdiff_t>(head_), terms_.end()}; }

 private:
  std::vector<Money> terms_;
  std::size_t head_ = 0;
  Money sum_ = 0;
};

struct LabState {
  ScoreCard list;
  Money f_sys = 0;  // progression profit counting virtual bets as staked
  Money f_act = 0;  // money actually won or lost in the progression
  std::uint32_t coups_in_progression = 0;
  bool had_virtual = false;

  static LabState fresh(const LabConfig& config);
  /// A mid-progression state holding `terms`, with f_sys = sum(terms) - sum(init_list)
  /// and f_act = f_sys (no virtual bets assumed).
  static LabState from_list(std::span<const Money> terms, const LabConfig& config);
};

struct CalledBet {
  Money amount = 0;
  bool is_virtual = false;
};

[[noreturn]] void throw_empty_scorecard();

/// First plus last term (the single term for a one-term list); virtual when
/// below the house minimum. Throws std::logic_error on an empty list.
inline CalledBet called_bet(const LabState& state, const LabConfig& config) {
  if (state.list.empty()) throw_empty_scorecard();
  Money amount = state.list.size() == 1 ? state.list.front() : state.list.front() + state.list.back();
  return {amount, amount < config.min_bet};
}

enum class ProgressionKind : std::uint8_t { winning, losing, incomplete };
const char* to_string(ProgressionKind k);

struct ProgressionOutcome {
  ProgressionKind kind = ProgressionKind::incomplete;
  Money amount_sys = 0;
  Money amount_act = 0;
  std::uint32_t coups = 0;
  Money final_sum = 0;
  std::vector<Money> final_list;  // empty for losing progressions
};

struct StepResult {
  CalledBet called;
  Wager wager;  // real money only: a virtual bet settles as (0, 0)
  std::optional<ProgressionOutcome> completed;
};

/// Advances the scorecard by one coup outcome. A win appends the called
/// amount, a loss cancels the first and last terms, a tie changes nothing.
/// When the list empties (losing) or the next called bet would exceed
/// max_bet (winning), the progression is reported and the state restarts.
StepResult apply(LabState& state, Outcome outcome, const LabConfig& config);

/// Closes an in-flight progression at the end of a playing day.
std::optional<ProgressionOutcome> finalize(LabState& state, const LabConfig& config);

}  // namespace casino::labouchere
