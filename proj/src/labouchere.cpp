#include "casino/labouchere.hpp"

#include <numeric>
#include <stdexcept>

namespace casino::labouchere {

void LabConfig::validate() const {
  if (init_list.empty()) throw std::invalid_argument("initial list must be nonempty");
  for (Money t : init_list) {
    if (t < 1) throw std::invalid_argument("initial list terms must be >= 1");
  }
  if (min_bet < 0 || min_bet > max_bet) throw std::invalid_argument("need 0 <= min_bet <= max_bet");
  Money opening = init_list.size() == 1 ? init_list.front() : init_list.front() + init_list.back();
  if (opening > max_bet) throw std::invalid_argument("opening bet exceeds max_bet");
}

Money LabConfig::init_sum() const { return std::accumulate(init_list.begin(), init_list.end(), Money{0}); }

ScoreCard::ScoreCard(std::span<const Money> terms) { assign(terms); }

void ScoreCard::assign(std::span<const Money> terms) {
  terms_.assign(terms.begin(), terms.end());
  head_ = 0;
  sum_ = std::accumulate(terms.begin(), terms.end(), Money{0});
}

void ScoreCard::pop_front() {
  sum_ -= terms_[head_];
  ++head_;
  if (head_ == terms_.size()) {
    terms_.clear();
    head_ = 0;
  } else if (head_ >= 32 && 2 * head_ >= terms_.size()) {
    terms_.erase(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(head_));
    head_ = 0;
  }
}

LabState LabState::fresh(const LabConfig& config) {
  LabState s;
  s.list.assign(config.init_list);
  return s;
}

LabState LabState::from_list(std::span<const Money> terms, const LabConfig& config) {
  LabState s;
  s.list.assign(terms);
  s.f_sys = s.list.sum() - config.init_sum();
  s.f_act = s.f_sys;
  return s;
}

void throw_empty_scorecard() { throw std::logic_error("called_bet: empty scorecard"); }

const char* to_string(ProgressionKind k) {
  switch (k) {
    case ProgressionKind::winning: return "winning";
    case ProgressionKind::losing: return "losing";
    case ProgressionKind::incomplete: return "incomplete";
  }
  return "?";
}

namespace {

ProgressionOutcome close_progression(LabState& state, ProgressionKind kind, const LabConfig& config) {
  ProgressionOutcome out;
  out.kind = kind;
  out.amount_sys = state.f_sys;
  out.amount_act = state.f_act;
  out.coups = state.coups_in_progression;
  out.final_sum = state.list.sum();
  if (!state.list.empty()) out.final_list = state.list.to_vector();
  state.list.assign(config.init_list);
  state.f_sys = 0;
  state.f_act = 0;
  state.coups_in_progression = 0;
  state.had_virtual = false;
  return out;
}

}  // namespace

StepResult apply(LabState& state, Outcome outcome, const LabConfig& config) {
  StepResult step;
  step.called = called_bet(state, config);
  const Money amount = step.called.amount;
  const Money real = step.called.is_virtual ? 0 : amount;
  state.had_virtual |= step.called.is_virtual;

  switch (outcome) {
    case Outcome::win:
      state.list.push_back(amount);
      state.f_sys += amount;
      state.f_act += real;
      step.wager = settle(real, 2 * real);
      break;
    case Outcome::loss:
      state.list.pop_front();
      if (!state.list.empty()) state.list.pop_back();
      state.f_sys -= amount;
      state.f_act -= real;
      step.wager = settle(real, 0);
      break;
    case Outcome::tie:
      step.wager = settle(real, real);
      break;
  }
  ++state.coups_in_progression;

  if (state.list.empty()) {
    step.completed = close_progression(state, ProgressionKind::losing, config);
  } else if (called_bet(state, config).amount > config.max_bet) {
    step.completed = close_progression(state, ProgressionKind::winning, config);
  }
  return step;
}

std::optional<ProgressionOutcome> finalize(LabState& state, const LabConfig& config) {
  if (state.coups_in_progression == 0) return std::nullopt;
  return close_progression(state, ProgressionKind::incomplete, config);
}

}  // namespace casino::labouchere
