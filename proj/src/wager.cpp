#include "casino/wager.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace casino {

namespace {

Money checked_add(Money a, Money b) {
  Money out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("ratio accumulator overflow");
  }
  return out;
}

}  // namespace

std::string to_fraction_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string format_rational(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", to_double(r));
  return to_fraction_string(r) + " (" + buf + ")";
}

void throw_bad_settle(Money bet, Money ret) {
  if (bet < 0 || ret < 0) {
    throw std::domain_error("settle: bet and return must be nonnegative");
  }
  (void)ret;
  throw std::domain_error("settle: a zero bet cannot return money");
}

RtpHa rtp_ha(const Rational& e_profit, const Rational& e_bet) {
  if (e_bet <= 0) throw std::domain_error("rtp_ha: expected bet must be positive");
  Rational ha = -e_profit / e_bet;
  return {1 - ha, ha};
}

std::optional<double> RatioState::return_ratio() const {
  if (cum_bet <= 0) return std::nullopt;
  return static_cast<double>(cum_ret) / static_cast<double>(cum_bet);
}

std::optional<double> RatioState::profit_ratio() const {
  if (cum_bet <= 0) return std::nullopt;
  return static_cast<double>(cum_profit) / static_cast<double>(cum_bet);
}

RatioState ratio_update(RatioState state, const Wager& w) {
  state.cum_bet = checked_add(state.cum_bet, w.bet());
  state.cum_ret = checked_add(state.cum_ret, w.ret());
  state.cum_profit = checked_add(state.cum_profit, w.profit());
  ++state.n;
  return state;
}

RatioState ratio_update_coup(RatioState state, std::span<const Wager> coup) {
  for (const auto& w : coup) {
    state.cum_bet = checked_add(state.cum_bet, w.bet());
    state.cum_ret = checked_add(state.cum_ret, w.ret());
    state.cum_profit = checked_add(state.cum_profit, w.profit());
  }
  ++state.n;
  return state;
}

RatioState merge(const RatioState& a, const RatioState& b) {
  RatioState out;
  out.n = a.n + b.n;
  out.cum_bet = checked_add(a.cum_bet, b.cum_bet);
  out.cum_ret = checked_add(a.cum_ret, b.cum_ret);
  out.cum_profit = checked_add(a.cum_profit, b.cum_profit);
  return out;
}

BoundSpec::BoundSpec(Rational chi_lo, Rational chi_hi)
    : chi_lo_(std::move(chi_lo)), chi_hi_(std::move(chi_hi)) {
  if (chi_lo_ > chi_hi_) throw std::domain_error("BoundSpec: chi_lo > chi_hi");
}

BoundReport check_bounds(std::span<const double> trace, const BoundSpec& spec,
                         std::size_t burn_in, double tol) {
  if (trace.size() <= burn_in) {
    throw std::domain_error("check_bounds: no ratios after burn-in");
  }
  auto tail = trace.subspan(burn_in);
  auto [lo_it, hi_it] = std::minmax_element(tail.begin(), tail.end());
  BoundReport report;
  report.min_tail = *lo_it;
  report.max_tail = *hi_it;
  report.tail_length = tail.size();
  report.pass = report.min_tail >= to_double(spec.chi_lo()) - tol &&
                report.max_tail <= to_double(spec.chi_hi()) + tol;
  return report;
}

}  // namespace casino
