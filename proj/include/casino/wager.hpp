#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace casino {

/// Integral money in the smallest unit a game deals in (francs for the Leigh
/// experiment, base-stake units for the compound games).
using Money = std::int64_t;

/// Exact rational used by every analysis routine. Floating point only
/// appears when a value is reported.
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" with q omitted when it is 1.
std::string to_fraction_string(const Rational& r);
double to_double(const Rational& r);
/// "p/q (d)" with d printed to 9 significant figures.
std::string format_rational(const Rational& r);

/// A resolved wager: amount bet, amount returned, and the resulting profit.
class Wager {
 public:
  Wager() = default;

  Money bet() const { return bet_; }
  Money ret() const { return ret_; }
  Money profit() const { return ret_ - bet_; }

  friend Wager settle(Money bet, Money ret);

 private:
  Wager(Money bet, Money ret) : bet_(bet), ret_(ret) {}

  Money bet_ = 0;
  Money ret_ = 0;
};

[[noreturn]] void throw_bad_settle(Money bet, Money ret);

/// Builds a wager from bet and return. Throws std::domain_error on negative
/// inputs or on a nonzero return for a zero bet.
inline Wager settle(Money bet, Money ret) {
  if (bet < 0 || ret < 0 || (bet == 0 && ret != 0)) throw_bad_settle(bet, ret);
  return Wager(bet, ret);
}

struct RtpHa {
  Rational rtp;
  Rational ha;
};

/// House advantage -E[X]/E[B] and its complement. Requires e_bet > 0.
RtpHa rtp_ha(const Rational& e_profit, const Rational& e_bet);

/// Running totals behind the ratios of total return and total profit to
/// total amount bet. Checked 64-bit accumulators: 10^10 coups at the Leigh
/// table maximum stay below 2^63 by four orders of magnitude.
struct RatioState {
  std::uint64_t n = 0;
  Money cum_bet = 0;
  Money cum_ret = 0;
  Money cum_profit = 0;

  std::optional<double> return_ratio() const;
  std::optional<double> profit_ratio() const;

  friend bool operator==(const RatioState&, const RatioState&) = default;
};

/// Adds one wager. Throws std::overflow_error if an accumulator would wrap.
RatioState ratio_update(RatioState state, const Wager& w);
/// Adds one coup made of several simultaneous wagers (counts as one coup).
RatioState ratio_update_coup(RatioState state, std::span<const Wager> coup);
RatioState merge(const RatioState& a, const RatioState& b);

/// Bracket [chi_lo, chi_hi] on the limiting profit ratio; the return-ratio
/// bracket is the same shifted by one.
class BoundSpec {
 public:
  BoundSpec(Rational chi_lo, Rational chi_hi);

  const Rational& chi_lo() const { return chi_lo_; }
  const Rational& chi_hi() const { return chi_hi_; }
  Rational rho_lo() const { return 1 + chi_lo_; }
  Rational rho_hi() const { return 1 + chi_hi_; }

 private:
  Rational chi_lo_;
  Rational chi_hi_;
};

struct BoundReport {
  double min_tail = 0;
  double max_tail = 0;
  std::size_t tail_length = 0;
  bool pass = false;
};

/// Checks that every ratio after the first burn_in entries lies in
/// [chi_lo - tol, chi_hi + tol].
BoundReport check_bounds(std::span<const double> trace, const BoundSpec& spec,
                         std::size_t burn_in, double tol);

}  // namespace casino
