#pragma once

#include <array>
#include <bitset>
#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "casino/rng.hpp"
#include "casino/wager.hpp"

namespace casino::roulette {

enum class Color : std::uint8_t { green, red, black };

inline constexpr int kPockets = 37;

class Pocket {
 public:
  constexpr Pocket() = default;
  constexpr explicit Pocket(int value) : value_(value) {
    if (value < 0 || value >= kPockets) throw std::domain_error("Pocket: value outside 0..36");
  }
  constexpr int value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }
  Color color() const;

  friend constexpr bool operator==(Pocket, Pocket) = default;

 private:
  int value_ = 0;
};

bool is_red(int value);

enum class Chance : std::uint8_t { red, black, odd, even, low, high };
inline constexpr std::array<Chance, 6> kAllChances = {Chance::red, Chance::black, Chance::odd,
                                                      Chance::even, Chance::low, Chance::high};
std::string_view to_string(Chance c);
/// Parses "red", "black", "odd", "even", "low", "high".
Chance parse_chance(std::string_view name);
bool hits(Chance c, Pocket p);

enum class Outcome : std::uint8_t { win, tie, loss };
char to_symbol(Outcome o);

struct CoupResult {
  int spins_used = 1;
  Pocket first_pocket;
  Pocket resolver_pocket;
  std::array<Outcome, 6> outcome{};

  Outcome outcome_for(Chance c) const { return outcome[static_cast<std::size_t>(c)]; }
};

/// Any source of wheel results: a seeded stream or a scripted sequence.
template <class S>
concept SpinSource = requires(S& s) {
  { s.spin() } -> std::same_as<Pocket>;
};

inline Pocket spin(Stream& stream) { return Pocket(static_cast<int>(next_below(stream, kPockets))); }

class RandomWheel {
 public:
  explicit RandomWheel(Stream& stream) : stream_(&stream) {}
  Pocket spin() { return roulette::spin(*stream_); }

 private:
  Stream* stream_;
};

/// Replays a fixed list of pockets; throws std::out_of_range when exhausted.
class ScriptedWheel {
 public:
  explicit ScriptedWheel(std::vector<int> pockets);
  Pocket spin();
  std::size_t remaining() const { return pockets_.size() - next_; }

 private:
  std::vector<int> pockets_;
  std::size_t next_ = 0;
};

/// Coup resolved by a single spin, as in games without the en prison rule.
CoupResult single_spin_coup(Pocket p);
/// Coup under the en prison rule: after a zero, spins continue until a
/// nonzero pocket decides every imprisoned even-chance bet (tie if hit, loss otherwise).
CoupResult resolve_en_prison(Pocket first, Pocket resolver, int spins_used);

template <SpinSource S>
CoupResult resolve_coup(S& source) {
  Pocket first = source.spin();
  if (!first.is_zero()) return single_spin_coup(first);
  int spins = 1;
  Pocket p = first;
  while (p.is_zero()) {
    p = source.spin();
    ++spins;
  }
  return resolve_en_prison(first, p, spins);
}

inline CoupResult resolve_coup(Stream& stream) {
  RandomWheel wheel(stream);
  return resolve_coup(wheel);
}

/// A set of m nonzero numbers, 1 <= m <= 36, paying 36/m - 1 to 1.
class NumberSet {
 public:
  explicit NumberSet(std::span<const int> numbers);
  int size() const { return static_cast<int>(bits_.count()); }
  bool contains(Pocket p) const { return bits_.test(static_cast<std::size_t>(p.value())); }
  std::vector<int> numbers() const;

 private:
  std::bitset<kPockets> bits_;
};

struct BetSpec {
  std::variant<Chance, NumberSet> target;
  Money stake = 0;
};

enum class SettleMode : std::uint8_t { en_prison, partager, none };
std::string_view to_string(SettleMode m);
SettleMode parse_settle_mode(std::string_view name);

/// Settles one bet against a resolved coup. Even chances pay 1 to 1; under
/// en prison a tie returns the stake; under partager a zero returns half.
/// Number sets resolve on the first pocket and return stake*36/m. Throws
/// std::domain_error when the return would not be a whole money unit.
Wager settle_bet(const BetSpec& bet, const CoupResult& coup, SettleMode mode);

/// Exact expected profit per unit stake, by enumeration of pockets.
Rational exact_profit_per_unit(const std::variant<Chance, NumberSet>& target, SettleMode mode);

/// Parses "red=2,17=1,1+2+3=3" into bets. Throws std::invalid_argument.
std::vector<BetSpec> parse_bets(std::string_view spec);

struct TracePoint {
  std::uint64_t coup = 0;
  double profit_ratio = 0;
};

struct RouletteRun {
  RatioState totals;
  std::uint64_t spins = 0;
  std::vector<TracePoint> trace;
};

/// Plays `coups` coups with the same bets every coup. In en prison mode a coup
/// may span several spins; other modes use one spin per coup. The profit
/// ratio is recorded after every coup listed in `checkpoints` (ascending).
RouletteRun simulate(Stream& stream, std::uint64_t coups, std::span<const BetSpec> bets,
                     SettleMode mode, std::span<const std::uint64_t> checkpoints);

/// Roughly `per_decade` logarithmically spaced coup indices in [1, n], always including n.
std::vector<std::uint64_t> log_checkpoints(std::uint64_t n, int per_decade = 10);

}  // namespace casino::roulette
