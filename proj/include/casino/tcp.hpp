#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "casino/wager.hpp"

namespace casino::tcp {

/// rank 2..14 (ace high, also low in A-2-3); suit 0..3.
struct Card {
  int rank = 2;
  int suit = 0;

  int index() const { return (rank - 2) * 4 + suit; }
  static Card from_index(int i) { return {i / 4 + 2, i % 4}; }
  friend bool operator==(const Card&, const Card&) = default;
};

/// Parses "As", "Td", "6c", "10h" (suits s, h, d, c).
Card parse_card(std::string_view text);
std::string to_string(const Card& c);

using Hand3 = std::array<Card, 3>;

enum class Category : std::uint8_t { high_card, pair, flush, straight, three_of_a_kind, straight_flush };
const char* to_string(Category c);

/// Category plus a descending rank vector for ties; ordered lexicographically.
struct HandClass {
  Category category = Category::high_card;
  std::array<int, 3> tiebreak{};

  /// Packs the class into an integer with the same ordering.
  std::uint32_t score() const;
  static HandClass from_score(std::uint32_t score);

  friend auto operator<=>(const HandClass&, const HandClass&) = default;
};

/// Throws std::domain_error on duplicate cards.
HandClass tcp_rank(const Hand3& hand);

/// Lowest hand that qualifies the dealer: queen high.
HandClass dealer_qualifier();
/// Weakest hand the optimal gambler plays: unsuited Q-6-4.
HandClass optimal_threshold();
/// Parses "Q-6-4" / "Q64" / "9-9-2" into the class of that rank pattern held unsuited.
HandClass parse_rank_pattern(std::string_view text);

class TcpStrategy {
 public:
  enum class Kind : std::uint8_t { threshold, always_play, always_fold };

  static TcpStrategy optimal() { return threshold(optimal_threshold()); }
  static TcpStrategy threshold(HandClass weakest_play) { return {Kind::threshold, weakest_play}; }
  static TcpStrategy always_play() { return {Kind::always_play, {}}; }
  static TcpStrategy always_fold() { return {Kind::always_fold, {}}; }

  bool plays(const HandClass& hand) const;
  Kind kind() const { return kind_; }
  std::string describe() const;

 private:
  TcpStrategy(Kind kind, HandClass t) : kind_(kind), threshold_(t) {}
  Kind kind_;
  HandClass threshold_;
};

enum class Decision : std::uint8_t { play, fold };
Decision tcp_strategy(const HandClass& hand, const TcpStrategy& strategy = TcpStrategy::optimal());

/// Ante bonus per unit ante: 1 for a straight, 4 for trips, 5 for a straight flush.
int ante_bonus(Category c);

/// Profit per unit ante for one gambler/dealer deal under the ante-play rules.
int settle_ante_play(const HandClass& gambler, const HandClass& dealer, Decision decision);

struct TcpAnalysis {
  // Integer tallies behind the rationals.
  std::int64_t gambler_hands = 0;
  std::int64_t dealer_hands_per_gambler = 0;
  std::int64_t fold_hands = 0;
  std::int64_t ante_play_profit = 0;  // summed over every (gambler, dealer) pair, bonus excluded
  std::int64_t bonus_profit = 0;      // summed over gambler hands

  Rational e_bet;
  Rational e_profit;
  Rational ha_total;
  Rational ha_base;
  Rational fold_fraction;
};

/// Exact enumeration of every gambler hand against every dealer hand from
/// the remaining 49 cards, in parallel over gambler hands. workers == 0 uses
/// the OpenMP default.
TcpAnalysis tcp_exact(const TcpStrategy& strategy, int workers = 0);
/// Same enumeration on one thread.
TcpAnalysis tcp_exact_serial(const TcpStrategy& strategy);

}  // namespace casino::tcp
