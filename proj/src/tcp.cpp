#include "casino/tcp.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

#include <omp.h>

namespace casino::tcp {

namespace {

constexpr std::string_view kRankChars = "23456789TJQKA";
constexpr std::string_view kSuitChars = "shdc";

int parse_rank(std::string_view& text) {
  if (text.starts_with("10")) {
    text.remove_prefix(2);
    return 10;
  }
  if (text.empty()) throw std::invalid_argument("missing rank");
  auto pos = kRankChars.find(static_cast<char>(std::toupper(static_cast<unsigned char>(text.front()))));
  if (pos == std::string_view::npos) throw std::invalid_argument("bad rank '" + std::string(1, text.front()) + "'");
  text.remove_prefix(1);
  return static_cast<int>(pos) + 2;
}

struct IndexedHand {
  std::uint64_t mask;
  std::uint32_t score;
  Category category;
};

const std::vector<IndexedHand>& all_hands() {
  static const std::vector<IndexedHand> hands = [] {
    std::vector<IndexedHand> out;
    out.reserve(22100);
    for (int a = 0; a < 52; ++a) {
      for (int b = a + 1; b < 52; ++b) {
        for (int c = b + 1; c < 52; ++c) {
          HandClass hc = tcp_rank({Card::from_index(a), Card::from_index(b), Card::from_index(c)});
          out.push_back({(1ULL << a) | (1ULL << b) | (1ULL << c), hc.score(), hc.category});
        }
      }
    }
    return out;
  }();
  return hands;
}

struct HandTally {
  std::int64_t fold = 0;
  std::int64_t ante_play = 0;
  std::int64_t bonus = 0;
  std::int64_t dealer_hands = 0;
};

HandTally tally_hand(const IndexedHand& g, const std::vector<IndexedHand>& hands,
                     const TcpStrategy& strategy, std::uint32_t qualifier) {
  HandTally t;
  t.bonus = ante_bonus(g.category);
  const bool play = strategy.plays(HandClass::from_score(g.score));
  if (!play) t.fold = 1;
  for (const auto& d : hands) {
    if (d.mask & g.mask) continue;
    ++t.dealer_hands;
    if (!play) {
      t.ante_play -= 1;
    } else if (d.score < qualifier) {
      t.ante_play += 1;
    } else if (g.score > d.score) {
      t.ante_play += 2;
    } else if (g.score < d.score) {
      t.ante_play -= 2;
    }
  }
  return t;
}

TcpAnalysis finish(std::int64_t hands, std::int64_t dealer_hands, std::int64_t fold,
                   std::int64_t ante_play, std::int64_t bonus) {
  TcpAnalysis a;
  a.gambler_hands = hands;
  a.dealer_hands_per_gambler = dealer_hands;
  a.fold_hands = fold;
  a.ante_play_profit = ante_play;
  a.bonus_profit = bonus;
  const Rational pairs = Rational(hands) * dealer_hands;
  a.fold_fraction = Rational(fold, hands);
  a.e_bet = a.fold_fraction + 2 * (1 - a.fold_fraction);
  a.e_profit = Rational(ante_play) / pairs + Rational(bonus, hands);
  auto split = rtp_ha(a.e_profit, a.e_bet);
  a.ha_total = split.ha;
  a.ha_base = rtp_ha(a.e_profit, 1).ha;
  return a;
}

}  // namespace

Card parse_card(std::string_view text) {
  Card c;
  c.rank = parse_rank(text);
  if (text.size() != 1) throw std::invalid_argument("bad card suffix");
  auto s = kSuitChars.find(static_cast<char>(std::tolower(static_cast<unsigned char>(text.front()))));
  if (s == std::string_view::npos) throw std::invalid_argument("bad suit");
  c.suit = static_cast<int>(s);
  return c;
}

std::string to_string(const Card& c) {
  return {kRankChars[static_cast<std::size_t>(c.rank - 2)], kSuitChars[static_cast<std::size_t>(c.suit)]};
}

const char* to_string(Category c) {
  switch (c) {
    case Category::high_card: return "high card";
    case Category::pair: return "pair";
    case Category::flush: return "flush";
    case Category::straight: return "straight";
    case Category::three_of_a_kind: return "three of a kind";
    case Category::straight_flush: return "straight flush";
  }
  return "?";
}

std::uint32_t HandClass::score() const {
  return (static_cast<std::uint32_t>(category) << 12) | (static_cast<std::uint32_t>(tiebreak[0]) << 8) |
         (static_cast<std::uint32_t>(tiebreak[1]) << 4) | static_cast<std::uint32_t>(tiebreak[2]);
}

HandClass HandClass::from_score(std::uint32_t score) {
  return {static_cast<Category>(score >> 12),
          {static_cast<int>((score >> 8) & 0xF), static_cast<int>((score >> 4) & 0xF),
           static_cast<int>(score & 0xF)}};
}

HandClass tcp_rank(const Hand3& hand) {
  for (const auto& c : hand) {
    if (c.rank < 2 || c.rank > 14 || c.suit < 0 || c.suit > 3) throw std::domain_error("invalid card");
  }
  if (hand[0] == hand[1] || hand[0] == hand[2] || hand[1] == hand[2]) {
    throw std::domain_error("tcp_rank: duplicate card");
  }
  std::array<int, 3> r = {hand[0].rank, hand[1].rank, hand[2].rank};
  std::sort(r.begin(), r.end(), std::greater<>());
  const bool flush = hand[0].suit == hand[1].suit && hand[1].suit == hand[2].suit;

  if (r[0] == r[2]) return {Category::three_of_a_kind, {r[0], 0, 0}};
  if (r[0] == r[1]) return {Category::pair, {r[0], r[2], 0}};
  if (r[1] == r[2]) return {Category::pair, {r[1], r[0], 0}};

  std::array<int, 3> straight_top{};
  bool straight = false;
  if (r[0] - r[1] == 1 && r[1] - r[2] == 1) {
    straight = true;
    straight_top = {r[0], r[1], r[2]};
  } else if (r == std::array<int, 3>{14, 3, 2}) {
    straight = true;
    straight_top = {3, 2, 1};
  }
  if (straight) return {flush ? Category::straight_flush : Category::straight, straight_top};
  return {flush ? Category::flush : Category::high_card, r};
}

HandClass dealer_qualifier() { return {Category::high_card, {12, 0, 0}}; }

HandClass optimal_threshold() { return {Category::high_card, {12, 6, 4}}; }

HandClass parse_rank_pattern(std::string_view text) {
  std::array<int, 3> ranks{};
  std::size_t n = 0;
  while (!text.empty()) {
    if (text.front() == '-' || std::isspace(static_cast<unsigned char>(text.front()))) {
      text.remove_prefix(1);
      continue;
    }
    if (n == 3) throw std::invalid_argument("rank pattern needs exactly three ranks");
    ranks[n++] = parse_rank(text);
  }
  if (n != 3) throw std::invalid_argument("rank pattern needs exactly three ranks");
  return tcp_rank({Card{ranks[0], 0}, Card{ranks[1], 1}, Card{ranks[2], 2}});
}

bool TcpStrategy::plays(const HandClass& hand) const {
  switch (kind_) {
    case Kind::always_play: return true;
    case Kind::always_fold: return false;
    case Kind::threshold: return hand >= threshold_;
  }
  return false;
}

std::string TcpStrategy::describe() const {
  switch (kind_) {
    case Kind::always_play: return "always-play";
    case Kind::always_fold: return "always-fold";
    case Kind::threshold: {
      std::string s = "play ";
      s += to_string(threshold_.category);
      s += " ";
      for (int i = 0; i < 3; ++i) {
        if (threshold_.tiebreak[static_cast<std::size_t>(i)] >= 2) {
          if (i > 0) s += '-';
          s += kRankChars[static_cast<std::size_t>(threshold_.tiebreak[static_cast<std::size_t>(i)] - 2)];
        }
      }
      return s + " or better";
    }
  }
  return "?";
}

Decision tcp_strategy(const HandClass& hand, const TcpStrategy& strategy) {
  return strategy.plays(hand) ? Decision::play : Decision::fold;
}

int ante_bonus(Category c) {
  switch (c) {
    case Category::straight: return 1;
    case Category::three_of_a_kind: return 4;
    case Category::straight_flush: return 5;
    default: return 0;
  }
}

int settle_ante_play(const HandClass& gambler, const HandClass& dealer, Decision decision) {
  int profit = ante_bonus(gambler.category);
  if (decision == Decision::fold) return profit - 1;
  if (dealer < dealer_qualifier()) return profit + 1;
  if (gambler > dealer) return profit + 2;
  if (gambler < dealer) return profit - 2;
  return profit;
}

TcpAnalysis tcp_exact(const TcpStrategy& strategy, int workers) {
  const auto& hands = all_hands();
  const std::uint32_t qualifier = dealer_qualifier().score();
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  const auto n = static_cast<std::int64_t>(hands.size());
  std::int64_t fold = 0, ante_play = 0, bonus = 0, dealer_min = INT64_MAX, dealer_max = 0;

#pragma omp parallel for schedule(dynamic, 64) num_threads(threads) \
    reduction(+ : fold, ante_play, bonus) reduction(min : dealer_min) reduction(max : dealer_max)
  for (std::int64_t i = 0; i < n; ++i) {
    HandTally t = tally_hand(hands[static_cast<std::size_t>(i)], hands, strategy, qualifier);
    fold += t.fold;
    ante_play += t.ante_play;
    bonus += t.bonus;
    dealer_min = std::min(dealer_min, t.dealer_hands);
    dealer_max = std::max(dealer_max, t.dealer_hands);
  }
  if (dealer_min != dealer_max) throw std::logic_error("tcp_exact: uneven dealer enumeration");
  return finish(n, dealer_min, fold, ante_play, bonus);
}

TcpAnalysis tcp_exact_serial(const TcpStrategy& strategy) {
  const auto& hands = all_hands();
  const std::uint32_t qualifier = dealer_qualifier().score();
  std::int64_t fold = 0, ante_play = 0, bonus = 0, dealer_hands = 0;
  for (const auto& g : hands) {
    HandTally t = tally_hand(g, hands, strategy, qualifier);
    fold += t.fold;
    ante_play += t.ante_play;
    bonus += t.bonus;
    dealer_hands = t.dealer_hands;
  }
  return finish(static_cast<std::int64_t>(hands.size()), dealer_hands, fold, ante_play, bonus);
}

}  // namespace casino::tcp
