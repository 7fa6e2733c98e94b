#include "casino/roulette.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

namespace casino::roulette {

namespace {

constexpr std::array<int, 18> kRed = {1,  3,  5,  7,  9,  12, 14, 16, 18,
                                      19, 21, 23, 25, 27, 30, 32, 34, 36};

constexpr std::array<bool, kPockets> kIsRed = [] {
  std::array<bool, kPockets> t{};
  for (int v : kRed) t[static_cast<std::size_t>(v)] = true;
  return t;
}();

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class T>
T parse_integer(std::string_view s, std::string_view what) {
  s = trim(s);
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

bool is_red(int value) {
  return value > 0 && value < kPockets && kIsRed[static_cast<std::size_t>(value)];
}

Color Pocket::color() const {
  if (value_ == 0) return Color::green;
  return is_red(value_) ? Color::red : Color::black;
}

std::string_view to_string(Chance c) {
  switch (c) {
    case Chance::red: return "red";
    case Chance::black: return "black";
    case Chance::odd: return "odd";
    case Chance::even: return "even";
    case Chance::low: return "low";
    case Chance::high: return "high";
  }
  return "?";
}

Chance parse_chance(std::string_view name) {
  for (Chance c : kAllChances) {
    if (to_string(c) == name) return c;
  }
  throw std::invalid_argument("unknown even chance '" + std::string(name) + "'");
}

bool hits(Chance c, Pocket p) {
  int v = p.value();
  if (v == 0) return false;
  switch (c) {
    case Chance::red: return is_red(v);
    case Chance::black: return !is_red(v);
    case Chance::odd: return v % 2 == 1;
    case Chance::even: return v % 2 == 0;
    case Chance::low: return v <= 18;
    case Chance::high: return v >= 19;
  }
  return false;
}

char to_symbol(Outcome o) {
  switch (o) {
    case Outcome::win: return 'W';
    case Outcome::tie: return 'T';
    case Outcome::loss: return 'L';
  }
  return '?';
}

ScriptedWheel::ScriptedWheel(std::vector<int> pockets) : pockets_(std::move(pockets)) {
  for (int v : pockets_) (void)Pocket(v);
}

Pocket ScriptedWheel::spin() {
  if (next_ >= pockets_.size()) throw std::out_of_range("ScriptedWheel: script exhausted");
  return Pocket(pockets_[next_++]);
}

CoupResult single_spin_coup(Pocket p) {
  static const auto table = [] {
    std::array<std::array<Outcome, 6>, kPockets> t{};
    for (int v = 0; v < kPockets; ++v) {
      for (Chance c : kAllChances) {
        t[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] = hits(c, Pocket(v)) ? Outcome::win : Outcome::loss;
      }
    }
    return t;
  }();
  CoupResult r;
  r.spins_used = 1;
  r.first_pocket = p;
  r.resolver_pocket = p;
  r.outcome = table[static_cast<std::size_t>(p.value())];
  return r;
}

CoupResult resolve_en_prison(Pocket first, Pocket resolver, int spins_used) {
  if (resolver.is_zero()) throw std::domain_error("resolve_en_prison: resolver must be nonzero");
  CoupResult r;
  r.spins_used = spins_used;
  r.first_pocket = first;
  r.resolver_pocket = resolver;
  for (Chance c : kAllChances) {
    r.outcome[static_cast<std::size_t>(c)] = hits(c, resolver) ? Outcome::tie : Outcome::loss;
  }
  return r;
}

NumberSet::NumberSet(std::span<const int> numbers) {
  for (int v : numbers) {
    if (v < 1 || v > 36) throw std::domain_error("NumberSet: numbers must lie in 1..36");
    if (bits_.test(static_cast<std::size_t>(v))) throw std::domain_error("NumberSet: duplicate number");
    bits_.set(static_cast<std::size_t>(v));
  }
  if (bits_.none()) throw std::domain_error("NumberSet: empty set");
}

std::vector<int> NumberSet::numbers() const {
  std::vector<int> out;
  for (int v = 1; v < kPockets; ++v) {
    if (bits_.test(static_cast<std::size_t>(v))) out.push_back(v);
  }
  return out;
}

std::string_view to_string(SettleMode m) {
  switch (m) {
    case SettleMode::en_prison: return "enprison";
    case SettleMode::partager: return "partager";
    case SettleMode::none: return "none";
  }
  return "?";
}

SettleMode parse_settle_mode(std::string_view name) {
  if (name == "enprison" || name == "en_prison") return SettleMode::en_prison;
  if (name == "partager") return SettleMode::partager;
  if (name == "none") return SettleMode::none;
  throw std::invalid_argument("unknown settlement mode '" + std::string(name) + "'");
}

Wager settle_bet(const BetSpec& bet, const CoupResult& coup, SettleMode mode) {
  if (bet.stake < 0) throw std::domain_error("settle_bet: negative stake");
  const Money s = bet.stake;
  if (const auto* numbers = std::get_if<NumberSet>(&bet.target)) {
    if (!numbers->contains(coup.first_pocket)) return settle(s, 0);
    const Money gross = s * 36;
    if (gross % numbers->size() != 0) {
      throw std::domain_error("settle_bet: stake*36/m is not a whole unit");
    }
    return settle(s, gross / numbers->size());
  }
  const Chance c = std::get<Chance>(bet.target);
  switch (mode) {
    case SettleMode::en_prison:
      switch (coup.outcome_for(c)) {
        case Outcome::win: return settle(s, 2 * s);
        case Outcome::tie: return settle(s, s);
        case Outcome::loss: return settle(s, 0);
      }
      break;
    case SettleMode::partager:
      if (coup.first_pocket.is_zero()) {
        if (s % 2 != 0) throw std::domain_error("settle_bet: partager needs an even stake");
        return settle(s, s / 2);
      }
      return settle(s, hits(c, coup.first_pocket) ? 2 * s : 0);
    case SettleMode::none:
      return settle(s, hits(c, coup.first_pocket) ? 2 * s : 0);
  }
  return settle(s, 0);
}

Rational exact_profit_per_unit(const std::variant<Chance, NumberSet>& target, SettleMode mode) {
  const Rational p_pocket(1, kPockets);
  Rational total = 0;
  if (const auto* numbers = std::get_if<NumberSet>(&target)) {
    const Rational win_profit = Rational(36, numbers->size()) - 1;
    for (int v = 0; v < kPockets; ++v) {
      total += p_pocket * (numbers->contains(Pocket(v)) ? win_profit : Rational(-1));
    }
    return total;
  }
  const Chance c = std::get<Chance>(target);
  for (int v = 1; v < kPockets; ++v) {
    total += p_pocket * (hits(c, Pocket(v)) ? 1 : -1);
  }
  switch (mode) {
    case SettleMode::none: total += p_pocket * -1; break;
    case SettleMode::partager: total += p_pocket * Rational(-1, 2); break;
    case SettleMode::en_prison: {
      const Rational p_resolver(1, kPockets - 1);
      for (int v = 1; v < kPockets; ++v) {
        total += p_pocket * p_resolver * (hits(c, Pocket(v)) ? 0 : -1);
      }
      break;
    }
  }
  return total;
}

std::vector<BetSpec> parse_bets(std::string_view spec) {
  std::vector<BetSpec> bets;
  while (!spec.empty()) {
    auto comma = spec.find(',');
    std::string_view item = trim(spec.substr(0, comma));
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("bet '" + std::string(item) + "' must look like target=stake");
    }
    std::string_view target = trim(item.substr(0, eq));
    Money stake = parse_integer<Money>(item.substr(eq + 1), "stake");
    if (stake <= 0) throw std::invalid_argument("stake must be positive");
    if (!target.empty() && std::isalpha(static_cast<unsigned char>(target.front()))) {
      bets.push_back({parse_chance(target), stake});
      continue;
    }
    std::vector<int> numbers;
    while (!target.empty()) {
      auto plus = target.find('+');
      numbers.push_back(parse_integer<int>(target.substr(0, plus), "number"));
      target = plus == std::string_view::npos ? std::string_view{} : target.substr(plus + 1);
    }
    bets.push_back({NumberSet(numbers), stake});
  }
  if (bets.empty()) throw std::invalid_argument("no bets given");
  return bets;
}

RouletteRun simulate(Stream& stream, std::uint64_t coups, std::span<const BetSpec> bets,
                     SettleMode mode, std::span<const std::uint64_t> checkpoints) {
  RouletteRun run;
  run.trace.reserve(checkpoints.size());
  RandomWheel wheel(stream);
  std::vector<Wager> wagers(bets.size());
  auto next_checkpoint = checkpoints.begin();
  for (std::uint64_t k = 1; k <= coups; ++k) {
    CoupResult coup = mode == SettleMode::en_prison ? resolve_coup(wheel) : single_spin_coup(wheel.spin());
    run.spins += static_cast<std::uint64_t>(coup.spins_used);
    for (std::size_t i = 0; i < bets.size(); ++i) wagers[i] = settle_bet(bets[i], coup, mode);
    run.totals = ratio_update_coup(run.totals, wagers);
    while (next_checkpoint != checkpoints.end() && *next_checkpoint <= k) {
      if (*next_checkpoint == k) {
        run.trace.push_back({k, run.totals.profit_ratio().value_or(0.0)});
      }
      ++next_checkpoint;
    }
  }
  return run;
}

std::vector<std::uint64_t> log_checkpoints(std::uint64_t n, int per_decade) {
  std::vector<std::uint64_t> out;
  if (n == 0) return out;
  const double step = std::pow(10.0, 1.0 / per_decade);
  for (double x = 1.0; x < static_cast<double>(n); x *= step) {
    auto k = static_cast<std::uint64_t>(std::llround(x));
    if (out.empty() || k > out.back()) out.push_back(k);
  }
  if (out.empty() || out.back() != n) out.push_back(n);
  return out;
}

}  // namespace casino::roulette
