// casinosim: batch front end for the roulette, Labouchere, Three Card Poker
// and craps analyses. Exit codes: 0 ok, 2 usage, 3 runtime failure.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "casino/craps.hpp"
#include "casino/labouchere.hpp"
#include "casino/leigh.hpp"
#include "casino/roulette.hpp"
#include "casino/scripts.hpp"
#include "casino/tcp.hpp"
#include "json.hpp"

using namespace casino;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fixed6(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", p);
  return buf;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

ordered_json rational_json(const Rational& r) {
  return {{"fraction", to_fraction_string(r)}, {"value", to_double(r)}};
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

void write_json(const fs::path& path, const ordered_json& j) { write_text(path, j.dump(2) + "\n"); }

fs::path prepare_out(const std::string& dir) {
  fs::path p(dir);
  fs::create_directories(p);
  return p;
}

struct Manifest {
  std::string command;
  ordered_json config = ordered_json::object();
  std::uint64_t seed = 0;
  int workers = 1;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  ordered_json to_json() const {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {{"command", command}, {"config", config},      {"master_seed", seed},
            {"version", CASINO_VERSION}, {"workers", workers}, {"wall_time_seconds", secs}};
  }
};

int resolve_workers(int requested) {
  if (requested < 0) throw UsageError("--workers must be >= 0");
  return requested == 0 ? omp_get_max_threads() : requested;
}

// ---------------------------------------------------------------- leigh

struct LeighOptions {
  std::uint64_t replications = 100'000;
  std::uint64_t seed = 1;
  int days = 8;
  int coups_per_day = 360;
  Money min_bet = 5;
  Money max_bet = 2600;
  int workers = 0;
  std::string out = "leigh_out";
};

void moment_fields(ordered_json& j, const std::string& name, const IntegerMoments& m) {
  j[name + "_mean"] = m.mean();
  j[name + "_se"] = m.stderr_mean();
}

int cmd_leigh(const LeighOptions& o) {
  leigh::SessionConfig config;
  config.days = o.days;
  config.coups_per_day = o.coups_per_day;
  config.lab.min_bet = o.min_bet;
  config.lab.max_bet = o.max_bet;
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.replications < 1) throw UsageError("--replications must be >= 1");

  Manifest manifest;
  manifest.command = "leigh";
  manifest.seed = o.seed;
  manifest.workers = resolve_workers(o.workers);
  manifest.config = {{"replications", o.replications}, {"days", o.days},       {"coups_per_day", o.coups_per_day},
                     {"min_bet", o.min_bet},           {"max_bet", o.max_bet}, {"init_list", config.lab.init_list}};

  auto agg = leigh::run_experiment(o.seed, o.replications, config, manifest.workers);
  auto rep = leigh::poisson_report(agg);

  ordered_json s;
  s["replications"] = agg.replications;
  s["master_seed"] = o.seed;
  moment_fields(s, "n_winning", agg.n_winning);
  moment_fields(s, "sum_winning", agg.sum_winning);
  moment_fields(s, "n_losing", agg.n_losing);
  moment_fields(s, "sum_losing", agg.sum_losing);
  moment_fields(s, "n_incomplete", agg.n_incomplete);
  moment_fields(s, "sum_incomplete", agg.sum_incomplete);
  moment_fields(s, "total_bet", agg.total_bet);
  moment_fields(s, "total_profit", agg.total_profit);
  moment_fields(s, "sum_winning_sys", agg.sum_winning_sys);
  moment_fields(s, "sum_losing_sys", agg.sum_losing_sys);
  moment_fields(s, "sum_incomplete_sys", agg.sum_incomplete_sys);
  auto per = [](const IntegerMoments& amount, const IntegerMoments& count) -> ordered_json {
    if (count.sum == 0) return nullptr;
    return static_cast<double>(amount.sum) / static_cast<double>(count.sum);
  };
  s["amount_per_winning"] = per(agg.sum_winning, agg.n_winning);
  s["amount_per_losing"] = per(agg.sum_losing, agg.n_losing);
  s["amount_per_incomplete"] = per(agg.sum_incomplete, agg.n_incomplete);
  s["p_profitable"] = agg.p_profitable();
  s["p_profitable_se"] = stderr_of_proportion(agg.n_profitable, agg.replications);
  s["ratio_percent_mean"] = agg.ratio.mean;
  s["ratio_percent_sd"] = std::sqrt(agg.ratio.variance());
  s["consistency_ratio"] = leigh::consistency_ratio(agg);
  s["mu0"] = rep.mu0;
  s["mu1"] = rep.mu1;
  s["log10_tail27"] = rep.log10_tail27;
  s["max_n_winning"] = agg.max_n_winning;
  s["max_sum_winning"] = agg.max_sum_winning;
  s["bound_violations"] = rep.bound_violations;
  s["rows_under_two_se"] = rep.rows_under_two_se;
  s["exceeds_conjectured_max"] = rep.exceeds_conjectured_max;

  const fs::path out = prepare_out(o.out);
  write_json(out / "summary.json", s);

  std::string hist = "bin_low,bin_high,count\n";
  for (auto [bin, count] : agg.ratio_histogram) {
    hist += std::to_string(bin) + "," + std::to_string(bin + 1) + "," + std::to_string(count) + "\n";
  }
  write_text(out / "histogram.csv", hist);

  std::string dist = "n,count,p_hat,se,poisson_mu0,poisson_mu1_ccdf\n";
  for (const auto& row : rep.rows) {
    dist += std::to_string(row.n) + "," + std::to_string(row.count) + "," + fixed6(row.p_hat) + "," +
            fixed6(row.se) + "," + fixed6(row.poisson_mu0) + "," + fixed6(row.poisson_mu1_ccdf) + "\n";
  }
  write_text(out / "n_distribution.csv", dist);
  write_json(out / "manifest.json", manifest.to_json());

  std::printf("replications           %llu (seed %llu, %d workers)\n",
              static_cast<unsigned long long>(agg.replications), static_cast<unsigned long long>(o.seed),
              manifest.workers);
  auto line = [](const char* name, const IntegerMoments& m) {
    std::printf("%-22s %14.6f  (se %.6f)\n", name, m.mean(), m.stderr_mean());
  };
  line("winning progressions", agg.n_winning);
  line("won in winning", agg.sum_winning);
  line("losing progressions", agg.n_losing);
  line("lost in losing", agg.sum_losing);
  line("incomplete", agg.n_incomplete);
  line("won in incomplete", agg.sum_incomplete);
  line("total bet", agg.total_bet);
  std::printf("%-22s %14s\n", "P(profitable)", fixed6(agg.p_profitable()).c_str());
  std::printf("%-22s %14.7f\n", "consistency ratio", leigh::consistency_ratio(agg));
  std::printf("%-22s %14s\n", "P(N1 >= 27)", sci(std::pow(10.0, rep.log10_tail27)).c_str());
  std::printf("wrote %s\n", out.string().c_str());
  return 0;
}

// ---------------------------------------------------------------- scenario

struct ScenarioOptions {
  std::string script;
  Money min_bet = 5;
  Money max_bet = 2600;
  bool quiet = false;
};

std::string list_string(const std::vector<Money>& xs) {
  std::string s;
  for (Money x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

void print_progression(const char* who, const labouchere::ProgressionOutcome& p) {
  std::printf("%s%s progression: %lld (actual %lld) in %u coups; final list (%s)\n", who,
              labouchere::to_string(p.kind), static_cast<long long>(p.amount_sys),
              static_cast<long long>(p.amount_act), p.coups, list_string(p.final_list).c_str());
}

int cmd_scenario(const ScenarioOptions& o) {
  labouchere::LabConfig config;
  config.min_bet = o.min_bet;
  config.max_bet = o.max_bet;
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto script = scripts::parse_script(scripts::read_file(o.script));

  if (const auto* outcomes = std::get_if<std::vector<roulette::Outcome>>(&script)) {
    labouchere::LabState s = labouchere::LabState::fresh(config);
    int coup = 0;
    for (auto outcome : *outcomes) {
      ++coup;
      auto step = labouchere::apply(s, outcome, config);
      if (!o.quiet) {
        std::printf("%4d %c bet %6lld%s  list (%s)\n", coup, roulette::to_symbol(outcome),
                    static_cast<long long>(step.called.amount), step.called.is_virtual ? " virtual" : "        ",
                    list_string(step.completed ? step.completed->final_list : s.list.to_vector()).c_str());
      }
      if (step.completed) print_progression("", *step.completed);
    }
    if (auto p = labouchere::finalize(s, config)) print_progression("", *p);
    return 0;
  }

  // Pocket script: all six chances follow the scripted wheel for one day.
  const auto& pockets = std::get<std::vector<int>>(script);
  roulette::ScriptedWheel wheel(pockets);
  std::array<labouchere::LabState, 6> states;
  for (auto& s : states) s = labouchere::LabState::fresh(config);
  int coup = 0;
  while (wheel.remaining() > 0) {
    roulette::CoupResult r;
    try {
      r = roulette::resolve_coup(wheel);
    } catch (const std::out_of_range&) {
      std::printf("script ends inside an unresolved zero\n");
      break;
    }
    ++coup;
    if (!o.quiet) {
      std::printf("%4d pocket %2d", coup, r.first_pocket.value());
      if (r.spins_used > 1) std::printf(" -> %2d", r.resolver_pocket.value());
      std::printf("\n");
    }
    for (std::size_t i = 0; i < 6; ++i) {
      auto step = labouchere::apply(states[i], r.outcome[i], config);
      if (step.completed) {
        std::string who = std::string(roulette::to_string(roulette::kAllChances[i])) + ": ";
        print_progression(who.c_str(), *step.completed);
      }
    }
  }
  for (std::size_t i = 0; i < 6; ++i) {
    if (auto p = labouchere::finalize(states[i], config)) {
      std::string who = std::string(roulette::to_string(roulette::kAllChances[i])) + ": ";
      print_progression(who.c_str(), *p);
    }
  }
  return 0;
}

// ---------------------------------------------------------------- tcp

struct TcpOptions {
  std::string strategy = "optimal";
  std::string hand = "Q-6-4";
  int workers = 0;
  std::string out;
};

int cmd_tcp(const TcpOptions& o) {
  tcp::TcpStrategy strategy = tcp::TcpStrategy::optimal();
  if (o.strategy == "optimal") {
  } else if (o.strategy == "always-play") {
    strategy = tcp::TcpStrategy::always_play();
  } else if (o.strategy == "always-fold") {
    strategy = tcp::TcpStrategy::always_fold();
  } else if (o.strategy == "threshold") {
    try {
      strategy = tcp::TcpStrategy::threshold(tcp::parse_rank_pattern(o.hand));
    } catch (const std::exception& e) {
      throw UsageError(std::string("--hand: ") + e.what());
    }
  } else {
    throw UsageError("unknown strategy '" + o.strategy + "'");
  }
  Manifest manifest;
  manifest.command = "tcp";
  manifest.workers = resolve_workers(o.workers);
  manifest.config = {{"strategy", strategy.describe()}};

  auto a = tcp::tcp_exact(strategy, manifest.workers);
  std::printf("strategy      %s\n", strategy.describe().c_str());
  std::printf("E[bet]        %s\n", format_rational(a.e_bet).c_str());
  std::printf("E[profit]     %s\n", format_rational(a.e_profit).c_str());
  std::printf("HA (total)    %s\n", format_rational(a.ha_total).c_str());
  std::printf("HA (base)     %s\n", format_rational(a.ha_base).c_str());
  std::printf("P(fold)       %s\n", format_rational(a.fold_fraction).c_str());

  if (!o.out.empty()) {
    const fs::path out = prepare_out(o.out);
    ordered_json j = {{"strategy", strategy.describe()},
                      {"e_bet", rational_json(a.e_bet)},
                      {"e_profit", rational_json(a.e_profit)},
                      {"ha_total", rational_json(a.ha_total)},
                      {"ha_base", rational_json(a.ha_base)},
                      {"fold_fraction", rational_json(a.fold_fraction)},
                      {"ante_play_profit_sum", a.ante_play_profit},
                      {"bonus_profit_sum", a.bonus_profit}};
    write_json(out / "tcp.json", j);
    write_json(out / "manifest.json", manifest.to_json());
  }
  return 0;
}

// ---------------------------------------------------------------- craps

struct CrapsOptions {
  std::uint64_t rounds = 1'000'000;
  std::string odds = "345";
  std::uint64_t seed = 1;
  Money stake = 1;
  std::string dice;
  std::string out;
};

int cmd_craps(const CrapsOptions& o) {
  craps::Odds odds;
  try {
    odds = craps::parse_odds(o.odds);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.rounds < 1) throw UsageError("--rounds must be >= 1");
  const auto policy = craps::StakePolicy::flat(o.stake);
  try {
    policy.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto exact = craps::craps_exact(odds);
  std::printf("odds          %s\n", std::string(craps::to_string(odds)).c_str());
  std::printf("E[bet]        %s\n", format_rational(exact.e_bet).c_str());
  std::printf("E[profit]     %s\n", format_rational(exact.e_profit).c_str());
  std::printf("HA (total)    %s\n", format_rational(exact.ha_total).c_str());
  std::printf("HA (base)     %s\n", format_rational(exact.ha_base).c_str());
  std::printf("P(pass wins)  %s\n", format_rational(exact.p_win).c_str());

  craps::CrapsRun run;
  if (!o.dice.empty()) {
    craps::ScriptedDice dice(scripts::parse_integers(scripts::read_file(o.dice)));
    run = craps::craps_run_rounds(dice, o.rounds, odds, policy);
  } else {
    Stream stream = derive_stream(o.seed, 0);
    run = craps::craps_run_rounds(stream, o.rounds, odds, policy);
  }
  const double ratio = run.round_profit_ratio().value_or(0.0);
  double sb = 0, resid = 0;
  for (const auto& r : run.rounds) {
    sb += static_cast<double>(r.round_bet);
    const double e = static_cast<double>(r.round_profit) - ratio * static_cast<double>(r.round_bet);
    resid += e * e;
  }
  const double n = static_cast<double>(run.rounds.size());
  const double se = n > 1 ? std::sqrt(resid / (n - 1) * n) / sb : 0.0;
  std::printf("rounds        %llu (%llu decisions)\n", static_cast<unsigned long long>(run.rounds.size()),
              static_cast<unsigned long long>(run.totals.n));
  std::printf("round ratio   %.7f  (se %.7f; exact %.7f)\n", ratio, se, -to_double(exact.ha_total));
  std::printf("E[L^2]        %.4f  (mean length %.4f)\n", run.second_moment_length(), run.round_length.mean());

  if (!o.out.empty()) {
    const fs::path out = prepare_out(o.out);
    Manifest manifest;
    manifest.command = "craps";
    manifest.seed = o.seed;
    manifest.config = {{"rounds", o.rounds}, {"odds", craps::to_string(odds)}, {"stake", o.stake},
                       {"dice_script", o.dice}};
    std::string csv = "round,profit_ratio\n";
    Money cb = 0, cp = 0;
    auto cps = roulette::log_checkpoints(run.rounds.size());
    std::size_t next = 0;
    for (std::size_t m = 0; m < run.rounds.size(); ++m) {
      cb += run.rounds[m].round_bet;
      cp += run.rounds[m].round_profit;
      if (next < cps.size() && cps[next] == m + 1) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%zu,%.9g\n", m + 1, static_cast<double>(cp) / static_cast<double>(cb));
        csv += buf;
        ++next;
      }
    }
    write_text(out / "trace.csv", csv);
    ordered_json j = {{"e_bet", rational_json(exact.e_bet)},
                      {"e_profit", rational_json(exact.e_profit)},
                      {"ha_total", rational_json(exact.ha_total)},
                      {"ha_base", rational_json(exact.ha_base)},
                      {"rounds", run.rounds.size()},
                      {"decisions", run.totals.n},
                      {"round_profit_ratio", ratio},
                      {"round_profit_ratio_se", se},
                      {"second_moment_length", run.second_moment_length()}};
    write_json(out / "craps.json", j);
    write_json(out / "manifest.json", manifest.to_json());
  }
  return 0;
}

// ---------------------------------------------------------------- roulette

struct RouletteOptions {
  std::uint64_t coups = 1'000'000;
  std::string mode = "enprison";
  std::string bets = "red=1";
  std::uint64_t seed = 1;
  std::uint64_t burn_in = 0;
  double sigmas = 3.0;
  std::string out;
};

int cmd_roulette(const RouletteOptions& o) {
  roulette::SettleMode mode;
  std::vector<roulette::BetSpec> bets;
  try {
    mode = roulette::parse_settle_mode(o.mode);
    bets = roulette::parse_bets(o.bets);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (o.coups < 1) throw UsageError("--coups must be >= 1");
  const std::uint64_t burn_in = o.burn_in > 0 ? o.burn_in : o.coups / 10;
  if (burn_in >= o.coups) throw UsageError("--burn-in must be below --coups");

  std::vector<Rational> chi;
  for (const auto& b : bets) chi.push_back(roulette::exact_profit_per_unit(b.target, mode));
  const BoundSpec spec(*std::min_element(chi.begin(), chi.end()), *std::max_element(chi.begin(), chi.end()));
  // The overall profit ratio is a stake-weighted mean of the per-bet ratios.
  Rational mean = 0;
  Money stake = 0;
  for (std::size_t i = 0; i < bets.size(); ++i) {
    mean += chi[i] * bets[i].stake;
    stake += bets[i].stake;
  }
  mean /= stake;

  std::vector<std::uint64_t> checkpoints;
  for (auto c : roulette::log_checkpoints(o.coups)) {
    if (c > burn_in) break;
    checkpoints.push_back(c);
  }
  // Every coup after burn-in is checked against the bracket.
  const std::size_t first_tail = checkpoints.size();
  for (std::uint64_t c = burn_in + 1; c <= o.coups; ++c) checkpoints.push_back(c);

  Stream stream = derive_stream(o.seed, 0);
  auto run = roulette::simulate(stream, o.coups, bets, mode, checkpoints);
  std::vector<double> trace;
  trace.reserve(run.trace.size());
  for (const auto& p : run.trace) trace.push_back(p.profit_ratio);

  // Per-coup profit SD bounded by the sum of per-bet SDs; the tolerance is
  // sigmas standard errors at the first checked coup.
  double coup_sd = 0;
  for (const auto& b : bets) {
    Rational m1 = 0, m2 = 0;
    for (int v = 0; v < roulette::kPockets; ++v) {
      // Profits for this pocket; zero under en prison splits into its resolvers.
      std::vector<std::pair<Rational, Money>> cases;
      if (v == 0 && mode == roulette::SettleMode::en_prison) {
        for (int w = 1; w < roulette::kPockets; ++w) {
          auto coup = roulette::resolve_en_prison(roulette::Pocket(0), roulette::Pocket(w), 2);
          cases.emplace_back(Rational(1, 37 * 36), roulette::settle_bet(b, coup, mode).profit());
        }
      } else {
        auto coup = roulette::single_spin_coup(roulette::Pocket(v));
        cases.emplace_back(Rational(1, 37), roulette::settle_bet(b, coup, mode).profit());
      }
      for (auto& [p, x] : cases) {
        m1 += p * x;
        m2 += p * x * x;
      }
    }
    coup_sd += std::sqrt(to_double(m2 - m1 * m1));
  }
  const double tol = o.sigmas * coup_sd / static_cast<double>(stake) / std::sqrt(static_cast<double>(burn_in));
  const auto report = check_bounds(trace, spec, first_tail, tol);

  std::printf("mode          %s\n", std::string(roulette::to_string(mode)).c_str());
  std::printf("coups         %llu (%llu spins)\n", static_cast<unsigned long long>(run.totals.n),
              static_cast<unsigned long long>(run.spins));
  std::printf("exact mean    %s\n", format_rational(mean).c_str());
  std::printf("bracket       [%s, %s]\n", format_rational(spec.chi_lo()).c_str(),
              format_rational(spec.chi_hi()).c_str());
  std::printf("profit ratio  %.7f\n", run.totals.profit_ratio().value_or(0.0));
  std::printf("tail range    [%.7f, %.7f] after %llu coups, tol %.2e: %s\n", report.min_tail, report.max_tail,
              static_cast<unsigned long long>(burn_in), tol, report.pass ? "inside" : "outside");

  if (!o.out.empty()) {
    const fs::path out = prepare_out(o.out);
    std::string csv = "coup,profit_ratio\n";
    const auto log_cps = roulette::log_checkpoints(o.coups);
    std::size_t j = 0;
    for (const auto& p : run.trace) {
      while (j < log_cps.size() && log_cps[j] < p.coup) ++j;
      if (j < log_cps.size() && log_cps[j] == p.coup) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%llu,%.9g\n", static_cast<unsigned long long>(p.coup), p.profit_ratio);
        csv += buf;
      }
    }
    write_text(out / "trace.csv", csv);
    Manifest manifest;
    manifest.command = "roulette";
    manifest.seed = o.seed;
    manifest.config = {{"coups", o.coups}, {"mode", roulette::to_string(mode)}, {"bets", o.bets},
                       {"burn_in", burn_in}, {"sigmas", o.sigmas}};
    ordered_json j2 = {{"exact_mean", rational_json(mean)},
                       {"chi_lo", rational_json(spec.chi_lo())},
                       {"chi_hi", rational_json(spec.chi_hi())},
                       {"profit_ratio", run.totals.profit_ratio().value_or(0.0)},
                       {"min_tail", report.min_tail},
                       {"max_tail", report.max_tail},
                       {"tolerance", tol},
                       {"inside_bracket", report.pass}};
    write_json(out / "roulette.json", j2);
    write_json(out / "manifest.json", manifest.to_json());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casino wager simulations and exact analyses"};
  app.set_version_flag("--version", std::string(CASINO_VERSION));
  app.require_subcommand(1);

  LeighOptions lo;
  auto* leigh_cmd = app.add_subcommand("leigh", "Replicate the six-bettor reverse Labouchere experiment");
  leigh_cmd->add_option("--replications,-n", lo.replications, "Sessions to simulate")->capture_default_str();
  leigh_cmd->add_option("--seed", lo.seed, "Master seed")->capture_default_str();
  leigh_cmd->add_option("--days", lo.days, "Days per session")->capture_default_str();
  leigh_cmd->add_option("--coups-per-day", lo.coups_per_day, "Coups per day")->capture_default_str();
  leigh_cmd->add_option("--min-bet", lo.min_bet, "House minimum")->capture_default_str();
  leigh_cmd->add_option("--max-bet", lo.max_bet, "House maximum")->capture_default_str();
  leigh_cmd->add_option("--workers", lo.workers, "Worker threads (0 = all cores)")->capture_default_str();
  leigh_cmd->add_option("--out", lo.out, "Output directory")->capture_default_str();

  ScenarioOptions so;
  auto* scenario_cmd = app.add_subcommand("scenario", "Play a scripted outcome or pocket sequence");
  scenario_cmd->add_option("script", so.script, "Script file (W/T/L symbols or pocket numbers)")->required();
  scenario_cmd->add_option("--min-bet", so.min_bet, "House minimum")->capture_default_str();
  scenario_cmd->add_option("--max-bet", so.max_bet, "House maximum")->capture_default_str();
  scenario_cmd->add_flag("--quiet,-q", so.quiet, "Only print completed progressions");

  TcpOptions to;
  auto* tcp_cmd = app.add_subcommand("tcp", "Exact Three Card Poker ante-play analysis");
  tcp_cmd->add_option("--strategy", to.strategy, "optimal | always-play | always-fold | threshold")
      ->capture_default_str();
  tcp_cmd->add_option("--hand", to.hand, "Weakest played hand for --strategy threshold, e.g. Q-6-4")
      ->capture_default_str();
  tcp_cmd->add_option("--workers", to.workers, "Worker threads (0 = all cores)")->capture_default_str();
  tcp_cmd->add_option("--out", to.out, "Output directory for JSON");

  CrapsOptions co;
  auto* craps_cmd = app.add_subcommand("craps", "Pass line with free odds: closed forms and round simulation");
  craps_cmd->add_option("--rounds", co.rounds, "Seven-out rounds to simulate")->capture_default_str();
  craps_cmd->add_option("--odds", co.odds, "none | 345")->capture_default_str();
  craps_cmd->add_option("--seed", co.seed, "Master seed")->capture_default_str();
  craps_cmd->add_option("--stake", co.stake, "Flat pass-line stake")->capture_default_str();
  craps_cmd->add_option("--dice", co.dice, "Scripted dice totals file instead of random rolls");
  craps_cmd->add_option("--out", co.out, "Output directory for JSON and trace CSV");

  RouletteOptions ro;
  auto* roulette_cmd = app.add_subcommand("roulette", "Flat roulette betting with a ratio trace");
  roulette_cmd->add_option("--coups", ro.coups, "Coups to play")->capture_default_str();
  roulette_cmd->add_option("--mode", ro.mode, "enprison | partager | none")->capture_default_str();
  roulette_cmd->add_option("--bets", ro.bets, "Bets per coup, e.g. red=2,17=1,1+2+3=3")->capture_default_str();
  roulette_cmd->add_option("--seed", ro.seed, "Master seed")->capture_default_str();
  roulette_cmd->add_option("--burn-in", ro.burn_in, "Coups before the bracket check (default coups/10)");
  roulette_cmd->add_option("--sigmas", ro.sigmas, "Bracket tolerance in standard errors")->capture_default_str();
  roulette_cmd->add_option("--out", ro.out, "Output directory for JSON and trace CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*leigh_cmd) return cmd_leigh(lo);
    if (*scenario_cmd) return cmd_scenario(so);
    if (*tcp_cmd) return cmd_tcp(to);
    if (*craps_cmd) return cmd_craps(co);
    if (*roulette_cmd) return cmd_roulette(ro);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const scripts::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
