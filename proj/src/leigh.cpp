#include "casino/leigh.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <omp.h>

namespace casino::leigh {

namespace {

constexpr std::uint64_t kBlockSize = 256;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

void SessionConfig::validate() const {
  if (days < 1) throw std::invalid_argument("days must be >= 1");
  if (coups_per_day < 1) throw std::invalid_argument("coups per day must be >= 1");
  lab.validate();
}

void SessionStats::record(const ProgressionOutcome& p) {
  progression_coups += p.coups;
  switch (p.kind) {
    case ProgressionKind::winning:
      ++n_winning;
      sum_winning += p.amount_act;
      sum_winning_sys += p.amount_sys;
      break;
    case ProgressionKind::losing:
      ++n_losing;
      sum_losing -= p.amount_act;
      sum_losing_sys -= p.amount_sys;
      break;
    case ProgressionKind::incomplete:
      ++n_incomplete;
      sum_incomplete += p.amount_act;
      sum_incomplete_sys += p.amount_sys;
      break;
  }
}

SessionStats run_session(Stream& stream, const SessionConfig& config) {
  roulette::RandomWheel wheel(stream);
  return run_session(wheel, config);
}

void AggregateStats::add(const SessionStats& s) {
  ++replications;
  n_winning.update(s.n_winning);
  n_losing.update(s.n_losing);
  n_incomplete.update(s.n_incomplete);
  sum_winning.update(s.sum_winning);
  sum_losing.update(s.sum_losing);
  sum_incomplete.update(s.sum_incomplete);
  total_bet.update(s.total_bet);
  total_profit.update(s.total_profit);
  sum_winning_sys.update(s.sum_winning_sys);
  sum_losing_sys.update(s.sum_losing_sys);
  sum_incomplete_sys.update(s.sum_incomplete_sys);
  spins.update(s.spins);
  if (s.total_bet > 0) {
    ++ratio_histogram[floor_div(100 * s.total_profit, s.total_bet)];
    ratio.update(100.0 * static_cast<double>(s.total_profit) / static_cast<double>(s.total_bet));
  }
  ++counts_of_n[s.n_winning];
  if (s.total_profit > 0) ++n_profitable;
  max_n_winning = std::max(max_n_winning, s.n_winning);
  max_sum_winning = std::max(max_sum_winning, s.sum_winning);
}

double AggregateStats::p_profitable() const {
  return replications == 0 ? 0.0 : static_cast<double>(n_profitable) / static_cast<double>(replications);
}

Histogram AggregateStats::histogram() const {
  Histogram h(1.0, 0.0);
  for (auto [bin, count] : ratio_histogram) h.add_to_bin(bin, count);
  return h;
}

AggregateStats merge(const AggregateStats& a, const AggregateStats& b) {
  AggregateStats out;
  out.replications = a.replications + b.replications;
  out.n_winning = merge(a.n_winning, b.n_winning);
  out.n_losing = merge(a.n_losing, b.n_losing);
  out.n_incomplete = merge(a.n_incomplete, b.n_incomplete);
  out.sum_winning = merge(a.sum_winning, b.sum_winning);
  out.sum_losing = merge(a.sum_losing, b.sum_losing);
  out.sum_incomplete = merge(a.sum_incomplete, b.sum_incomplete);
  out.total_bet = merge(a.total_bet, b.total_bet);
  out.total_profit = merge(a.total_profit, b.total_profit);
  out.sum_winning_sys = merge(a.sum_winning_sys, b.sum_winning_sys);
  out.sum_losing_sys = merge(a.sum_losing_sys, b.sum_losing_sys);
  out.sum_incomplete_sys = merge(a.sum_incomplete_sys, b.sum_incomplete_sys);
  out.spins = merge(a.spins, b.spins);
  out.ratio_histogram = a.ratio_histogram;
  for (auto [bin, count] : b.ratio_histogram) out.ratio_histogram[bin] += count;
  out.ratio = moments_merge(a.ratio, b.ratio);
  out.counts_of_n = a.counts_of_n;
  for (auto [n, count] : b.counts_of_n) out.counts_of_n[n] += count;
  out.n_profitable = a.n_profitable + b.n_profitable;
  out.max_n_winning = std::max(a.max_n_winning, b.max_n_winning);
  out.max_sum_winning = std::max(a.max_sum_winning, b.max_sum_winning);
  return out;
}

bool same_results(const AggregateStats& a, const AggregateStats& b) {
  return a.replications == b.replications && a.n_winning == b.n_winning && a.n_losing == b.n_losing &&
         a.n_incomplete == b.n_incomplete && a.sum_winning == b.sum_winning &&
         a.sum_losing == b.sum_losing && a.sum_incomplete == b.sum_incomplete &&
         a.total_bet == b.total_bet && a.total_profit == b.total_profit &&
         a.sum_winning_sys == b.sum_winning_sys && a.sum_losing_sys == b.sum_losing_sys &&
         a.sum_incomplete_sys == b.sum_incomplete_sys && a.spins == b.spins &&
         a.ratio_histogram == b.ratio_histogram && a.counts_of_n == b.counts_of_n &&
         a.n_profitable == b.n_profitable && a.max_n_winning == b.max_n_winning &&
         a.max_sum_winning == b.max_sum_winning;
}

AggregateStats run_experiment(std::uint64_t master_seed, std::uint64_t replications,
                              const SessionConfig& config, int workers) {
  if (replications < 1) throw std::invalid_argument("replications must be >= 1");
  config.validate();
  const std::uint64_t n_blocks = (replications + kBlockSize - 1) / kBlockSize;
  std::vector<AggregateStats> blocks(n_blocks);
  const int threads = workers > 0 ? workers : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(n_blocks); ++b) {
    const std::uint64_t first = static_cast<std::uint64_t>(b) * kBlockSize;
    const std::uint64_t last = std::min(first + kBlockSize, replications);
    AggregateStats local;
    for (std::uint64_t r = first; r < last; ++r) {
      Stream stream = derive_stream(master_seed, r);
      local.add(run_session(stream, config));
    }
    blocks[static_cast<std::size_t>(b)] = std::move(local);
  }

  AggregateStats out;
  for (const auto& block : blocks) out = merge(out, block);
  return out;
}

AggregateStats run_experiment_serial(std::uint64_t master_seed, std::uint64_t replications,
                                     const SessionConfig& config) {
  if (replications < 1) throw std::invalid_argument("replications must be >= 1");
  config.validate();
  AggregateStats out;
  for (std::uint64_t r = 0; r < replications; ++r) {
    Stream stream = derive_stream(master_seed, r);
    out.add(run_session(stream, config));
  }
  return out;
}

double consistency_ratio(double mean_win, double mean_loss, double mean_incomplete, double mean_bet) {
  if (mean_bet == 0) throw std::domain_error("consistency_ratio: zero total bet");
  return (mean_win - mean_loss + mean_incomplete) / mean_bet;
}

double consistency_ratio(const AggregateStats& agg) {
  if (agg.replications < 1) throw std::domain_error("consistency_ratio: no replications");
  if (agg.total_bet.sum == 0) throw std::domain_error("consistency_ratio: zero total bet");
  Int128 num = agg.sum_winning.sum - agg.sum_losing.sum + agg.sum_incomplete.sum;
  return static_cast<double>(num) / static_cast<double>(agg.total_bet.sum);
}

PoissonReport poisson_report(const AggregateStats& agg, double mu1) {
  if (agg.replications < 1) throw std::domain_error("poisson_report: no replications");
  PoissonReport rep;
  rep.mu0 = agg.n_winning.mean();
  rep.mu1 = mu1;
  rep.max_n = agg.counts_of_n.empty() ? 0 : agg.counts_of_n.rbegin()->first;
  rep.exceeds_conjectured_max = rep.max_n > kConjecturedMaxWinning;
  rep.log10_tail27 = poisson_log_ccdf(mu1, 27) / std::log(10.0);

  const std::uint64_t reps = agg.replications;
  std::uint64_t at_least = reps;
  for (std::int64_t n = 0; n <= rep.max_n; ++n) {
    PoissonRow row;
    row.n = n;
    auto it = agg.counts_of_n.find(n);
    row.count = it == agg.counts_of_n.end() ? 0 : it->second;
    row.p_hat = static_cast<double>(row.count) / static_cast<double>(reps);
    row.se = stderr_of_proportion(row.count, reps);
    row.poisson_mu0 = rep.mu0 > 0 ? poisson_pmf(rep.mu0, n) : (n == 0 ? 1.0 : 0.0);
    row.ccdf_hat = static_cast<double>(at_least) / static_cast<double>(reps);
    row.ccdf_se = stderr_of_proportion(at_least, reps);
    row.poisson_mu1_ccdf = poisson_ccdf(mu1, n);
    row.bound_holds = row.ccdf_hat <= row.poisson_mu1_ccdf;
    row.bound_margin_se = row.ccdf_se > 0 ? (row.poisson_mu1_ccdf - row.ccdf_hat) / row.ccdf_se
                                          : std::numeric_limits<double>::infinity();
    if (!row.bound_holds) ++rep.bound_violations;
    if (row.bound_margin_se < 2.0) ++rep.rows_under_two_se;
    rep.rows.push_back(row);
    at_least -= row.count;
  }
  return rep;
}

}  // namespace casino::leigh
