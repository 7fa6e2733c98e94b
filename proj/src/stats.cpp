#include "casino/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace casino {

void StreamingMoments::update(double x) {
  ++n;
  double delta = x - mean;
  mean += delta / static_cast<double>(n);
  m2 += delta * (x - mean);
}

double StreamingMoments::variance() const {
  return n < 2 ? 0.0 : m2 / static_cast<double>(n - 1);
}

double StreamingMoments::stderr_mean() const {
  return n < 2 ? 0.0 : std::sqrt(variance() / static_cast<double>(n));
}

StreamingMoments moments_merge(const StreamingMoments& a, const StreamingMoments& b) {
  if (a.n == 0) return b;
  if (b.n == 0) return a;
  StreamingMoments out;
  out.n = a.n + b.n;
  double na = static_cast<double>(a.n);
  double nb = static_cast<double>(b.n);
  double delta = b.mean - a.mean;
  out.mean = a.mean + delta * nb / (na + nb);
  out.m2 = a.m2 + b.m2 + delta * delta * na * nb / (na + nb);
  return out;
}

double IntegerMoments::mean() const {
  return n == 0 ? 0.0 : static_cast<double>(sum) / static_cast<double>(n);
}

double IntegerMoments::variance() const {
  if (n < 2) return 0.0;
  // n*sum_sq - sum^2 is exact in 128 bits for the magnitudes we accumulate.
  Int128 nn = static_cast<Int128>(n);
  Int128 centered = nn * sum_sq - sum * sum;
  return static_cast<double>(centered) / (static_cast<double>(n) * static_cast<double>(n - 1));
}

double IntegerMoments::stderr_mean() const {
  return n < 2 ? 0.0 : std::sqrt(variance() / static_cast<double>(n));
}

IntegerMoments merge(const IntegerMoments& a, const IntegerMoments& b) {
  return {a.n + b.n, a.sum + b.sum, a.sum_sq + b.sum_sq};
}

Histogram::Histogram(double bin_width, double origin) : bin_width_(bin_width), origin_(origin) {
  if (!(bin_width > 0)) throw std::domain_error("Histogram: bin width must be positive");
}

void Histogram::add_to_bin(std::int64_t bin, std::uint64_t count) {
  if (count == 0) return;
  counts_[bin] += count;
  total_ += count;
}

std::int64_t Histogram::bin_of(double x) const {
  return static_cast<std::int64_t>(std::floor((x - origin_) / bin_width_));
}

void Histogram::merge(const Histogram& other) {
  if (other.bin_width_ != bin_width_ || other.origin_ != origin_) {
    throw std::invalid_argument("Histogram::merge: incompatible binning");
  }
  for (auto [bin, count] : other.counts_) add_to_bin(bin, count);
}

double poisson_log_pmf(double mu, std::int64_t n) {
  if (!(mu > 0)) throw std::domain_error("poisson: mu must be positive");
  if (n < 0) return -std::numeric_limits<double>::infinity();
  double k = static_cast<double>(n);
  return -mu + k * std::log(mu) - std::lgamma(k + 1.0);
}

double poisson_pmf(double mu, std::int64_t n) { return std::exp(poisson_log_pmf(mu, n)); }

double poisson_log_ccdf(double mu, std::int64_t n) {
  if (!(mu > 0)) throw std::domain_error("poisson: mu must be positive");
  if (n <= 0) return 0.0;
  static const double kLogCutoff = std::log(1e-30);
  const double log_mu = std::log(mu);
  double log_term = poisson_log_pmf(mu, n);
  double log_sum = log_term;
  // Below the mode the terms still grow, so the stopping test only applies past it.
  for (std::int64_t k = n + 1;; ++k) {
    log_term += log_mu - std::log(static_cast<double>(k));
    double hi = std::max(log_sum, log_term);
    log_sum = hi + std::log1p(std::exp(std::min(log_sum, log_term) - hi));
    if (static_cast<double>(k) > mu && log_term - log_sum < kLogCutoff) break;
  }
  return log_sum > 0.0 ? 0.0 : log_sum;
}

double poisson_ccdf(double mu, std::int64_t n) {
  if (n <= 0) {
    if (!(mu > 0)) throw std::domain_error("poisson: mu must be positive");
    return 1.0;
  }
  return std::exp(poisson_log_ccdf(mu, n));
}

double stderr_of_proportion(std::uint64_t count, std::uint64_t n) {
  if (n == 0) throw std::domain_error("stderr_of_proportion: n must be positive");
  if (count > n) throw std::domain_error("stderr_of_proportion: count exceeds n");
  double p = static_cast<double>(count) / static_cast<double>(n);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

}  // namespace casino
