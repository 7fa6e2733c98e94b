#pragma once

#include <cstdint>
#include <map>

namespace casino {

__extension__ typedef __int128 Int128;

/// Welford mean/variance with Chan's pairwise merge.
struct StreamingMoments {
  std::uint64_t n = 0;
  double mean = 0;
  double m2 = 0;

  void update(double x);
  /// Sample variance; 0 for n < 2.
  double variance() const;
  /// Standard error of the mean.
  double stderr_mean() const;
};

StreamingMoments moments_merge(const StreamingMoments& a, const StreamingMoments& b);

/// Exact first and second moments of integer observations. Merging is
/// integer addition, so the result does not depend on merge order.
struct IntegerMoments {
  std::uint64_t n = 0;
  Int128 sum = 0;
  Int128 sum_sq = 0;

  void update(std::int64_t x) {
    ++n;
    sum += x;
    sum_sq += static_cast<Int128>(x) * x;
  }
  double mean() const;
  double variance() const;
  double stderr_mean() const;

  friend bool operator==(const IntegerMoments&, const IntegerMoments&) = default;
};

IntegerMoments merge(const IntegerMoments& a, const IntegerMoments& b);

/// Fixed-width histogram over the reals; bin k covers [origin + k*w, origin + (k+1)*w).
class Histogram {
 public:
  explicit Histogram(double bin_width, double origin = 0.0);

  void insert(double x) { add_to_bin(bin_of(x), 1); }
  void add_to_bin(std::int64_t bin, std::uint64_t count);
  std::int64_t bin_of(double x) const;

  double bin_width() const { return bin_width_; }
  double origin() const { return origin_; }
  double bin_low(std::int64_t bin) const { return origin_ + bin * bin_width_; }
  double bin_high(std::int64_t bin) const { return origin_ + (bin + 1) * bin_width_; }
  const std::map<std::int64_t, std::uint64_t>& counts() const { return counts_; }
  std::uint64_t total() const { return total_; }

  void merge(const Histogram& other);

 private:
  double bin_width_;
  double origin_;
  std::map<std::int64_t, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

double poisson_log_pmf(double mu, std::int64_t n);
double poisson_pmf(double mu, std::int64_t n);
/// Natural log of P(N >= n) for N ~ Poisson(mu), summed upward in log space
/// until the remaining terms fall below 1e-30 of the running total.
double poisson_log_ccdf(double mu, std::int64_t n);
double poisson_ccdf(double mu, std::int64_t n);

/// sqrt(p(1-p)/n) with p = count/n.
double stderr_of_proportion(std::uint64_t count, std::uint64_t n);

}  // namespace casino
