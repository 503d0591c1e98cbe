#include "degseq/stats.hpp"

#include <algorithm>
#include <cmath>

#include "degseq/errors.hpp"

namespace degseq {

double mean(const std::vector<double>& xs) {
  if (xs.empty()) throw DomainError("mean of empty sample");
  double acc = 0;
  for (double x : xs) acc += x;
  return acc / static_cast<double>(xs.size());
}

double sample_sd(const std::vector<double>& xs) {
  if (xs.size() < 2) throw DomainError("sample sd needs two points");
  const double mu = mean(xs);
  double acc = 0;
  for (double x : xs) acc += (x - mu) * (x - mu);
  return std::sqrt(acc / static_cast<double>(xs.size() - 1));
}

double median(std::vector<double> xs) {
  if (xs.empty()) throw DomainError("median of empty sample");
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  if (xs.size() % 2 == 1) return xs[mid];
  return 0.5 * (xs[mid - 1] + xs[mid]);
}

double quantile(std::vector<double> xs, double q) {
  if (xs.empty()) throw DomainError("quantile of empty sample");
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("quantile level outside [0,1]");
  std::sort(xs.begin(), xs.end());
  const double pos = q * static_cast<double>(xs.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const double frac = pos - static_cast<double>(lo);
  if (lo + 1 >= xs.size()) return xs.back();
  return xs[lo] * (1.0 - frac) + xs[lo + 1] * frac;
}

double normal_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / M_SQRT2); }

namespace {

// Regularized incomplete gamma by series (x < a+1) or continued fraction.
double gamma_series_p(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_cf_q(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gammq(double a, double x) {
  if (!(a > 0) || x < 0) throw DomainError("gammq arguments out of range");
  if (x == 0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_series_p(a, x);
  return gamma_cf_q(a, x);
}

ChiSquareResult chi_square_gof(const std::vector<double>& expected,
                               const std::vector<long long>& observed,
                               double min_expected) {
  if (expected.size() != observed.size())
    throw DomainError("chi-square: size mismatch");
  double pooled_expected = 0;
  long long pooled_observed = 0;
  int pooled = 0;
  double statistic = 0;
  int bins = 0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (expected[i] < min_expected) {
      pooled_expected += expected[i];
      pooled_observed += observed[i];
      ++pooled;
      continue;
    }
    const double diff = static_cast<double>(observed[i]) - expected[i];
    statistic += diff * diff / expected[i];
    ++bins;
  }
  if (pooled_expected > 0) {
    const double diff =
        static_cast<double>(pooled_observed) - pooled_expected;
    statistic += diff * diff / pooled_expected;
    ++bins;
  }
  ChiSquareResult result;
  result.statistic = statistic;
  result.df = bins > 1 ? bins - 1 : 1;
  result.p_value = gammq(static_cast<double>(result.df) / 2.0,
                         statistic / 2.0);
  result.bins = bins;
  result.pooled = pooled;
  return result;
}

}  // namespace degseq
