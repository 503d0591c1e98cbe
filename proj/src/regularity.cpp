#include "degseq/regularity.hpp"

#include <cmath>
#include <limits>

#include "degseq/errors.hpp"

namespace degseq {

RegularityCheck is_eps_regular(std::span<const int> x, double eps,
                               double c_reg) {
  if (x.empty()) throw DomainError("eps-regularity of an empty vector");
  if (!(eps > 0) || !(c_reg > 0))
    throw DomainError("eps and c_reg must be positive");
  const long long len = static_cast<long long>(x.size());
  long long total = 0;
  for (int v : x) total += v;
  // Deviations scaled by N keep the comparison integral:
  // |x_i - total/N| <= bound  <=>  |N*x_i - total| <= N*bound.
  long long worst_scaled = 0;
  for (int v : x) {
    long long d = static_cast<long long>(v) * len - total;
    worst_scaled = std::max(worst_scaled, d < 0 ? -d : d);
  }
  const double bound =
      c_reg * std::pow(static_cast<double>(len), 0.5 + eps);
  const double max_deviation =
      static_cast<double>(worst_scaled) / static_cast<double>(len);
  return RegularityCheck{max_deviation <= bound, bound - max_deviation};
}

bool pair_eps_regular(const DegreeSequence& ds, double eps, double c_reg) {
  if (!ds.joint_valid()) return false;
  return is_eps_regular(ds.s(), eps, c_reg).regular &&
         is_eps_regular(ds.t(), eps, c_reg).regular;
}

AcceptabilityResult acceptability(int m, int n, double x, double a) {
  if (m < 2 || n < 2) throw DomainError("acceptability needs m, n >= 2");
  if (!(x > 0.0 && x < 1.0)) throw DomainError("x must lie in (0,1)");
  const double md = m, nd = n;
  const double lhs = (1.0 - 2.0 * x) * (1.0 - 2.0 * x) /
                     (4.0 * x * (1.0 - x)) *
                     (1.0 + 5.0 * md / (6.0 * nd) + 5.0 * nd / (6.0 * md));
  const double rhs = a * std::log(nd);
  return AcceptabilityResult{lhs, rhs, lhs < rhs};
}

RegularityReport degree_stats(const DegreeSequence& ds,
                              const AcceptabilityParams& params) {
  if (!ds.joint_valid())
    throw DomainError("degree_stats: degree sums disagree");
  const Shape& shape = ds.shape();
  const int m = shape.m, n = shape.n;
  const long long k = ds.edge_count();

  RegularityReport report;
  report.lambda = density_lambda(ds);

  // R_S = (m sum s_i^2 - K^2)/m and R_T = (n sum t_j^2 - K^2)/n: integer
  // numerators, one real division at the end.
  long long sum_s_sq = 0, sum_t_sq = 0, sum_st = 0;
  for (int v : ds.s()) sum_s_sq += static_cast<long long>(v) * v;
  for (int v : ds.t()) sum_t_sq += static_cast<long long>(v) * v;
  report.r_s = static_cast<double>(m * sum_s_sq - k * k) / m;
  report.r_t = static_cast<double>(n * sum_t_sq - k * k) / n;
  if (m == n) {
    for (int i = 0; i < n; ++i)
      sum_st += static_cast<long long>(ds.s()[i]) * ds.t()[i];
    report.cross = static_cast<double>(n * sum_st - k * k) / n;
  }

  report.s_regular = is_eps_regular(ds.s(), params.eps, params.c_reg);
  report.t_regular = is_eps_regular(ds.t(), params.eps, params.c_reg);
  report.pair_regular =
      report.s_regular.regular && report.t_regular.regular;

  const double lambda = to_double(report.lambda);
  if (lambda > 0.0 && lambda < 1.0 && m >= 2 && n >= 2) {
    report.acceptability_lhs = acceptability(m, n, lambda, params.a).lhs;
  } else {
    report.acceptability_lhs = std::numeric_limits<double>::infinity();
  }
  return report;
}

}  // namespace degseq
