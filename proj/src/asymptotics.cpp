#include "degseq/asymptotics.hpp"

#include <cmath>

#include "degseq/errors.hpp"
#include "degseq/logspace.hpp"

namespace degseq {

namespace {

// sum (x_i - lambda*n)^2 computed as a rational from integer data.
double spread(const std::vector<int>& x, const Rational& lambda_scaled) {
  // lambda_scaled = lambda * (vector capacity direction); caller passes
  // the exact mean value each entry is compared against.
  double acc = 0;
  const double target = to_double(lambda_scaled);
  for (int v : x) {
    const double d = static_cast<double>(v) - target;
    acc += d * d;
  }
  return acc;
}

}  // namespace

EnumEstimate estimate_logG(const DegreeSequence& ds) {
  const Shape& shape = ds.shape();
  if (shape.loops_forbidden)
    throw DomainError("estimate_logG is for loop-allowed shapes");
  if (!ds.joint_valid())
    throw DomainError("estimate_logG: degree sums disagree");
  const long long k = ds.edge_count();
  const long long cells = shape.cell_count();
  if (k == 0 || k == cells)
    throw DomainError("degenerate density: the count is exactly 1");

  const Rational lambda = density_lambda(ds);
  const double lam = to_double(lambda);
  const double mn = static_cast<double>(cells);
  const double denom = lam * (1.0 - lam) * mn;

  CompensatedSum log_binoms;
  for (int v : ds.s()) log_binoms.add(lchoose(shape.n, v));
  for (int v : ds.t()) log_binoms.add(lchoose(shape.m, v));
  const double log_main = log_binoms.value() - lchoose(cells, k);

  const double a_term =
      spread(ds.s(), lambda * shape.n) / denom;
  const double b_term =
      spread(ds.t(), lambda * shape.m) / denom;
  const double log_estimate =
      log_main - 0.5 * (1.0 - a_term) * (1.0 - b_term);
  return EnumEstimate{log_estimate, log_main, a_term, b_term, 0.0};
}

EnumEstimate estimate_logdigG(const DegreeSequence& ds) {
  const Shape& shape = ds.shape();
  if (!shape.loops_forbidden)
    throw DomainError("estimate_logdigG requires a loop-forbidden shape");
  if (!ds.joint_valid())
    throw DomainError("estimate_logdigG: degree sums disagree");
  const int n = shape.n;
  const long long k = ds.edge_count();
  const long long cells = shape.cell_count();  // n^2 - n
  if (k == 0) throw DomainError("degenerate density: the count is exactly 1");
  if (k > cells)
    throw DomainError("density infeasible: lambda n^2 exceeds n^2 - n");

  // lambda is still k/n^2; the binomial main term uses the n^2-n cells.
  const Rational lambda(static_cast<long>(k),
                        static_cast<long>(n) * n);
  const double lam = to_double(lambda);
  const double denom = lam * (1.0 - lam) * static_cast<double>(n) * n;

  CompensatedSum log_binoms;
  for (int v : ds.s()) log_binoms.add(lchoose(n - 1, v));
  for (int v : ds.t()) log_binoms.add(lchoose(n - 1, v));
  const double log_main = log_binoms.value() - lchoose(cells, k);

  const double target = lam * n;
  double a_acc = 0, b_acc = 0, cross_acc = 0;
  for (int i = 0; i < n; ++i) {
    const double ds_i = static_cast<double>(ds.s()[i]) - target;
    const double dt_i = static_cast<double>(ds.t()[i]) - target;
    a_acc += ds_i * ds_i;
    b_acc += dt_i * dt_i;
    cross_acc += ds_i * dt_i;
  }
  const double a_term = a_acc / denom;
  const double b_term = b_acc / denom;
  const double cross_term = cross_acc / denom;
  const double log_estimate =
      log_main - 0.5 * (1.0 - a_term) * (1.0 - b_term) - cross_term;
  return EnumEstimate{log_estimate, log_main, a_term, b_term, cross_term};
}

double bpdenom_log_pmf(const Rational& p, const DegreeSequence& ds) {
  if (sgn(p) <= 0 || p >= 1) throw DomainError("p must lie in (0,1)");
  if (!ds.joint_valid()) return kNegInf;
  const Shape& shape = ds.shape();
  const long long cells = shape.cell_count();
  const long long k = ds.edge_count();
  const double pd = to_double(p);
  const double qd = 1.0 - pd;

  CompensatedSum log_binoms;
  for (int v : ds.s()) log_binoms.add(lchoose(shape.row_capacity(), v));
  for (int v : ds.t()) log_binoms.add(lchoose(shape.col_capacity(), v));

  return std::log(2.0) + 2.0 * static_cast<double>(k) * std::log(pd) +
         2.0 * static_cast<double>(cells - k) * std::log(qd) +
         0.5 * std::log(M_PI * pd * qd * static_cast<double>(cells)) +
         log_binoms.value();
}

}  // namespace degseq
