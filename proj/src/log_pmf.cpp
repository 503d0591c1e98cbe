#include "degseq/log_pmf.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "degseq/asymptotics.hpp"
#include "degseq/counting.hpp"
#include "degseq/errors.hpp"
#include "degseq/exact_pmf.hpp"
#include "degseq/kernel.hpp"
#include "degseq/logspace.hpp"
#include "degseq/regularity.hpp"

namespace degseq {

CountProvider CountProvider::poison() {
  CountProvider provider;
  provider.poisoned = true;
  return provider;
}

double CountProvider::log_count(const DegreeSequence& ds) const {
  if (poisoned)
    throw std::logic_error("poisoned count provider was consulted");
  if (!ds.joint_valid()) return kNegInf;
  if (mode == Mode::exact) {
    CountResult result = count_exact(ds);
    return log_to_double(result.value);
  }
  const Rational lambda = density_lambda(ds);
  if (sgn(lambda) == 0 || lambda == 1) return 0.0;  // the unique matrix
  if (warn && !pair_eps_regular(ds, eps, c_reg)) {
    *warn << "warning: sequence is not eps-regular; asymptotic count "
             "estimate may be inaccurate\n";
  }
  EnumEstimate estimate = ds.shape().loops_forbidden ? estimate_logdigG(ds)
                                                     : estimate_logG(ds);
  return estimate.log_estimate;
}

namespace {

double log_pq(double p, long long ones, long long zeros) {
  return static_cast<double>(ones) * std::log(p) +
         static_cast<double>(zeros) * std::log1p(-p);
}

// One compensated pass over the degree binomials.
double sum_lchoose(int cap, const std::vector<int>& degrees) {
  CompensatedSum acc;
  for (int d : degrees) acc.add(lchoose(cap, d));
  return acc.value();
}

}  // namespace

Probability log_pmf(const ModelSpec& model, const DegreeSequence& ds,
                    const CountProvider& counts) {
  const Shape& shape = model.shape();
  if (!(ds.shape() == shape))
    throw DomainError("degree sequence shape differs from model shape");
  const long long cells = shape.cell_count();
  const long long sum_s = ds.total_s();
  const long long sum_t = ds.total_t();

  switch (model.family()) {
    case Family::Gp: {
      if (sum_s != sum_t) return Probability::from_log(kNegInf);
      double lc = counts.log_count(ds);
      if (lc == kNegInf) return Probability::from_log(kNegInf);
      return Probability::from_log(
          log_pq(model.p_double(), sum_s, cells - sum_s) + lc);
    }
    case Family::Gk: {
      if (sum_s != sum_t || sum_s != model.k())
        return Probability::from_log(kNegInf);
      double lc = counts.log_count(ds);
      if (lc == kNegInf) return Probability::from_log(kNegInf);
      return Probability::from_log(lc - lchoose(cells, model.k()));
    }
    case Family::Gt: {
      if (ds.t() != model.t() || sum_s != sum_t)
        return Probability::from_log(kNegInf);
      double lc = counts.log_count(ds);
      if (lc == kNegInf) return Probability::from_log(kNegInf);
      return Probability::from_log(
          lc - sum_lchoose(shape.col_capacity(), model.t()));
    }
    case Family::Ip: {
      double logmass = sum_lchoose(shape.row_capacity(), ds.s()) +
                       sum_lchoose(shape.col_capacity(), ds.t()) +
                       log_pq(model.p_double(), sum_s + sum_t,
                              2 * cells - sum_s - sum_t);
      return Probability::from_log(logmass);
    }
    case Family::Bp: {
      if (sum_s != sum_t) return Probability::from_log(kNegInf);
      double log_ip = sum_lchoose(shape.row_capacity(), ds.s()) +
                      sum_lchoose(shape.col_capacity(), ds.t()) +
                      log_pq(model.p_double(), sum_s + sum_t,
                             2 * cells - sum_s - sum_t);
      return Probability::from_log(
          log_ip - log_sum_match(cells, model.p_double()));
    }
    case Family::Bk: {
      if (sum_s != sum_t || sum_s != model.k())
        return Probability::from_log(kNegInf);
      return Probability::from_log(
          sum_lchoose(shape.row_capacity(), ds.s()) +
          sum_lchoose(shape.col_capacity(), ds.t()) -
          2.0 * lchoose(cells, model.k()));
    }
    case Family::Bt: {
      // B_t is the S-marginal of B_k at k = sum(t); same engine.
      if (ds.t() != model.t() || sum_s != sum_t)
        return Probability::from_log(kNegInf);
      return Probability::from_log(
          sum_lchoose(shape.row_capacity(), ds.s()) -
          lchoose(cells, model.fixed_total()));
    }
    case Family::Vp:
      return vp_log_pmf(model.p(), ds, counts);
  }
  throw DomainError("unhandled model family");
}

}  // namespace degseq
