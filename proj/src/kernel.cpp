#include "degseq/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "degseq/errors.hpp"
#include "degseq/exact_pmf.hpp"
#include "degseq/logspace.hpp"

namespace degseq {

KernelParams::KernelParams(Rational p_, Shape shape_)
    : p(std::move(p_)), shape(shape_) {
  if (sgn(p) <= 0 || p >= 1) throw DomainError("p must lie in (0,1)");
}

double KernelParams::p_double() const { return to_double(p); }

double KernelParams::sigma() const {
  const double pd = p_double();
  const double mn = static_cast<double>(shape.m) * shape.n;
  return std::sqrt(pd * (1.0 - pd) / (2.0 * mn));
}

double KernelParams::density(double p_prime) const {
  return std::exp(log_density(p_prime));
}

double KernelParams::log_density(double p_prime) const {
  const double pd = p_double();
  const double mn = static_cast<double>(shape.m) * shape.n;
  const double diff = p_prime - pd;
  return 0.5 * std::log(mn / (M_PI * pd * (1.0 - pd))) -
         (mn / (pd * (1.0 - pd))) * diff * diff;
}

double KernelParams::normalizer() const {
  // V(p) = Phi((1-p)/sigma) - Phi(-p/sigma), both tails via erfc.
  const double pd = p_double();
  const double s = sigma();
  const double upper_tail = 0.5 * std::erfc((1.0 - pd) / (s * M_SQRT2));
  const double lower_tail = 0.5 * std::erfc(pd / (s * M_SQRT2));
  return 1.0 - upper_tail - lower_tail;
}

std::pair<std::function<double(double)>, double> kernel_and_normalizer(
    const KernelParams& kp) {
  return {[kp](double p_prime) { return kp.density(p_prime); },
          kp.normalizer()};
}

namespace {

// Gauss-Kronrod 15(7) abscissae and weights on [-1,1].  The odd-index
// nodes (and the centre) are the embedded Gauss-7 nodes.
constexpr double kGkNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kK15Weights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kG7Weights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
  double a, b;
  double value;  // K15 estimate
  double error;  // |K15 - G7|
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a,
                     double b) {
  const double half = 0.5 * (b - a);
  const double center = 0.5 * (a + b);
  double k15 = 0, g7 = 0;
  for (int i = 0; i < 8; ++i) {
    const double offset = half * kGkNodes[i];
    const double fsum =
        (i == 7) ? f(center) : f(center - offset) + f(center + offset);
    k15 += kK15Weights[i] * fsum;
    if (i % 2 == 1) g7 += kG7Weights[i / 2] * fsum;
  }
  k15 *= half;
  g7 *= half;
  return Panel{a, b, k15, std::abs(k15 - g7)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double rel_tol,
                                    long long max_evaluations) {
  QuadratureResult result;
  if (!(b > a)) return result;
  std::priority_queue<Panel> panels;
  double total_value = 0, total_error = 0;
  long long evals = 0;
  auto add_panel = [&](double lo, double hi) {
    Panel panel = evaluate_panel(f, lo, hi);
    evals += 15;
    total_value += panel.value;
    total_error += panel.error;
    panels.push(panel);
  };
  add_panel(a, b);
  while (total_error > rel_tol * std::abs(total_value) &&
         total_error > 1e-300 && evals < max_evaluations) {
    Panel worst = panels.top();
    panels.pop();
    if (worst.error == 0) {
      panels.push(worst);
      break;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval exhausted at double precision.
      total_error -= worst.error;
      worst.error = 0;
      panels.push(worst);
      continue;
    }
    total_value -= worst.value;
    total_error -= worst.error;
    add_panel(worst.a, mid);
    add_panel(mid, worst.b);
  }
  result.value = total_value;
  result.abs_error = total_error;
  result.evaluations = evals;
  result.converged = total_error <= rel_tol * std::abs(total_value) ||
                     total_error <= 1e-300;
  return result;
}

namespace {

// log of the V_p integrand at p', excluding the V(p)^{-1} factor:
// log K_p(p') + log Prob_{B_{p'}}(s,t).  Count-free by construction.
class VpIntegrand {
 public:
  VpIntegrand(const KernelParams& kernel, const DegreeSequence& ds)
      : kernel_(kernel),
        cells_(ds.shape().cell_count()),
        exponent_ones_(ds.total_s() + ds.total_t()),
        exponent_zeros_(2 * cells_ - exponent_ones_) {
    CompensatedSum acc;
    for (int v : ds.s()) acc.add(lchoose(ds.shape().row_capacity(), v));
    for (int v : ds.t()) acc.add(lchoose(ds.shape().col_capacity(), v));
    log_binom_products_ = acc.value();
  }

  double log_value(double p_prime) const {
    const double log_ip = log_binom_products_ +
        static_cast<double>(exponent_ones_) * std::log(p_prime) +
        static_cast<double>(exponent_zeros_) * std::log1p(-p_prime);
    return kernel_.log_density(p_prime) + log_ip -
           log_sum_match(cells_, p_prime);
  }

 private:
  const KernelParams& kernel_;
  long long cells_;
  long long exponent_ones_;
  long long exponent_zeros_;
  double log_binom_products_;
};

}  // namespace

Probability vp_log_pmf(const Rational& p, const DegreeSequence& ds,
                       const CountProvider& /*counts: never consulted*/) {
  if (!ds.joint_valid()) return Probability::from_log(kNegInf);
  const KernelParams kernel(p, ds.shape());
  const VpIntegrand integrand(kernel, ds);
  const double pd = to_double(p);
  const double sigma = kernel.sigma();
  constexpr double kRelTol = 1e-9;

  // Start with the p +- 10 sigma window; widen whenever the sampled tails
  // are not provably negligible (far-out degree sequences can pull the
  // integrand's peak away from p).
  double lo = std::max(0.0, pd - 10.0 * sigma);
  double hi = std::min(1.0, pd + 10.0 * sigma);
  double peak = kNegInf;

  for (int rounds = 0;; ++rounds) {
    constexpr int kScan = 128;
    for (int i = 0; i <= kScan; ++i) {
      const double x = lo + (hi - lo) * i / kScan;
      if (x <= 0.0 || x >= 1.0) continue;
      peak = std::max(peak, integrand.log_value(x));
    }
    if (peak == kNegInf) return Probability::from_log(kNegInf);

    double seen_peak = peak;
    auto scaled = [&](double x) {
      if (x <= 0.0 || x >= 1.0) return 0.0;
      const double lv = integrand.log_value(x);
      seen_peak = std::max(seen_peak, lv);
      return std::exp(std::min(lv - peak, 700.0));
    };
    QuadratureResult inner = integrate_adaptive(scaled, lo, hi, kRelTol);
    if (seen_peak > peak + 1.0) {
      // The scan under-estimated the maximum; rescale and redo.
      peak = seen_peak;
      if (rounds > 20)
        throw NumericError("V_p quadrature failed to locate its peak", 0.0);
      continue;
    }
    if (!inner.converged)
      throw NumericError(
          "V_p quadrature did not converge",
          inner.abs_error / std::max(inner.value, 1e-300));
    const double log_window = peak + std::log(inner.value);

    double tail_peak = kNegInf;
    constexpr int kTailScan = 32;
    for (int side = 0; side < 2; ++side) {
      const double ta = side == 0 ? 0.0 : hi;
      const double tb = side == 0 ? lo : 1.0;
      if (tb - ta < 1e-14) continue;
      for (int i = 0; i <= kTailScan; ++i) {
        const double x = ta + (tb - ta) * i / kTailScan;
        if (x <= 0.0 || x >= 1.0) continue;
        tail_peak = std::max(tail_peak, integrand.log_value(x));
      }
    }
    const double tail_width = std::max(0.0, 1.0 - (hi - lo));
    const bool tails_negligible =
        tail_peak == kNegInf || tail_width == 0.0 ||
        tail_peak + std::log(tail_width) <
            log_window + std::log(0.1 * kRelTol);
    if (tails_negligible) {
      return Probability::from_log(log_window -
                                   std::log(kernel.normalizer()));
    }
    if (lo == 0.0 && hi == 1.0)
      throw NumericError("V_p quadrature tail bound failed on [0,1]", 0.0);
    peak = std::max(peak, tail_peak);
    lo = std::max(0.0, lo - 10.0 * sigma);
    hi = std::min(1.0, hi + 10.0 * sigma);
  }
}

double transfer_expectation(const Rational& p, const Shape& shape,
                            const std::function<double(double)>& f) {
  const KernelParams kernel(p, shape);
  auto integrand = [&](double p_prime) {
    const double x = std::clamp(p_prime, 1e-12, 1.0 - 1e-12);
    return kernel.density(p_prime) * f(x);
  };
  QuadratureResult result = integrate_adaptive(integrand, 0.0, 1.0, 1e-9);
  if (!result.converged)
    throw NumericError(
        "transfer quadrature did not converge",
        result.abs_error / std::max(std::abs(result.value), 1e-300));
  return result.value / kernel.normalizer();
}

}  // namespace degseq
