#ifndef DEGSEQ_KERNEL_HPP
#define DEGSEQ_KERNEL_HPP

#include <functional>
#include <utility>

#include "degseq/degree_sequence.hpp"
#include "degseq/log_pmf.hpp"
#include "degseq/probability.hpp"
#include "degseq/rational.hpp"
#include "degseq/shape.hpp"

namespace degseq {

// The Gaussian mixing kernel K_p: normal density in p' with mean p and
// variance pq/(2mn), truncated to [0,1] by the normalizer V(p).
struct KernelParams {
  Rational p;
  Shape shape;

  KernelParams(Rational p_, Shape shape_);

  double p_double() const;
  double sigma() const;                 // sqrt(pq/(2mn))
  double density(double p_prime) const;      // K_p(p')
  double log_density(double p_prime) const;
  double normalizer() const;                 // V(p) = int_0^1 K_p
};

// (p' -> K_p(p'), V(p)) as a pair, matching the paper's definition order.
std::pair<std::function<double(double)>, double> kernel_and_normalizer(
    const KernelParams& kp);

struct QuadratureResult {
  double value = 0;
  double abs_error = 0;
  long long evaluations = 0;
  bool converged = true;
};

// Globally adaptive Gauss-Kronrod 15(7) integration of f over [a,b].
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double rel_tol,
                                    long long max_evaluations = 200000);

// log Prob_{V_p}(S=s, T=t) = log( V(p)^{-1} int_0^1 K_p(p') Prob_{B_p'} dp' ).
// Count-free: the provider argument is part of the uniform engine interface
// but is never consulted.
Probability vp_log_pmf(const Rational& p, const DegreeSequence& ds,
                       const CountProvider& counts);

// E_{V_p}-style transfer: V(p)^{-1} int_0^1 K_p(p') f(p') dp'.
double transfer_expectation(const Rational& p, const Shape& shape,
                            const std::function<double(double)>& f);

}  // namespace degseq

#endif
