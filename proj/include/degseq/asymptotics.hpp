#ifndef DEGSEQ_ASYMPTOTICS_HPP
#define DEGSEQ_ASYMPTOTICS_HPP

#include "degseq/degree_sequence.hpp"
#include "degseq/rational.hpp"

namespace degseq {

// Asymptotic enumeration estimate with its factors split out for
// diagnostics.  log_estimate excludes the unknowable O(n^-b) error term.
struct EnumEstimate {
  double log_estimate;
  double log_main;     // log of the binomial main term
  double a_term;       // normalized row-degree spread A
  double b_term;       // normalized column-degree spread B
  double cross_term;   // diagonal correction Cr (0 for bipartite)
};

// log G(s,t) estimate: main term times exp(-(1/2)(1-A)(1-B)).
// Throws DomainError when lambda is 0 or 1 (count is exactly 1).
EnumEstimate estimate_logG(const DegreeSequence& ds);

// log dig-G(s,t) estimate with the extra cross-term correction.
// Requires m = n and lambda*n^2 <= n^2-n.
EnumEstimate estimate_logdigG(const DegreeSequence& ds);

// Approximate log Prob_{B_p}(s,t) with leading constant 2:
//   2 p^{2k} q^{2*cells-2k} sqrt(pi*p*q*cells) prod C(caps, degrees).
// Returns -inf on sum mismatch.
double bpdenom_log_pmf(const Rational& p, const DegreeSequence& ds);

}  // namespace degseq

#endif
