#ifndef DEGSEQ_EXACT_PMF_HPP
#define DEGSEQ_EXACT_PMF_HPP

#include "degseq/degree_sequence.hpp"
#include "degseq/model_spec.hpp"
#include "degseq/probability.hpp"

namespace degseq {

// Exact rational pmf of the model at (s,t).  Graph families need exact
// counts and are limited to cell_count <= 24 (CapacityError beyond); V_p
// has no exact path (DomainError; use vp_log_pmf).  Sum-mismatched inputs
// return exact 0 per the "0, otherwise" branches.  For t-families the
// degree sequence's t part must equal the model parameter, otherwise the
// joint probability is 0.
Probability exact_pmf(const ModelSpec& model, const DegreeSequence& ds);

// Prob_{I_p}(sum S_i = sum T_j) = sum_k C(cells,k)^2 p^{2k} q^{2*cells-2k},
// the B_p normalizing constant.  Exact rational for cell_count <= 10^4;
// compensated floating (log-path) summation beyond.
Probability sum_match_prob(const Shape& shape, const Rational& p);

// log of the same quantity, pure floating path (used by the log engines).
double log_sum_match(long long cells, double p);

}  // namespace degseq

#endif
