#ifndef DEGSEQ_LOG_PMF_HPP
#define DEGSEQ_LOG_PMF_HPP

#include <iosfwd>

#include "degseq/degree_sequence.hpp"
#include "degseq/model_spec.hpp"
#include "degseq/probability.hpp"

namespace degseq {

// Supplies log G(s,t) / log dig-G(s,t) to the pmf engines, either from the
// exact DP counters or from the asymptotic enumeration estimate.  In
// asymptotic mode a sequence failing eps-regularity triggers a warning on
// `warn` (when non-null) but is still evaluated; the caller decides trust.
struct CountProvider {
  enum class Mode { exact, asymptotic };
  Mode mode = Mode::exact;
  double eps = 0.1;
  double c_reg = 3.0;
  std::ostream* warn = nullptr;

  // Test hook: a poisoned provider throws std::logic_error when consulted,
  // proving that count-free paths never ask for counts.
  bool poisoned = false;
  static CountProvider poison();

  double log_count(const DegreeSequence& ds) const;
};

// log of the model's pmf at (s,t); -inf on the "0, otherwise" branches.
// V_p dispatches to vp_log_pmf and ignores the provider.
Probability log_pmf(const ModelSpec& model, const DegreeSequence& ds,
                    const CountProvider& counts);

}  // namespace degseq

#endif
