#ifndef DEGSEQ_REGULARITY_HPP
#define DEGSEQ_REGULARITY_HPP

#include <optional>
#include <span>
#include <vector>

#include "degseq/degree_sequence.hpp"
#include "degseq/rational.hpp"

namespace degseq {

// Knobs for the regularity/acceptability predicates.  The theory leaves
// the O(N^{1/2+eps}) constant unspecified; c_reg makes the predicate
// concrete and reportable.
struct AcceptabilityParams {
  double a = 0.3;
  double eps = 0.1;
  double c_reg = 3.0;
};

struct RegularityCheck {
  bool regular = false;
  double margin = 0;  // bound minus max deviation (negative when failing)
};

// max_i |x_i - mean(x)| <= c_reg * N^{1/2+eps}, inclusive at the boundary.
RegularityCheck is_eps_regular(std::span<const int> x, double eps,
                               double c_reg);

// (s,t) is eps-regular when the sums match and both vectors pass.
bool pair_eps_regular(const DegreeSequence& ds, double eps, double c_reg);

struct AcceptabilityResult {
  double lhs = 0;
  double rhs = 0;
  bool ok = false;
};

// The density/shape condition:
//   (1-2x)^2/(4x(1-x)) * (1 + 5m/6n + 5n/6m) < a log n.
// Only this inequality is decidable for a single instance; the growth
// clauses are properties of sequences.
AcceptabilityResult acceptability(int m, int n, double x, double a);

struct RegularityReport {
  Rational lambda{0};                // K/(mn)
  double r_s = 0;                    // sum (s_i - n*Lambda)^2
  double r_t = 0;                    // sum (t_j - m*Lambda)^2
  std::optional<double> cross;       // square shapes only
  RegularityCheck s_regular;
  RegularityCheck t_regular;
  bool pair_regular = false;
  double acceptability_lhs = 0;      // +inf at degenerate densities
};

// Degree statistics computed with exact integer arithmetic internally.
// Requires joint_valid().
RegularityReport degree_stats(const DegreeSequence& ds,
                              const AcceptabilityParams& params = {});

}  // namespace degseq

#endif
