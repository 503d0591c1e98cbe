#ifndef DEGSEQ_COUNTING_HPP
#define DEGSEQ_COUNTING_HPP

#include <map>
#include <utility>
#include <vector>

#include "degseq/degree_sequence.hpp"
#include "degseq/rational.hpp"

namespace degseq {

struct CountResult {
  Int value;
  enum class Method { brute_force, dp } method;
  // Set by brute_force_count when the requested margins cannot match
  // (sum(s) != sum(t)); the value is 0 in that case.
  bool sum_mismatch = false;
};

// Exhaustive reference oracle over all 2^cell_count matrices.
// Throws CapacityError when cell_count > 25.
CountResult brute_force_count(const DegreeSequence& ds);

// G(s,t): bipartite count by column DP over the multiset of residual row
// demands.  Loops must be allowed; throws DomainError on sum mismatch.
CountResult count_G(const DegreeSequence& ds,
                    bool use_gale_ryser_precheck = false);

// dig-G(s,t): loop-free digraph count; the diagonal exclusion breaks row
// exchangeability, so the DP state keeps rows with un-passed diagonals
// distinguished.
CountResult count_digG(const DegreeSequence& ds);

// Dispatch on shape.loops_forbidden.
CountResult count_exact(const DegreeSequence& ds);

// Gale-Ryser feasibility test (dominance condition).  Used only as an
// optional pre-check; never changes a count.
bool gale_ryser_feasible(const DegreeSequence& ds);

// One pass over all 2^cell_count matrices of the shape, tallying counts by
// margin pair.  Test/oracle helper.
using MarginKey = std::pair<std::vector<int>, std::vector<int>>;
std::map<MarginKey, Int> tally_all_margins(const Shape& shape);

}  // namespace degseq

#endif
