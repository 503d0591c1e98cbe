#ifndef DEGSEQ_MIXTURES_HPP
#define DEGSEQ_MIXTURES_HPP

#include <vector>

#include "degseq/rational.hpp"
#include "degseq/shape.hpp"

namespace degseq {

// The three mixing/conditioning identities relating the graph models:
//   relp: G_p as a binomial mixture of G_k
//   relM: G_k as a t-mixture of G_t
//   relt: G_t as the conditional of G_k given T = t
enum class MixingIdentity { relp, relM, relt };

struct MixtureParams {
  Rational p{1, 2};      // relp
  long long k = 0;       // relM
  std::vector<int> t;    // relt
};

// Evaluates both sides of the identity at every point of the index set and
// returns the maximum absolute residual, exact.  Requires cell_count <= 12.
Rational mixture_residual(MixingIdentity identity, const Shape& shape,
                          const MixtureParams& params);

}  // namespace degseq

#endif
