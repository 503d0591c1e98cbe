#ifndef DEGSEQ_BINOMIAL_TABLE_HPP
#define DEGSEQ_BINOMIAL_TABLE_HPP

#include "degseq/rational.hpp"

namespace degseq {

// Exact binomial coefficients.  A Pascal triangle is built once on first
// use (thread-safe) for n <= pascal_rows(); larger arguments fall through
// to direct big-integer evaluation.  All paths are exact.
int pascal_rows();

const Int& binom_small(int n, int k);  // requires 0 <= k <= n <= pascal_rows()

Int binom(long long n, long long k);   // any n >= 0; 0 outside [0, n]

}  // namespace degseq

#endif
