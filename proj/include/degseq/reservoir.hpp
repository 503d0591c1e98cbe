#ifndef DEGSEQ_RESERVOIR_HPP
#define DEGSEQ_RESERVOIR_HPP

#include <algorithm>
#include <vector>

#include "degseq/errors.hpp"
#include "degseq/rng.hpp"

namespace degseq {

// Reservoir sampling: returns a uniform a-subset of {0,...,n-1} using
// exactly n-a draws.  draw_y(j) must return a uniform integer in {1,...,j};
// the template parameter lets tests enumerate every possible draw vector.
template <class DrawY>
std::vector<int> reservoir_subset_with(long long n, long long a,
                                       DrawY&& draw_y) {
  if (a < 0 || a > n) throw DomainError("reservoir: subset size out of range");
  std::vector<int> picked(static_cast<std::size_t>(a));
  for (long long j = 0; j < a; ++j) picked[static_cast<std::size_t>(j)] = static_cast<int>(j);
  for (long long j = a + 1; j <= n; ++j) {
    long long y = draw_y(j);
    if (y <= a) picked[static_cast<std::size_t>(y - 1)] = static_cast<int>(j - 1);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

std::vector<int> reservoir_subset(long long n, long long a,
                                  Xoshiro256StarStar& rng);

}  // namespace degseq

#endif
