#ifndef DEGSEQ_RNG_HPP
#define DEGSEQ_RNG_HPP

#include <cstdint>

namespace degseq {

// Identifies one reproducible stream of random numbers.  Equal
// (seed, stream_index) pairs generate bitwise-identical sequences on every
// platform.  Parallel work items must use distinct stream indices.
struct RngStream {
  std::uint64_t seed = 0;
  std::uint64_t stream_index = 0;

  RngStream substream(std::uint64_t offset) const {
    return RngStream{seed, stream_index + offset};
  }
};

std::uint64_t splitmix64_next(std::uint64_t& state);

// xoshiro256** (Blackman/Vigna, public domain).  State is derived from
// (seed, stream_index) through splitmix64, so streams with different
// indices are statistically independent.
class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(RngStream stream);

  std::uint64_t next_u64();

  // Uniform on [0,1), 53 bits.
  double next_double();

  // Uniform on (0,1); never returns 0 (safe for logs and Box-Muller).
  double next_double_open();

  // Unbiased uniform integer on {0, ..., n-1}; n >= 1.
  std::uint64_t next_below(std::uint64_t n);

  bool next_bernoulli(double p) { return next_double() < p; }

  // Bin(n, p) as a sum of Bernoulli draws (exact, O(n)).
  int next_binomial(int n, double p);

  // Standard normal via Box-Muller (two uniforms per pair, cached).
  double next_normal();

 private:
  std::uint64_t s_[4];
  double cached_normal_ = 0;
  bool has_cached_normal_ = false;
};

}  // namespace degseq

#endif
