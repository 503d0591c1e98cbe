#include "degseq/rng.hpp"

#include <cmath>

#include "degseq/errors.hpp"
#include "degseq/reservoir.hpp"

namespace degseq {

std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Xoshiro256StarStar::Xoshiro256StarStar(RngStream stream) {
  // Stream derivation: mix the index into the splitmix seed with the
  // 64-bit golden ratio, then expand to the four state words.
  std::uint64_t sm = stream.seed ^
      (stream.stream_index * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);
  for (auto& word : s_) word = splitmix64_next(sm);
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

static inline std::uint64_t rotl64(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

std::uint64_t Xoshiro256StarStar::next_u64() {
  const std::uint64_t result = rotl64(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl64(s_[3], 45);
  return result;
}

double Xoshiro256StarStar::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Xoshiro256StarStar::next_double_open() {
  return static_cast<double>((next_u64() >> 11) | 1ULL) * 0x1.0p-53;
}

std::uint64_t Xoshiro256StarStar::next_below(std::uint64_t n) {
  if (n == 0) throw DomainError("next_below: empty range");
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t r = next_u64();
    if (r >= threshold) return r % n;
  }
}

int Xoshiro256StarStar::next_binomial(int n, double p) {
  int successes = 0;
  for (int i = 0; i < n; ++i) successes += next_bernoulli(p) ? 1 : 0;
  return successes;
}

double Xoshiro256StarStar::next_normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  double u1 = next_double_open();
  double u2 = next_double();
  double radius = std::sqrt(-2.0 * std::log(u1));
  double angle = 2.0 * M_PI * u2;
  cached_normal_ = radius * std::sin(angle);
  has_cached_normal_ = true;
  return radius * std::cos(angle);
}

std::vector<int> reservoir_subset(long long n, long long a,
                                  Xoshiro256StarStar& rng) {
  return reservoir_subset_with(n, a, [&rng](long long j) {
    return 1 + static_cast<long long>(
                   rng.next_below(static_cast<std::uint64_t>(j)));
  });
}

}  // namespace degseq
