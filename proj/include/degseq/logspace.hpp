#ifndef DEGSEQ_LOGSPACE_HPP
#define DEGSEQ_LOGSPACE_HPP

#include <cmath>
#include <limits>

namespace degseq {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(e^a + e^b), tolerant of -inf.
inline double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

// log C(n,k) via lgamma; -inf outside the triangle.
inline double lchoose(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return kNegInf;
  if (k == 0 || k == n) return 0.0;
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0;
  double comp_ = 0;
};

}  // namespace degseq

#endif
