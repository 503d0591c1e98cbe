#ifndef DEGSEQ_PROBABILITY_HPP
#define DEGSEQ_PROBABILITY_HPP

#include "degseq/rational.hpp"

namespace degseq {

// Carrier for probability values with two representations: an exact
// rational in [0,1], or a log-space double (possibly -inf).  Sums of exact
// values stay exact; anything touching the log path stays in log space and
// uses log-sum-exp for addition.
class Probability {
 public:
  static Probability exact(Rational value);
  static Probability from_log(double log_value);
  static Probability zero() { return exact(Rational(0)); }
  static Probability one() { return exact(Rational(1)); }

  bool is_exact() const { return is_exact_; }

  // Throws DomainError when called on a log-path value.
  const Rational& rational() const;

  double log_value() const;
  double value() const;

  Probability operator+(const Probability& other) const;
  Probability operator*(const Probability& other) const;

 private:
  Probability() : is_exact_(true), exact_(0), log_(0) {}
  bool is_exact_;
  Rational exact_;
  double log_;
};

}  // namespace degseq

#endif
