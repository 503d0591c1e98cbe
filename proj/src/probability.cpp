#include "degseq/probability.hpp"

#include <cmath>

#include "degseq/errors.hpp"
#include "degseq/logspace.hpp"

namespace degseq {

namespace {
constexpr double kLogSlack = 1e-12;  // exp(log) may exceed 1 by this much
}

Probability Probability::exact(Rational value) {
  if (sgn(value) < 0 || value > 1)
    throw DomainError("probability outside [0,1]");
  Probability p;
  p.is_exact_ = true;
  p.exact_ = std::move(value);
  return p;
}

Probability Probability::from_log(double log_value) {
  if (std::isnan(log_value) || log_value > kLogSlack)
    throw DomainError("log probability above 0");
  Probability p;
  p.is_exact_ = false;
  p.log_ = log_value;
  return p;
}

const Rational& Probability::rational() const {
  if (!is_exact_) throw DomainError("no exact value on the log path");
  return exact_;
}

double Probability::log_value() const {
  if (!is_exact_) return log_;
  return log_to_double(exact_);
}

double Probability::value() const {
  return is_exact_ ? to_double(exact_) : std::exp(log_);
}

Probability Probability::operator+(const Probability& other) const {
  if (is_exact_ && other.is_exact_) return exact(exact_ + other.exact_);
  return from_log(log_add(log_value(), other.log_value()));
}

Probability Probability::operator*(const Probability& other) const {
  if (is_exact_ && other.is_exact_) return exact(exact_ * other.exact_);
  return from_log(log_value() + other.log_value());
}

}  // namespace degseq
