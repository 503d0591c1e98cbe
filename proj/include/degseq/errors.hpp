#ifndef DEGSEQ_ERRORS_HPP
#define DEGSEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace degseq {

// Invalid parameter or configuration.  Mapped to CLI exit code 1.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Instance exceeds the capacity of the requested method.  CLI exit code 2.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A numeric routine failed to reach its target accuracy.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_tolerance(achieved) {}
  double achieved_tolerance;
};

}  // namespace degseq

#endif
