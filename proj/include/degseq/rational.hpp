#ifndef DEGSEQ_RATIONAL_HPP
#define DEGSEQ_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace degseq {

using Int = mpz_class;
using Rational = mpq_class;

// Parses "a/b", a decimal like "0.25", or scientific notation like "2.5e-3"
// into an exact rational.
Rational rational_from_string(const std::string& text);

// base^exp for exp >= 0.
Rational rational_pow(const Rational& base, long exp);

double to_double(const Rational& x);

// Natural log of a positive integer, accurate even when the value does not
// fit in a double.  Returns -inf for zero.
double log_to_double(const Int& z);

// Natural log of a positive rational; -inf for zero.
double log_to_double(const Rational& x);

std::string to_string(const Rational& x);

}  // namespace degseq

#endif
