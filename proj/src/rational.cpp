#include "degseq/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "degseq/errors.hpp"

namespace degseq {

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw DomainError("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rational r;
    if (r.set_str(text, 10) != 0)
      throw DomainError("bad rational literal: " + text);
    if (r.get_den() == 0) throw DomainError("zero denominator: " + text);
    r.canonicalize();
    return r;
  }

  // Decimal with optional exponent: [-]digits[.digits][e[+-]digits]
  std::string mantissa = text;
  long exponent10 = 0;
  auto epos = text.find_first_of("eE");
  if (epos != std::string::npos) {
    mantissa = text.substr(0, epos);
    const std::string exp_part = text.substr(epos + 1);
    char* end = nullptr;
    exponent10 = std::strtol(exp_part.c_str(), &end, 10);
    if (end == exp_part.c_str() || *end != '\0')
      throw DomainError("bad exponent in rational literal: " + text);
  }
  std::string digits;
  long frac_digits = 0;
  bool negative = false;
  bool seen_point = false;
  for (std::size_t i = 0; i < mantissa.size(); ++i) {
    char c = mantissa[i];
    if (i == 0 && (c == '+' || c == '-')) {
      negative = (c == '-');
    } else if (c == '.') {
      if (seen_point) throw DomainError("bad rational literal: " + text);
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw DomainError("bad rational literal: " + text);
    }
  }
  if (digits.empty()) throw DomainError("bad rational literal: " + text);

  Int numerator(digits, 10);
  if (negative) numerator = -numerator;
  long net = exponent10 - frac_digits;
  Int num = numerator, den = 1;
  if (net > 0) {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(net));
    num *= scale;
  } else if (net < 0) {
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(-net));
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_pow(const Rational& base, long exp) {
  if (exp < 0) throw DomainError("rational_pow: negative exponent");
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num().get_mpz_t(),
             static_cast<unsigned long>(exp));
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den().get_mpz_t(),
             static_cast<unsigned long>(exp));
  // base was canonical, so num^e / den^e already is.
  return result;
}

double to_double(const Rational& x) { return x.get_d(); }

double log_to_double(const Int& z) {
  if (sgn(z) <= 0) {
    if (sgn(z) == 0) return -std::numeric_limits<double>::infinity();
    throw DomainError("log of negative integer");
  }
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

double log_to_double(const Rational& x) {
  if (sgn(x) <= 0) {
    if (sgn(x) == 0) return -std::numeric_limits<double>::infinity();
    throw DomainError("log of negative rational");
  }
  return log_to_double(Int(x.get_num())) - log_to_double(Int(x.get_den()));
}

std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace degseq
