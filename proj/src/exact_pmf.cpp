#include "degseq/exact_pmf.hpp"

#include <cmath>

#include "degseq/binomial_table.hpp"
#include "degseq/counting.hpp"
#include "degseq/errors.hpp"
#include "degseq/logspace.hpp"

namespace degseq {

namespace {

constexpr long long kExactCountCellLimit = 24;
constexpr long long kExactSumMatchCellLimit = 10000;

Rational binom_product(int cap, const std::vector<int>& degrees) {
  Rational product(1);
  for (int d : degrees) product *= Rational(binom(cap, d));
  return product;
}

Rational pq_power(const Rational& p, long long ones, long long zeros) {
  Rational q = Rational(1) - p;
  return rational_pow(p, static_cast<long>(ones)) *
         rational_pow(q, static_cast<long>(zeros));
}

}  // namespace

Probability exact_pmf(const ModelSpec& model, const DegreeSequence& ds) {
  const Shape& shape = model.shape();
  if (!(ds.shape() == shape))
    throw DomainError("degree sequence shape differs from model shape");
  const long long cells = shape.cell_count();
  const Family family = model.family();

  if (family == Family::Vp)
    throw DomainError("V_p has no exact path; use vp_log_pmf");

  if (family_is_graph(family) && cells > kExactCountCellLimit)
    throw CapacityError("exact pmf of graph families limited to 24 cells");

  const long long sum_s = ds.total_s();
  const long long sum_t = ds.total_t();

  switch (family) {
    case Family::Gp: {
      if (sum_s != sum_t) return Probability::zero();
      Int count = count_exact(ds).value;
      return Probability::exact(pq_power(model.p(), sum_s, cells - sum_s) *
                                Rational(count));
    }
    case Family::Gk: {
      if (sum_s != sum_t || sum_s != model.k()) return Probability::zero();
      Int count = count_exact(ds).value;
      return Probability::exact(Rational(count) /
                                Rational(binom(cells, model.k())));
    }
    case Family::Gt: {
      if (ds.t() != model.t() || sum_s != sum_t) return Probability::zero();
      Int count = count_exact(ds).value;
      return Probability::exact(
          Rational(count) / binom_product(shape.col_capacity(), model.t()));
    }
    case Family::Ip: {
      Rational mass = binom_product(shape.row_capacity(), ds.s()) *
                      binom_product(shape.col_capacity(), ds.t()) *
                      pq_power(model.p(), sum_s + sum_t,
                               2 * cells - sum_s - sum_t);
      return Probability::exact(mass);
    }
    case Family::Bp: {
      if (sum_s != sum_t) return Probability::zero();
      Probability numer =
          exact_pmf(ModelSpec::with_p(Family::Ip, shape, model.p()), ds);
      Probability denom = sum_match_prob(shape, model.p());
      return Probability::exact(numer.rational() / denom.rational());
    }
    case Family::Bk: {
      if (sum_s != sum_t || sum_s != model.k()) return Probability::zero();
      Rational c(binom(cells, model.k()));
      return Probability::exact(
          binom_product(shape.row_capacity(), ds.s()) *
          binom_product(shape.col_capacity(), ds.t()) / (c * c));
    }
    case Family::Bt: {
      if (ds.t() != model.t() || sum_s != sum_t) return Probability::zero();
      return Probability::exact(
          binom_product(shape.row_capacity(), ds.s()) /
          Rational(binom(cells, model.fixed_total())));
    }
    case Family::Vp:
      break;
  }
  throw DomainError("unhandled model family");
}

Probability sum_match_prob(const Shape& shape, const Rational& p) {
  if (sgn(p) <= 0 || p >= 1) throw DomainError("p must lie in (0,1)");
  const long long cells = shape.cell_count();
  if (cells > kExactSumMatchCellLimit)
    return Probability::from_log(log_sum_match(cells, to_double(p)));

  // sum_k C(cells,k)^2 a^{2k} c^{2*cells-2k} / b^{2*cells} with p = a/b.
  const Int a = p.get_num();
  const Int b = p.get_den();
  const Int c = b - a;
  const Int a2 = a * a;
  const Int c2 = c * c;

  Int coeff = 1;  // C(cells, k), updated multiplicatively
  Int cpow;       // c^{2*cells-2k}
  mpz_pow_ui(cpow.get_mpz_t(), c.get_mpz_t(),
             static_cast<unsigned long>(2 * cells));
  Int apow = 1;   // a^{2k}
  Int numer = 0;
  for (long long k = 0; k <= cells; ++k) {
    numer += coeff * coeff * apow * cpow;
    if (k < cells) {
      coeff *= static_cast<unsigned long>(cells - k);
      mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(),
                      static_cast<unsigned long>(k + 1));
      apow *= a2;
      mpz_divexact(cpow.get_mpz_t(), cpow.get_mpz_t(), c2.get_mpz_t());
    }
  }
  Int denom;
  mpz_pow_ui(denom.get_mpz_t(), b.get_mpz_t(),
             static_cast<unsigned long>(2 * cells));
  Rational result(numer, denom);
  result.canonicalize();
  return Probability::exact(result);
}

double log_sum_match(long long cells, double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("p must lie in (0,1)");
  const double logp = std::log(p);
  const double logq = std::log1p(-p);
  const double lg_total = std::lgamma(static_cast<double>(cells) + 1.0);
  double acc = kNegInf;
  for (long long k = 0; k <= cells; ++k) {
    double lc = lg_total - std::lgamma(static_cast<double>(k) + 1.0) -
                std::lgamma(static_cast<double>(cells - k) + 1.0);
    double term = 2.0 * lc + 2.0 * static_cast<double>(k) * logp +
                  2.0 * static_cast<double>(cells - k) * logq;
    acc = log_add(acc, term);
  }
  return acc;
}

}  // namespace degseq
