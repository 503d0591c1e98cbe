#include "degseq/mixtures.hpp"

#include "degseq/binomial_table.hpp"
#include "degseq/enumerate.hpp"
#include "degseq/errors.hpp"
#include "degseq/exact_pmf.hpp"

namespace degseq {

namespace {

Rational abs_rational(Rational x) {
  if (sgn(x) < 0) x = -x;
  return x;
}

// relp: Prob_{G_p}(s,t) = sum_k C(cells,k) p^k q^{cells-k} Prob_{G_k}(s,t),
// evaluated literally (every k term) at every point of the index set.
Rational residual_relp(const Shape& shape, const Rational& p) {
  const long long cells = shape.cell_count();
  const Rational q = Rational(1) - p;
  Rational worst(0);
  for_each_pair(shape, [&](const std::vector<int>& s,
                           const std::vector<int>& t) {
    DegreeSequence ds(shape, s, t);
    Rational lhs =
        exact_pmf(ModelSpec::with_p(Family::Gp, shape, p), ds).rational();
    Rational rhs(0);
    for (long long k = 0; k <= cells; ++k) {
      Rational weight = Rational(binom(cells, k)) *
                        rational_pow(p, static_cast<long>(k)) *
                        rational_pow(q, static_cast<long>(cells - k));
      rhs += weight *
             exact_pmf(ModelSpec::with_k(Family::Gk, shape, k), ds).rational();
    }
    Rational gap = abs_rational(lhs - rhs);
    if (gap > worst) worst = gap;
  });
  return worst;
}

// relM: Prob_{G_k}(s,t) =
//   sum_{t': sum t' = k} C(cells,k)^{-1} prod_j C(colcap, t'_j) Prob_{G_t'}(s,t).
Rational residual_relM(const Shape& shape, long long k) {
  const long long cells = shape.cell_count();
  const Rational inv_choose(Rational(1) / Rational(binom(cells, k)));
  Rational worst(0);
  for_each_pair(shape, [&](const std::vector<int>& s,
                           const std::vector<int>& t) {
    DegreeSequence ds(shape, s, t);
    Rational lhs =
        exact_pmf(ModelSpec::with_k(Family::Gk, shape, k), ds).rational();
    Rational rhs(0);
    for_each_t(shape, [&](const std::vector<int>& t_mix) {
      long long total = 0;
      for (int v : t_mix) total += v;
      if (total != k) return;
      Rational weight = inv_choose;
      for (int v : t_mix)
        weight *= Rational(binom(shape.col_capacity(), v));
      rhs += weight *
             exact_pmf(ModelSpec::with_t(Family::Gt, shape, t_mix), ds)
                 .rational();
    });
    Rational gap = abs_rational(lhs - rhs);
    if (gap > worst) worst = gap;
  });
  return worst;
}

// relt: Prob_{G_t}(s) = Prob_{G_k}(s,t) / Prob_{G_k}(T=t) with k = sum t.
Rational residual_relt(const Shape& shape, const std::vector<int>& t) {
  long long k = 0;
  for (int v : t) k += v;
  ModelSpec gk = ModelSpec::with_k(Family::Gk, shape, k);
  ModelSpec gt = ModelSpec::with_t(Family::Gt, shape, t);

  Rational marginal(0);
  for_each_s(shape, [&](const std::vector<int>& s) {
    marginal += exact_pmf(gk, DegreeSequence(shape, s, t)).rational();
  });
  if (sgn(marginal) == 0)
    throw DomainError("relt: conditioning event T=t has probability 0");

  Rational worst(0);
  for_each_s(shape, [&](const std::vector<int>& s) {
    DegreeSequence ds(shape, s, t);
    Rational lhs = exact_pmf(gt, ds).rational();
    Rational rhs = exact_pmf(gk, ds).rational() / marginal;
    Rational gap = abs_rational(lhs - rhs);
    if (gap > worst) worst = gap;
  });
  return worst;
}

}  // namespace

Rational mixture_residual(MixingIdentity identity, const Shape& shape,
                          const MixtureParams& params) {
  if (shape.cell_count() > 12)
    throw CapacityError("mixing identities limited to 12 cells");
  switch (identity) {
    case MixingIdentity::relp: return residual_relp(shape, params.p);
    case MixingIdentity::relM: return residual_relM(shape, params.k);
    case MixingIdentity::relt: return residual_relt(shape, params.t);
  }
  throw DomainError("unknown mixing identity");
}

}  // namespace degseq
