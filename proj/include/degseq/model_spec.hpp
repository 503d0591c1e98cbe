#ifndef DEGSEQ_MODEL_SPEC_HPP
#define DEGSEQ_MODEL_SPEC_HPP

#include <optional>
#include <string>
#include <vector>

#include "degseq/rational.hpp"
#include "degseq/shape.hpp"

namespace degseq {

// The eight degree-sequence distributions.  Digraph variants are selected
// by shape.loops_forbidden, not by separate family tags.
enum class Family { Gp, Gk, Gt, Ip, Bp, Bk, Bt, Vp };

bool family_is_graph(Family f);   // Gp, Gk, Gt
bool family_uses_p(Family f);     // Gp, Ip, Bp, Vp
bool family_uses_k(Family f);     // Gk, Bk
bool family_uses_t(Family f);     // Gt, Bt
std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

// The binomial-model counterpart of a graph model: Gp->Vp, Gk->Bk, Gt->Bt.
Family counterpart_family(Family f);

class ModelSpec {
 public:
  static ModelSpec with_p(Family f, Shape shape, Rational p);
  static ModelSpec with_k(Family f, Shape shape, long long k);
  static ModelSpec with_t(Family f, Shape shape, std::vector<int> t);

  Family family() const { return family_; }
  const Shape& shape() const { return shape_; }

  const Rational& p() const;
  double p_double() const;
  long long k() const;
  const std::vector<int>& t() const;

  // The total forced by the parameter: k for k-families, sum(t) for
  // t-families.  Throws DomainError otherwise.
  long long fixed_total() const;

  std::string describe() const;

 private:
  ModelSpec(Family f, Shape shape) : family_(f), shape_(shape) {}
  Family family_;
  Shape shape_;
  Rational p_{0};
  long long k_ = -1;
  std::vector<int> t_;
};

}  // namespace degseq

#endif
