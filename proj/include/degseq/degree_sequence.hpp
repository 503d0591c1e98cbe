#ifndef DEGSEQ_DEGREE_SEQUENCE_HPP
#define DEGSEQ_DEGREE_SEQUENCE_HPP

#include <vector>

#include "degseq/adjacency.hpp"
#include "degseq/rational.hpp"
#include "degseq/shape.hpp"

namespace degseq {

// Row degrees s and column degrees t.  Construction checks the per-entry
// bounds but deliberately allows sum(s) != sum(t): marginal queries need
// one-sided sequences.  Joint operations must check joint_valid() first.
class DegreeSequence {
 public:
  DegreeSequence(Shape shape, std::vector<int> s, std::vector<int> t);

  const Shape& shape() const { return shape_; }
  const std::vector<int>& s() const { return s_; }
  const std::vector<int>& t() const { return t_; }

  long long total_s() const { return total_s_; }
  long long total_t() const { return total_t_; }
  bool joint_valid() const { return total_s_ == total_t_; }

  // The edge count k; throws DomainError unless joint_valid().
  long long edge_count() const;

  bool operator==(const DegreeSequence& other) const {
    return shape_ == other.shape_ && s_ == other.s_ && t_ == other.t_;
  }

 private:
  Shape shape_;
  std::vector<int> s_;
  std::vector<int> t_;
  long long total_s_;
  long long total_t_;
};

DegreeSequence degrees_of(const BipartiteAdjacency& matrix);

// lambda = k/(mn); throws DomainError when the sums disagree.
Rational density_lambda(const DegreeSequence& ds);

// lambda_m(t) and lambda_n(s): one-sided densities.
Rational lambda_from_t(const Shape& shape, const std::vector<int>& t);
Rational lambda_from_s(const Shape& shape, const std::vector<int>& s);

}  // namespace degseq

#endif
