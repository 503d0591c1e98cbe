#include <numeric>

#include "degseq/adjacency.hpp"
#include "degseq/degree_sequence.hpp"
#include "degseq/errors.hpp"
#include "degseq/shape.hpp"

namespace degseq {

Shape::Shape(int m_, int n_, bool loops_forbidden_)
    : m(m_), n(n_), loops_forbidden(loops_forbidden_) {
  if (m < 1 || n < 1) throw DomainError("shape dimensions must be positive");
  if (loops_forbidden && m != n)
    throw DomainError("loops-forbidden mode requires a square shape");
}

BipartiteAdjacency::BipartiteAdjacency(Shape shape,
                                       std::vector<std::uint8_t> bits)
    : shape_(shape), bits_(std::move(bits)) {
  if (bits_.size() != static_cast<std::size_t>(shape_.m) * shape_.n)
    throw DomainError("bit array size does not match shape");
  for (auto& b : bits_) {
    if (b > 1) throw DomainError("bits must be 0 or 1");
  }
  if (shape_.loops_forbidden) {
    for (int i = 0; i < shape_.m; ++i) {
      if (at(i, i)) throw DomainError("diagonal cell set in loop-free mode");
    }
  }
}

long long BipartiteAdjacency::ones_count() const {
  return std::accumulate(bits_.begin(), bits_.end(), 0LL);
}

DegreeSequence::DegreeSequence(Shape shape, std::vector<int> s,
                               std::vector<int> t)
    : shape_(shape), s_(std::move(s)), t_(std::move(t)) {
  if (s_.size() != static_cast<std::size_t>(shape_.m))
    throw DomainError("row degree vector has wrong length");
  if (t_.size() != static_cast<std::size_t>(shape_.n))
    throw DomainError("column degree vector has wrong length");
  for (int v : s_) {
    if (v < 0 || v > shape_.row_capacity())
      throw DomainError("row degree out of range");
  }
  for (int v : t_) {
    if (v < 0 || v > shape_.col_capacity())
      throw DomainError("column degree out of range");
  }
  total_s_ = std::accumulate(s_.begin(), s_.end(), 0LL);
  total_t_ = std::accumulate(t_.begin(), t_.end(), 0LL);
}

long long DegreeSequence::edge_count() const {
  if (!joint_valid())
    throw DomainError("degree sums disagree: no joint edge count");
  return total_s_;
}

DegreeSequence degrees_of(const BipartiteAdjacency& matrix) {
  const Shape& shape = matrix.shape();
  std::vector<int> s(shape.m, 0), t(shape.n, 0);
  for (int i = 0; i < shape.m; ++i) {
    for (int j = 0; j < shape.n; ++j) {
      if (matrix.at(i, j)) {
        ++s[i];
        ++t[j];
      }
    }
  }
  return DegreeSequence(shape, std::move(s), std::move(t));
}

Rational density_lambda(const DegreeSequence& ds) {
  if (!ds.joint_valid())
    throw DomainError("degree sums disagree: density undefined");
  Rational r(static_cast<long>(ds.total_s()),
             static_cast<long>(ds.shape().m) * ds.shape().n);
  r.canonicalize();
  return r;
}

Rational lambda_from_t(const Shape& shape, const std::vector<int>& t) {
  long total = std::accumulate(t.begin(), t.end(), 0L);
  Rational r(total, static_cast<long>(shape.m) * shape.n);
  r.canonicalize();
  return r;
}

Rational lambda_from_s(const Shape& shape, const std::vector<int>& s) {
  long total = std::accumulate(s.begin(), s.end(), 0L);
  Rational r(total, static_cast<long>(shape.m) * shape.n);
  r.canonicalize();
  return r;
}

}  // namespace degseq
