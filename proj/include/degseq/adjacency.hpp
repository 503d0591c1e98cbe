#ifndef DEGSEQ_ADJACENCY_HPP
#define DEGSEQ_ADJACENCY_HPP

#include <cstdint>
#include <vector>

#include "degseq/shape.hpp"

namespace degseq {

// An m x n 0/1 incidence matrix, immutable after construction.
class BipartiteAdjacency {
 public:
  // bits is row-major with m*n entries in {0,1}.  Throws DomainError if a
  // forbidden diagonal cell is set.
  BipartiteAdjacency(Shape shape, std::vector<std::uint8_t> bits);

  const Shape& shape() const { return shape_; }

  bool at(int i, int j) const {
    return bits_[static_cast<std::size_t>(i) * shape_.n + j] != 0;
  }

  long long ones_count() const;

  const std::vector<std::uint8_t>& bits() const { return bits_; }

 private:
  Shape shape_;
  std::vector<std::uint8_t> bits_;
};

}  // namespace degseq

#endif
