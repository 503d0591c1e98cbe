#ifndef DEGSEQ_ENUMERATE_HPP
#define DEGSEQ_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "degseq/shape.hpp"

namespace degseq {

// Odometer over integer vectors in {0..cap}^len, lexicographic order.
class VectorEnumerator {
 public:
  VectorEnumerator(int len, int cap) : cap_(cap), v_(len, 0), fresh_(true) {}

  // Returns false once all vectors have been produced.
  bool next(std::vector<int>& out) {
    if (fresh_) {
      fresh_ = false;
      out = v_;
      return true;
    }
    for (int i = static_cast<int>(v_.size()) - 1; i >= 0; --i) {
      if (v_[i] < cap_) {
        ++v_[i];
        for (std::size_t j = i + 1; j < v_.size(); ++j) v_[j] = 0;
        out = v_;
        return true;
      }
    }
    return false;
  }

 private:
  int cap_;
  std::vector<int> v_;
  bool fresh_;
};

// Visit every s in I_{row_capacity}^m.
void for_each_s(const Shape& shape,
                const std::function<void(const std::vector<int>&)>& fn);

// Visit every t in I_{col_capacity}^n.
void for_each_t(const Shape& shape,
                const std::function<void(const std::vector<int>&)>& fn);

// Visit every (s,t) in the full joint index set.
void for_each_pair(const Shape& shape,
                   const std::function<void(const std::vector<int>&,
                                            const std::vector<int>&)>& fn);

}  // namespace degseq

#endif
