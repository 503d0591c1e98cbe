#include "degseq/enumerate.hpp"

namespace degseq {

void for_each_s(const Shape& shape,
                const std::function<void(const std::vector<int>&)>& fn) {
  VectorEnumerator it(shape.m, shape.row_capacity());
  std::vector<int> s;
  while (it.next(s)) fn(s);
}

void for_each_t(const Shape& shape,
                const std::function<void(const std::vector<int>&)>& fn) {
  VectorEnumerator it(shape.n, shape.col_capacity());
  std::vector<int> t;
  while (it.next(t)) fn(t);
}

void for_each_pair(const Shape& shape,
                   const std::function<void(const std::vector<int>&,
                                            const std::vector<int>&)>& fn) {
  for_each_s(shape, [&](const std::vector<int>& s) {
    for_each_t(shape, [&](const std::vector<int>& t) { fn(s, t); });
  });
}

}  // namespace degseq
