#ifndef DEGSEQ_SHAPE_HPP
#define DEGSEQ_SHAPE_HPP

namespace degseq {

// Dimensions of the incidence matrix: m rows (vertices in U), n columns
// (vertices in V).  With loops_forbidden the matrix is square with a zero
// diagonal (loop-free digraph mode).
struct Shape {
  int m;
  int n;
  bool loops_forbidden;

  Shape(int m_, int n_, bool loops_forbidden_ = false);

  // Number of free cells: m*n, or n^2-n when the diagonal is pinned to zero.
  long long cell_count() const {
    return loops_forbidden ? static_cast<long long>(n) * n - n
                           : static_cast<long long>(m) * n;
  }

  // Largest possible row degree / column degree.
  int row_capacity() const { return loops_forbidden ? n - 1 : n; }
  int col_capacity() const { return loops_forbidden ? m - 1 : m; }

  bool cell_allowed(int i, int j) const {
    return !(loops_forbidden && i == j);
  }

  bool operator==(const Shape& other) const {
    return m == other.m && n == other.n &&
           loops_forbidden == other.loops_forbidden;
  }
};

}  // namespace degseq

#endif
