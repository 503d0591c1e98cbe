#include "degseq/counting.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "degseq/binomial_table.hpp"
#include "degseq/errors.hpp"

namespace degseq {

namespace {

std::vector<std::pair<int, int>> allowed_cells(const Shape& shape) {
  std::vector<std::pair<int, int>> cells;
  cells.reserve(static_cast<std::size_t>(shape.cell_count()));
  for (int i = 0; i < shape.m; ++i) {
    for (int j = 0; j < shape.n; ++j) {
      if (shape.cell_allowed(i, j)) cells.emplace_back(i, j);
    }
  }
  return cells;
}

std::string encode_state(int col, const std::vector<int>& counts) {
  std::string key;
  key.reserve(counts.size() + 1);
  key.push_back(static_cast<char>(col));
  for (int c : counts) key.push_back(static_cast<char>(c));
  return key;
}

// Column DP for the loop-allowed count.  The state is the multiset of
// residual row demands stored as counts-per-value; a column of sum t
// chooses how many rows of each residual class it occupies.
class BipartiteCounter {
 public:
  BipartiteCounter(std::vector<int> s, std::vector<int> t)
      : residual_counts_(0), t_(std::move(t)) {
    max_residual_ = 0;
    for (int v : s) max_residual_ = std::max(max_residual_, v);
    residual_counts_.assign(max_residual_ + 1, 0);
    for (int v : s) ++residual_counts_[v];
    // Largest column first: shrinks the residual support fastest.
    std::sort(t_.begin(), t_.end(), std::greater<int>());
  }

  Int count() { return recurse(0, residual_counts_); }

 private:
  Int recurse(int col, const std::vector<int>& counts) {
    const int n = static_cast<int>(t_.size());
    if (col == n) {
      for (std::size_t v = 1; v < counts.size(); ++v) {
        if (counts[v] > 0) return Int(0);
      }
      return Int(1);
    }
    const int remaining = n - col;
    for (std::size_t v = static_cast<std::size_t>(remaining) + 1;
         v < counts.size(); ++v) {
      if (counts[v] > 0) return Int(0);  // demand exceeds remaining columns
    }
    const std::string key = encode_state(col, counts);
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;

    Int total = 0;
    std::vector<int> chosen(counts.size(), 0);
    enumerate_choices(static_cast<int>(counts.size()) - 1, t_[col], counts,
                      chosen, Int(1), col, total);
    memo_.emplace(std::move(key), total);
    return total;
  }

  // Pick chosen[v] rows from each residual class v >= 1, weighted by
  // C(counts[v], chosen[v]).  Rows whose residual equals the number of
  // remaining columns are forced.
  void enumerate_choices(int v, int need, const std::vector<int>& counts,
                         std::vector<int>& chosen, Int weight, int col,
                         Int& total) {
    if (need == 0 || v == 0) {
      if (need != 0) return;
      std::vector<int> next_counts(counts.size(), 0);
      for (std::size_t u = 0; u < counts.size(); ++u) {
        next_counts[u] += counts[u] - chosen[u];
        if (u >= 1) next_counts[u - 1] += chosen[u];
      }
      while (next_counts.size() > 1 && next_counts.back() == 0)
        next_counts.pop_back();
      total += weight * recurse(col + 1, next_counts);
      return;
    }
    const int remaining_after = static_cast<int>(t_.size()) - col - 1;
    int lo = 0;
    if (v > remaining_after) lo = counts[v];  // must serve them now
    int hi = std::min(counts[v], need);
    if (lo > hi) return;
    // Prune: classes below v can supply at most this many.
    int below_capacity = 0;
    for (int u = 1; u < v; ++u) below_capacity += counts[u];
    for (int take = std::max(lo, need - below_capacity); take <= hi; ++take) {
      chosen[v] = take;
      enumerate_choices(v - 1, need - take, counts, chosen,
                        weight * binom_small(counts[v], take), col, total);
    }
    chosen[v] = 0;
  }

  std::vector<int> residual_counts_;
  std::vector<int> t_;
  int max_residual_;
  std::unordered_map<std::string, Int> memo_;
};

// Column DP for the zero-diagonal count.  Rows whose diagonal column has
// already been processed are exchangeable and enter the key as a sorted
// block; later rows stay distinguished.  Both margins are permuted
// simultaneously beforehand (the count is invariant under relabelling) so
// that columns arrive in descending t order.
class DigraphCounter {
 public:
  DigraphCounter(std::vector<int> s, std::vector<int> t)
      : s_(std::move(s)), t_(std::move(t)), n_(static_cast<int>(s_.size())) {
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return t_[a] > t_[b]; });
    std::vector<int> s2(n_), t2(n_);
    for (int i = 0; i < n_; ++i) {
      s2[i] = s_[order[i]];
      t2[i] = t_[order[i]];
    }
    s_ = std::move(s2);
    t_ = std::move(t2);
  }

  Int count() { return recurse(0, s_); }

 private:
  std::string encode(int col, const std::vector<int>& residual) const {
    std::string key;
    key.reserve(residual.size() + 1);
    key.push_back(static_cast<char>(col));
    std::vector<int> head(residual.begin(), residual.begin() + col);
    std::sort(head.begin(), head.end());
    for (int v : head) key.push_back(static_cast<char>(v));
    for (int i = col; i < n_; ++i)
      key.push_back(static_cast<char>(residual[i]));
    return key;
  }

  Int recurse(int col, const std::vector<int>& residual) {
    if (col == n_) {
      for (int v : residual) {
        if (v != 0) return Int(0);
      }
      return Int(1);
    }
    // Row i can still receive in columns j in [col, n) with j != i.
    for (int i = 0; i < n_; ++i) {
      int available = n_ - col - (i >= col ? 1 : 0);
      if (residual[i] > available) return Int(0);
    }
    const std::string key = encode(col, residual);
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;

    Int total = 0;
    std::vector<std::uint8_t> take(n_, 0);
    enumerate_rows(0, t_[col], col, residual, take, total);
    memo_.emplace(std::move(key), total);
    return total;
  }

  // Choose exactly `need` distinct rows (excluding row `col`) with positive
  // residual.  n is small, so plain row-by-row branching suffices.
  void enumerate_rows(int i, int need, int col, const std::vector<int>& residual,
                      std::vector<std::uint8_t>& take, Int& total) {
    if (need == 0) {
      std::vector<int> next(residual);
      for (int r = 0; r < n_; ++r) {
        if (take[r]) --next[r];
      }
      total += recurse(col + 1, next);
      return;
    }
    if (i == n_) return;
    int usable_left = 0;
    for (int r = i; r < n_; ++r) {
      if (r != col && residual[r] > 0) ++usable_left;
    }
    if (usable_left < need) return;
    if (i != col && residual[i] > 0) {
      take[i] = 1;
      enumerate_rows(i + 1, need - 1, col, residual, take, total);
      take[i] = 0;
    }
    enumerate_rows(i + 1, need, col, residual, take, total);
  }

  std::vector<int> s_;
  std::vector<int> t_;
  int n_;
  std::unordered_map<std::string, Int> memo_;
};

}  // namespace

CountResult brute_force_count(const DegreeSequence& ds) {
  const Shape& shape = ds.shape();
  if (shape.cell_count() > 25)
    throw CapacityError("brute force limited to 25 free cells");
  if (!ds.joint_valid()) {
    return CountResult{Int(0), CountResult::Method::brute_force, true};
  }
  const auto cells = allowed_cells(shape);
  const int num_cells = static_cast<int>(cells.size());
  Int matches = 0;
  std::vector<int> s(shape.m), t(shape.n);
  for (std::uint64_t mask = 0; mask < (1ULL << num_cells); ++mask) {
    std::fill(s.begin(), s.end(), 0);
    std::fill(t.begin(), t.end(), 0);
    std::uint64_t bits = mask;
    while (bits) {
      int c = __builtin_ctzll(bits);
      bits &= bits - 1;
      ++s[cells[c].first];
      ++t[cells[c].second];
    }
    bool match = true;
    for (int i = 0; i < shape.m && match; ++i) match = (s[i] == ds.s()[i]);
    for (int j = 0; j < shape.n && match; ++j) match = (t[j] == ds.t()[j]);
    if (match) ++matches;
  }
  return CountResult{matches, CountResult::Method::brute_force, false};
}

CountResult count_G(const DegreeSequence& ds, bool use_gale_ryser_precheck) {
  const Shape& shape = ds.shape();
  if (shape.loops_forbidden)
    throw DomainError("count_G is for loop-allowed shapes; use count_digG");
  if (!ds.joint_valid())
    throw DomainError("count_G: degree sums disagree");
  if (shape.m > 30 || shape.n > 30)
    throw CapacityError("count_G: shape beyond DP capacity");
  if (use_gale_ryser_precheck && !gale_ryser_feasible(ds))
    return CountResult{Int(0), CountResult::Method::dp, false};
  BipartiteCounter counter(ds.s(), ds.t());
  return CountResult{counter.count(), CountResult::Method::dp, false};
}

CountResult count_digG(const DegreeSequence& ds) {
  const Shape& shape = ds.shape();
  if (!shape.loops_forbidden)
    throw DomainError("count_digG requires a loop-forbidden shape");
  if (!ds.joint_valid())
    throw DomainError("count_digG: degree sums disagree");
  if (shape.n > 16)
    throw CapacityError("count_digG: shape beyond DP capacity");
  DigraphCounter counter(ds.s(), ds.t());
  return CountResult{counter.count(), CountResult::Method::dp, false};
}

CountResult count_exact(const DegreeSequence& ds) {
  return ds.shape().loops_forbidden ? count_digG(ds) : count_G(ds);
}

bool gale_ryser_feasible(const DegreeSequence& ds) {
  if (!ds.joint_valid()) return false;
  std::vector<int> s(ds.s());
  std::sort(s.begin(), s.end(), std::greater<int>());
  long long prefix = 0;
  for (std::size_t h = 0; h < s.size(); ++h) {
    prefix += s[h];
    long long bound = 0;
    for (int tj : ds.t()) bound += std::min<long long>(tj, h + 1);
    if (prefix > bound) return false;
  }
  return true;
}

std::map<MarginKey, Int> tally_all_margins(const Shape& shape) {
  if (shape.cell_count() > 20)
    throw CapacityError("tally limited to 20 free cells");
  const auto cells = allowed_cells(shape);
  const int num_cells = static_cast<int>(cells.size());
  std::map<MarginKey, Int> tally;
  std::vector<int> s(shape.m), t(shape.n);
  for (std::uint64_t mask = 0; mask < (1ULL << num_cells); ++mask) {
    std::fill(s.begin(), s.end(), 0);
    std::fill(t.begin(), t.end(), 0);
    std::uint64_t bits = mask;
    while (bits) {
      int c = __builtin_ctzll(bits);
      bits &= bits - 1;
      ++s[cells[c].first];
      ++t[cells[c].second];
    }
    tally[{s, t}] += 1;
  }
  return tally;
}

}  // namespace degseq
