#include "degseq/sampling.hpp"

#include <cmath>

#include "degseq/errors.hpp"
#include "degseq/reservoir.hpp"

namespace degseq {

namespace {

std::vector<int> allowed_rows_of_column(const Shape& shape, int j) {
  std::vector<int> rows;
  rows.reserve(shape.m);
  for (int i = 0; i < shape.m; ++i) {
    if (shape.cell_allowed(i, j)) rows.push_back(i);
  }
  return rows;
}

BipartiteAdjacency sample_gp(const ModelSpec& model, Xoshiro256StarStar& rng) {
  const Shape& shape = model.shape();
  const double p = model.p_double();
  std::vector<std::uint8_t> bits(
      static_cast<std::size_t>(shape.m) * shape.n, 0);
  for (int i = 0; i < shape.m; ++i) {
    for (int j = 0; j < shape.n; ++j) {
      if (shape.cell_allowed(i, j) && rng.next_bernoulli(p))
        bits[static_cast<std::size_t>(i) * shape.n + j] = 1;
    }
  }
  return BipartiteAdjacency(shape, std::move(bits));
}

BipartiteAdjacency sample_gk(const ModelSpec& model, Xoshiro256StarStar& rng) {
  const Shape& shape = model.shape();
  std::vector<std::pair<int, int>> cells;
  cells.reserve(static_cast<std::size_t>(shape.cell_count()));
  for (int i = 0; i < shape.m; ++i) {
    for (int j = 0; j < shape.n; ++j) {
      if (shape.cell_allowed(i, j)) cells.emplace_back(i, j);
    }
  }
  std::vector<int> chosen =
      reservoir_subset(static_cast<long long>(cells.size()), model.k(), rng);
  std::vector<std::uint8_t> bits(
      static_cast<std::size_t>(shape.m) * shape.n, 0);
  for (int c : chosen) {
    auto [i, j] = cells[static_cast<std::size_t>(c)];
    bits[static_cast<std::size_t>(i) * shape.n + j] = 1;
  }
  return BipartiteAdjacency(shape, std::move(bits));
}

BipartiteAdjacency sample_gt(const ModelSpec& model, Xoshiro256StarStar& rng) {
  const Shape& shape = model.shape();
  std::vector<std::uint8_t> bits(
      static_cast<std::size_t>(shape.m) * shape.n, 0);
  for (int j = 0; j < shape.n; ++j) {
    const std::vector<int> rows = allowed_rows_of_column(shape, j);
    const int tj = model.t()[static_cast<std::size_t>(j)];
    if (tj > static_cast<int>(rows.size()))
      throw DomainError("column degree exceeds its allowed rows");
    std::vector<int> chosen =
        reservoir_subset(static_cast<long long>(rows.size()), tj, rng);
    for (int r : chosen)
      bits[static_cast<std::size_t>(rows[static_cast<std::size_t>(r)]) *
               shape.n + j] = 1;
  }
  return BipartiteAdjacency(shape, std::move(bits));
}

// Degree vector of one side from a uniform k-subset of the allowed cells.
// Row counts of such a subset follow C(cells,k)^{-1} prod C(cap, s_i),
// which is exactly the S-marginal shared by G_k, B_k and B_t.
std::vector<int> subset_row_counts(const Shape& shape, long long k,
                                   Xoshiro256StarStar& rng) {
  std::vector<std::pair<int, int>> cells;
  cells.reserve(static_cast<std::size_t>(shape.cell_count()));
  for (int i = 0; i < shape.m; ++i) {
    for (int j = 0; j < shape.n; ++j) {
      if (shape.cell_allowed(i, j)) cells.emplace_back(i, j);
    }
  }
  std::vector<int> chosen =
      reservoir_subset(static_cast<long long>(cells.size()), k, rng);
  std::vector<int> s(static_cast<std::size_t>(shape.m), 0);
  for (int c : chosen) ++s[static_cast<std::size_t>(cells[static_cast<std::size_t>(c)].first)];
  return s;
}

std::vector<int> subset_col_counts(const Shape& shape, long long k,
                                   Xoshiro256StarStar& rng) {
  std::vector<std::pair<int, int>> cells;
  cells.reserve(static_cast<std::size_t>(shape.cell_count()));
  for (int i = 0; i < shape.m; ++i) {
    for (int j = 0; j < shape.n; ++j) {
      if (shape.cell_allowed(i, j)) cells.emplace_back(i, j);
    }
  }
  std::vector<int> chosen =
      reservoir_subset(static_cast<long long>(cells.size()), k, rng);
  std::vector<int> t(static_cast<std::size_t>(shape.n), 0);
  for (int c : chosen) ++t[static_cast<std::size_t>(cells[static_cast<std::size_t>(c)].second)];
  return t;
}

DegreeSequence sample_ip(const ModelSpec& model, Xoshiro256StarStar& rng) {
  const Shape& shape = model.shape();
  const double p = model.p_double();
  std::vector<int> s(static_cast<std::size_t>(shape.m));
  std::vector<int> t(static_cast<std::size_t>(shape.n));
  for (auto& v : s) v = rng.next_binomial(shape.row_capacity(), p);
  for (auto& v : t) v = rng.next_binomial(shape.col_capacity(), p);
  return DegreeSequence(shape, std::move(s), std::move(t));
}

DegreeSequence sample_bp(const ModelSpec& model, Xoshiro256StarStar& rng) {
  // Rejection keeps the law exact; the acceptance probability is
  // Theta(1/sqrt(pqmn)) by the side-sum matching lemma.
  for (;;) {
    DegreeSequence ds = sample_ip(model, rng);
    if (ds.joint_valid()) return ds;
  }
}

DegreeSequence sample_bk(const ModelSpec& model, Xoshiro256StarStar& rng) {
  const Shape& shape = model.shape();
  std::vector<int> s = subset_row_counts(shape, model.k(), rng);
  std::vector<int> t = subset_col_counts(shape, model.k(), rng);
  return DegreeSequence(shape, std::move(s), std::move(t));
}

DegreeSequence sample_bt(const ModelSpec& model, Xoshiro256StarStar& rng) {
  const Shape& shape = model.shape();
  std::vector<int> s = subset_row_counts(shape, model.fixed_total(), rng);
  return DegreeSequence(shape, std::move(s), model.t());
}

DegreeSequence sample_vp(const ModelSpec& model, Xoshiro256StarStar& rng) {
  const Shape& shape = model.shape();
  const double p = model.p_double();
  const double q = 1.0 - p;
  const double mn = static_cast<double>(shape.m) * shape.n;
  const double sigma = std::sqrt(p * q / (2.0 * mn));
  double p_prime;
  do {
    p_prime = p + sigma * rng.next_normal();
  } while (!(p_prime > 0.0 && p_prime < 1.0));
  // B_{p'} draw by rejection from the product-binomial law.
  for (;;) {
    std::vector<int> s(static_cast<std::size_t>(shape.m));
    std::vector<int> t(static_cast<std::size_t>(shape.n));
    for (auto& v : s) v = rng.next_binomial(shape.row_capacity(), p_prime);
    for (auto& v : t) v = rng.next_binomial(shape.col_capacity(), p_prime);
    DegreeSequence ds(shape, std::move(s), std::move(t));
    if (ds.joint_valid()) return ds;
  }
}

}  // namespace

BipartiteAdjacency sample_graph(const ModelSpec& model, RngStream stream) {
  Xoshiro256StarStar rng(stream);
  switch (model.family()) {
    case Family::Gp: return sample_gp(model, rng);
    case Family::Gk: return sample_gk(model, rng);
    case Family::Gt: return sample_gt(model, rng);
    default:
      throw DomainError("sample_graph accepts graph families only");
  }
}

DegreeSequence sample_degrees(const ModelSpec& model, RngStream stream) {
  if (family_is_graph(model.family()))
    return degrees_of(sample_graph(model, stream));
  Xoshiro256StarStar rng(stream);
  switch (model.family()) {
    case Family::Ip: return sample_ip(model, rng);
    case Family::Bp: return sample_bp(model, rng);
    case Family::Bk: return sample_bk(model, rng);
    case Family::Bt: return sample_bt(model, rng);
    case Family::Vp: return sample_vp(model, rng);
    default: break;
  }
  throw DomainError("unhandled model family");
}

std::vector<DegreeSequence> sample_degree_stream(const ModelSpec& model,
                                                 long long trials,
                                                 RngStream base) {
  if (trials < 1) throw DomainError("trials must be at least 1");
  std::vector<DegreeSequence> out;
  out.reserve(static_cast<std::size_t>(trials));
  for (long long r = 0; r < trials; ++r) {
    out.push_back(sample_degrees(model, base.substream(
                                            static_cast<std::uint64_t>(r))));
  }
  return out;
}

}  // namespace degseq
