#ifndef DEGSEQ_SAMPLING_HPP
#define DEGSEQ_SAMPLING_HPP

#include <vector>

#include "degseq/adjacency.hpp"
#include "degseq/degree_sequence.hpp"
#include "degseq/model_spec.hpp"
#include "degseq/rng.hpp"

namespace degseq {

// Draws one graph from G_p, G_k or G_t (digraph variants via the shape).
//   G_p: each allowed cell independently with probability p.
//   G_k: a uniform k-subset of the allowed cells, via reservoir sampling.
//   G_t: column j holds a uniform t_j-subset of its allowed rows, columns
//        independent; this realizes the uniform law on matrices with
//        column sums t exactly.
BipartiteAdjacency sample_graph(const ModelSpec& model, RngStream stream);

// One draw of the degree-sequence law of any model family.  Graph families
// go through sample_graph; binomial families sample their product-binomial
// definitions directly (rejection on matching side sums for B_p, uniform
// subset counts for B_k/B_t, kernel-then-B_{p'} for V_p).
DegreeSequence sample_degrees(const ModelSpec& model, RngStream stream);

// i.i.d. draws; trial r uses stream base.stream_index + r, so results are
// independent of evaluation order and safe to parallelize by trial.
std::vector<DegreeSequence> sample_degree_stream(const ModelSpec& model,
                                                 long long trials,
                                                 RngStream base);

}  // namespace degseq

#endif
