#pragma once

// Oblivious-within-task adversarial task generators.  Every task's loss
// table is built in full before the learner sees round 1, and regeneration
// from the same seed is byte-identical.

#include <cstdint>
#include <string>
#include <vector>

#include "metabandit/domains.hpp"
#include "metabandit/linalg.hpp"
#include "metabandit/rng.hpp"

namespace metabandit {

struct MabStream {
  std::size_t d = 0, m = 0, T = 0;
  std::vector<Matrix> losses;    // one m x d table per task
  std::vector<int> true_arms;    // per-task optimal arm
  // generation metadata
  std::size_t s = 0;
  double delta = 0.0, noise = 0.0, p = -1.0;
  std::uint64_t seed = 0;
};

struct BloStream {
  std::size_t d = 0, m = 0, T = 0;  // d is the decision dimension
  std::vector<std::vector<Vec>> losses;  // per task, per round loss vector
  std::vector<std::vector<double>> offsets;  // per-round additive constants (may be empty)
  std::vector<Vec> true_opts;
  std::uint64_t seed = 0;
};

// Sparse gapped MAB stream: each task's optimal arm comes from the first s
// arms; the optimal arm's per-round loss sits in [0.5 - delta/2 - noise,
// 0.5 - delta/2] and every other arm's in [0.5 + delta/2, 0.5 + delta/2 +
// noise], so the per-round (hence per-task-average) gap is at least delta.
// Requires delta + 2 noise <= 1.
MabStream gen_sparse_mab(std::size_t d, std::size_t m, std::size_t T, std::size_t s,
                         double delta, double noise, std::uint64_t seed);

// Same stream with ceil(T^p) outlier tasks (sampled without replacement)
// whose optimal arm is uniform over all d arms.
MabStream gen_outlier_mab(std::size_t d, std::size_t m, std::size_t T, std::size_t s,
                          double delta, double noise, double p, std::uint64_t seed);

// Unit-ball BLO stream.  Per task a unit signal direction is drawn around a
// fixed global direction (kappa_dir = 0: uniform; kappa_dir >= 1e12 treated
// as the degenerate limit, exactly the global direction); per round the loss
// is the signal plus bounded perturbation, scaled so ||loss||_2 <= 1.  The
// per-task optimum is -(mean loss)/||mean loss||.
BloStream gen_sphere_blo(std::size_t d, std::size_t m, std::size_t T, double kappa_dir,
                         double noise, std::uint64_t seed);

// Directed graph with enumerated simple source->sink paths and the flow
// polytope in both edge coordinates and the reduced coordinates that strip
// the equality constraints (conservation + unit source outflow).
struct FlowGraph {
  std::size_t num_nodes = 0;
  int source = -1, sink = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> paths;  // edge-index lists
  std::vector<Vec> path_indicators;     // edge space, one per path

  // Edge-space inequality constraints: conservation at internal nodes as
  // <=-pairs plus nonnegativity per edge.
  std::vector<Constraint> constraints;

  // Affine chart x = x0 + N z of the flow affine hull; columns of N are
  // orthonormal.  Reduced constraints drop rows that vanish on the chart.
  Vec x0;
  Matrix basis;  // |E| x dz
  std::vector<Constraint> reduced_constraints;
  std::vector<Vec> reduced_vertices;  // path indicators in z coordinates

  std::size_t reduced_dim() const { return basis.cols(); }
  Vec to_edge_space(const Vec& z) const;
  Vec to_reduced(const Vec& x) const;
};

// Parse the plain-text format: "SOURCE u" and "SINK v" header lines followed
// by one "u v" edge per line (# starts a comment).  Node ids are
// nonnegative integers.
FlowGraph parse_flow_graph(const std::string& text);
FlowGraph load_flow_graph(const std::string& path);

// Build a FlowGraph from an explicit edge list.
FlowGraph make_flow_graph(const std::vector<std::pair<int, int>>& edges, int source, int sink);

// Shortest-path stream over the graph: each task's per-round edge weights
// favor a "good" path (the same path every task when shared_optimum, a
// seeded per-task pick otherwise), with seeded noise.  Losses are returned
// in reduced coordinates with per-round offsets, scaled so every path's
// loss lies in [-1, 1].
BloStream gen_shortest_path(const FlowGraph& graph, std::size_t m, std::size_t T,
                            bool shared_optimum, double noise, std::uint64_t seed);

// Unbiased path sampling from a feasible flow by greedy decomposition:
// repeatedly walk a positive-flow path and strip its bottleneck.  Returns
// the path's index in graph.paths.  E[edge indicator] equals the flow.
std::size_t sample_path_from_flow(const FlowGraph& graph, const Vec& edge_flow, SplitRng& rng);

}  // namespace metabandit
