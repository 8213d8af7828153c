#include "metabandit/environments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace metabandit {

namespace {
constexpr std::size_t kPathCap = 10000;
}

MabStream gen_sparse_mab(std::size_t d, std::size_t m, std::size_t T, std::size_t s,
                         double delta, double noise, std::uint64_t seed) {
  if (s < 1 || s > d) throw std::invalid_argument("gen_sparse_mab: need 1 <= s <= d");
  if (delta <= 0.0 || delta >= 1.0) throw std::invalid_argument("gen_sparse_mab: delta in (0,1)");
  if (noise < 0.0 || delta + 2.0 * noise > 1.0)
    throw std::invalid_argument("gen_sparse_mab: need delta + 2*noise <= 1");
  MabStream st;
  st.d = d;
  st.m = m;
  st.T = T;
  st.s = s;
  st.delta = delta;
  st.noise = noise;
  st.seed = seed;
  SplitRng root(seed);
  for (std::size_t t = 0; t < T; ++t) {
    SplitRng trng = root.fork(t);
    const int opt = static_cast<int>(trng.uniform_int(s));
    Matrix loss(m, d);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t a = 0; a < d; ++a) {
        // The optimal arm only moves down, the rest only up, so the
        // realized per-round gap never drops below delta.
        const double u = trng.uniform();
        if (static_cast<int>(a) == opt)
          loss(i, a) = 0.5 - 0.5 * delta - noise * u;
        else
          loss(i, a) = 0.5 + 0.5 * delta + noise * u;
      }
    }
    st.losses.push_back(std::move(loss));
    st.true_arms.push_back(opt);
  }
  return st;
}

MabStream gen_outlier_mab(std::size_t d, std::size_t m, std::size_t T, std::size_t s,
                          double delta, double noise, double p, std::uint64_t seed) {
  if (p < 0.0 || p >= 1.0) throw std::invalid_argument("gen_outlier_mab: p in [0,1)");
  MabStream st = gen_sparse_mab(d, m, T, s, delta, noise, seed);
  st.p = p;
  const std::size_t n_out =
      std::min<std::size_t>(T, static_cast<std::size_t>(
                                   std::ceil(std::pow(static_cast<double>(T), p))));
  // Seeded sampling without replacement (partial Fisher-Yates).
  SplitRng orng = SplitRng(seed).fork(0x0071135ULL);
  std::vector<std::size_t> idx(T);
  for (std::size_t i = 0; i < T; ++i) idx[i] = i;
  for (std::size_t i = 0; i < n_out; ++i)
    std::swap(idx[i], idx[i + orng.uniform_int(T - i)]);
  SplitRng root(seed);
  for (std::size_t i = 0; i < n_out; ++i) {
    const std::size_t t = idx[i];
    SplitRng trng = root.fork(t).fork(1);  // sub-stream so base losses regenerate cleanly
    const int opt = static_cast<int>(trng.uniform_int(d));
    Matrix loss(m, d);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t a = 0; a < d; ++a) {
        const double u = trng.uniform();
        if (static_cast<int>(a) == opt)
          loss(r, a) = 0.5 - 0.5 * delta - noise * u;
        else
          loss(r, a) = 0.5 + 0.5 * delta + noise * u;
      }
    }
    st.losses[t] = std::move(loss);
    st.true_arms[t] = opt;
  }
  return st;
}

BloStream gen_sphere_blo(std::size_t d, std::size_t m, std::size_t T, double kappa_dir,
                         double noise, std::uint64_t seed) {
  if (kappa_dir < 0.0) throw std::invalid_argument("gen_sphere_blo: kappa_dir >= 0");
  BloStream st;
  st.d = d;
  st.m = m;
  st.T = T;
  st.seed = seed;
  SplitRng root(seed);
  for (std::size_t t = 0; t < T; ++t) {
    SplitRng trng = root.fork(t);
    Vec dir(d, 0.0);
    if (kappa_dir >= 1e12) {
      dir[0] = 1.0;
    } else {
      dir[0] = kappa_dir;
      for (std::size_t i = 0; i < d; ++i) dir[i] += trng.normal();
      const double n = norm2(dir);
      if (n < 1e-12) {
        dir.assign(d, 0.0);
        dir[0] = 1.0;
      } else {
        for (double& v : dir) v /= n;
      }
    }
    std::vector<Vec> rounds;
    Vec mean(d, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      Vec l(d);
      for (std::size_t r = 0; r < d; ++r)
        l[r] = dir[r] + noise * (2.0 * trng.uniform() - 1.0);
      const double n = norm2(l);
      const double scale = 0.999 / std::max(1.0, n);
      for (std::size_t r = 0; r < d; ++r) {
        l[r] *= scale;
        mean[r] += l[r];
      }
      rounds.push_back(std::move(l));
    }
    const double mn = norm2(mean);
    Vec opt(d, 0.0);
    if (mn > 0.0)
      for (std::size_t r = 0; r < d; ++r) opt[r] = -mean[r] / mn;
    st.losses.push_back(std::move(rounds));
    st.true_opts.push_back(std::move(opt));
  }
  return st;
}

Vec FlowGraph::to_edge_space(const Vec& z) const {
  Vec x = basis.multiply(z);
  for (std::size_t e = 0; e < x.size(); ++e) x[e] += x0[e];
  return x;
}

Vec FlowGraph::to_reduced(const Vec& x) const {
  Vec c(x.size());
  for (std::size_t e = 0; e < x.size(); ++e) c[e] = x[e] - x0[e];
  return basis.multiply_transposed(c);
}

namespace {

void enumerate_paths(const std::vector<std::vector<std::pair<int, int>>>& adj, int node,
                     int sink, std::vector<int>& stack, std::vector<bool>& visited,
                     std::vector<std::vector<int>>& out) {
  if (node == sink) {
    if (out.size() >= kPathCap) throw std::runtime_error("FlowGraph: path cap exceeded");
    out.push_back(stack);
    return;
  }
  for (const auto& [next, eidx] : adj[node]) {
    if (visited[next]) continue;
    visited[next] = true;
    stack.push_back(eidx);
    enumerate_paths(adj, next, sink, stack, visited, out);
    stack.pop_back();
    visited[next] = false;
  }
}

// Orthonormal basis of the nullspace of A (rows x cols) by Gaussian
// elimination and Gram-Schmidt.
Matrix nullspace_basis(Matrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    for (std::size_t r = row + 1; r < rows; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (std::abs(a(piv, col)) < 1e-10) continue;
    for (std::size_t c = 0; c < cols; ++c) std::swap(a(row, c), a(piv, c));
    const double inv = 1.0 / a(row, col);
    for (std::size_t c = 0; c < cols; ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row) continue;
      const double f = a(r, col);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < cols; ++c) a(r, c) -= f * a(row, c);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, 0.0);
    v[f] = 1.0;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a(r, f);
    // Gram-Schmidt against what we have.
    for (const Vec& b : basis) {
      const double proj = dot(v, b);
      for (std::size_t i = 0; i < cols; ++i) v[i] -= proj * b[i];
    }
    const double n = norm2(v);
    if (n < 1e-12) continue;
    for (double& x : v) x /= n;
    basis.push_back(std::move(v));
  }
  Matrix n(cols, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < cols; ++i) n(i, j) = basis[j][i];
  return n;
}

}  // namespace

FlowGraph make_flow_graph(const std::vector<std::pair<int, int>>& edges_in, int source,
                          int sink) {
  if (edges_in.empty()) throw std::invalid_argument("make_flow_graph: no edges");
  int max_node = std::max(source, sink);
  for (const auto& [u, v] : edges_in) {
    if (u < 0 || v < 0) throw std::invalid_argument("make_flow_graph: negative node id");
    max_node = std::max({max_node, u, v});
  }
  const std::size_t n = static_cast<std::size_t>(max_node) + 1;

  // Enumerate simple paths on the raw edge list first.
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (std::size_t e = 0; e < edges_in.size(); ++e)
    adj[edges_in[e].first].push_back({edges_in[e].second, static_cast<int>(e)});
  std::vector<std::vector<int>> raw_paths;
  {
    std::vector<int> stack;
    std::vector<bool> visited(n, false);
    visited[source] = true;
    enumerate_paths(adj, source, sink, stack, visited, raw_paths);
  }
  if (raw_paths.empty()) throw std::runtime_error("make_flow_graph: no source->sink path");

  // Keep only edges that some path uses; the rest carry zero flow in every
  // feasible point of the (unit-flow) polytope and would pin the analytic
  // boundary.
  std::vector<bool> used(edges_in.size(), false);
  for (const auto& p : raw_paths)
    for (int e : p) used[e] = true;
  std::vector<int> remap(edges_in.size(), -1);
  FlowGraph g;
  g.num_nodes = n;
  g.source = source;
  g.sink = sink;
  for (std::size_t e = 0; e < edges_in.size(); ++e) {
    if (!used[e]) continue;
    remap[e] = static_cast<int>(g.edges.size());
    g.edges.push_back(edges_in[e]);
  }
  const std::size_t E = g.edges.size();
  for (auto& p : raw_paths) {
    std::vector<int> q;
    for (int e : p) q.push_back(remap[e]);
    g.paths.push_back(std::move(q));
  }
  for (const auto& p : g.paths) {
    Vec ind(E, 0.0);
    for (int e : p) ind[e] = 1.0;
    g.path_indicators.push_back(std::move(ind));
  }

  // Inequality constraints: conservation pairs at internal nodes touched by
  // an edge, plus x_e >= 0.
  std::set<int> internal;
  for (const auto& [u, v] : g.edges) {
    if (u != source && u != sink) internal.insert(u);
    if (v != source && v != sink) internal.insert(v);
  }
  std::vector<Vec> eq_rows;  // homogeneous parts of the equality system
  Vec eq_rhs;
  for (int w : internal) {
    Vec a(E, 0.0);
    for (std::size_t e = 0; e < E; ++e) {
      if (g.edges[e].first == w) a[e] += 1.0;
      if (g.edges[e].second == w) a[e] -= 1.0;
    }
    g.constraints.push_back({a, 0.0});
    Vec na(E);
    for (std::size_t e = 0; e < E; ++e) na[e] = -a[e];
    g.constraints.push_back({na, 0.0});
    eq_rows.push_back(a);
    eq_rhs.push_back(0.0);
  }
  for (std::size_t e = 0; e < E; ++e) {
    Vec a(E, 0.0);
    a[e] = -1.0;
    g.constraints.push_back({a, 0.0});
  }
  {
    Vec a(E, 0.0);
    for (std::size_t e = 0; e < E; ++e) {
      if (g.edges[e].first == source) a[e] += 1.0;
      if (g.edges[e].second == source) a[e] -= 1.0;
    }
    eq_rows.push_back(a);
    eq_rhs.push_back(1.0);
  }

  // Chart anchor: the uniform mixture of path flows is strictly positive on
  // every kept edge.
  g.x0.assign(E, 0.0);
  for (const Vec& p : g.path_indicators)
    for (std::size_t e = 0; e < E; ++e) g.x0[e] += p[e];
  for (double& v : g.x0) v /= static_cast<double>(g.path_indicators.size());

  Matrix a_eq(eq_rows.size(), E);
  for (std::size_t r = 0; r < eq_rows.size(); ++r)
    for (std::size_t c = 0; c < E; ++c) a_eq(r, c) = eq_rows[r][c];
  g.basis = nullspace_basis(a_eq);
  if (g.basis.cols() == 0)
    throw std::runtime_error("make_flow_graph: degenerate polytope (single point)");

  for (const auto& c : g.constraints) {
    Vec az = g.basis.multiply_transposed(c.a);
    const double bz = c.b - dot(c.a, g.x0);
    if (norm2(az) < 1e-10) {
      if (bz < -1e-9) throw std::runtime_error("make_flow_graph: inconsistent constraint");
      continue;  // constraint vanishes on the chart
    }
    g.reduced_constraints.push_back({std::move(az), bz});
  }
  for (const Vec& p : g.path_indicators) g.reduced_vertices.push_back(g.to_reduced(p));
  return g;
}

FlowGraph parse_flow_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int source = -1, sink = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "SOURCE") {
      if (!(ls >> source)) throw std::runtime_error("parse_flow_graph: bad SOURCE line");
    } else if (tok == "SINK") {
      if (!(ls >> sink)) throw std::runtime_error("parse_flow_graph: bad SINK line");
    } else {
      int u = std::stoi(tok), v;
      if (!(ls >> v)) throw std::runtime_error("parse_flow_graph: bad edge line");
      edges.push_back({u, v});
    }
  }
  if (source < 0 || sink < 0)
    throw std::runtime_error("parse_flow_graph: missing SOURCE or SINK");
  return make_flow_graph(edges, source, sink);
}

FlowGraph load_flow_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_flow_graph: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_flow_graph(ss.str());
}

BloStream gen_shortest_path(const FlowGraph& graph, std::size_t m, std::size_t T,
                            bool shared_optimum, double noise, std::uint64_t seed) {
  const std::size_t E = graph.edges.size();
  std::size_t max_len = 0;
  for (const auto& p : graph.paths) max_len = std::max(max_len, p.size());
  // Keep the favored path strictly optimal per round: its edges stay below
  // noise_eff while every other edge stays near 1.
  const double noise_eff = std::min(noise, 0.4 / static_cast<double>(max_len));
  const double scale = 0.999 / static_cast<double>(max_len);

  BloStream st;
  st.d = graph.reduced_dim();
  st.m = m;
  st.T = T;
  st.seed = seed;
  SplitRng root(seed);
  const std::size_t shared_pick =
      SplitRng(seed).fork(0x600dULL).uniform_int(graph.paths.size());
  for (std::size_t t = 0; t < T; ++t) {
    SplitRng trng = root.fork(t);
    const std::size_t good =
        shared_optimum ? shared_pick : static_cast<std::size_t>(trng.uniform_int(graph.paths.size()));
    std::vector<bool> on_good(E, false);
    for (int e : graph.paths[good]) on_good[e] = true;

    std::vector<Vec> rounds;
    std::vector<double> offsets;
    Vec weight_sum(E, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      Vec w(E);
      for (std::size_t e = 0; e < E; ++e) {
        const double u = trng.uniform();
        w[e] = (on_good[e] ? noise_eff * u : 1.0 - noise_eff * u) * scale;
        weight_sum[e] += w[e];
      }
      offsets.push_back(dot(w, graph.x0));
      rounds.push_back(graph.basis.multiply_transposed(w));
    }
    // Per-task optimum: the path minimizing the summed weights (exact).
    std::size_t best = 0;
    double best_val = dot(weight_sum, graph.path_indicators[0]);
    for (std::size_t p = 1; p < graph.paths.size(); ++p) {
      const double v = dot(weight_sum, graph.path_indicators[p]);
      if (v < best_val) {
        best = p;
        best_val = v;
      }
    }
    st.losses.push_back(std::move(rounds));
    st.offsets.push_back(std::move(offsets));
    st.true_opts.push_back(graph.reduced_vertices[best]);
  }
  return st;
}

std::size_t sample_path_from_flow(const FlowGraph& graph, const Vec& edge_flow, SplitRng& rng) {
  const std::size_t E = graph.edges.size();
  if (edge_flow.size() != E) throw std::invalid_argument("sample_path_from_flow: size mismatch");
  for (const auto& c : graph.constraints)
    if (dot(c.a, edge_flow) > c.b + 1e-8)
      throw std::runtime_error("sample_path_from_flow: infeasible flow");

  Vec residual = edge_flow;
  std::vector<std::pair<std::size_t, double>> pieces;  // (path index, weight)
  double total = 0.0;
  for (std::size_t guard = 0; guard <= E; ++guard) {
    // Walk a positive-residual path from the source, greediest edge first.
    std::vector<int> walk;
    int node = graph.source;
    std::vector<bool> seen(graph.num_nodes, false);
    seen[node] = true;
    while (node != graph.sink) {
      int pick = -1;
      double best = 1e-9;
      for (std::size_t e = 0; e < E; ++e)
        if (graph.edges[e].first == node && !seen[graph.edges[e].second] &&
            residual[e] > best) {
          best = residual[e];
          pick = static_cast<int>(e);
        }
      if (pick < 0) break;
      walk.push_back(pick);
      node = graph.edges[pick].second;
      seen[node] = true;
    }
    if (node != graph.sink || walk.empty()) break;
    double bottleneck = residual[walk[0]];
    for (int e : walk) bottleneck = std::min(bottleneck, residual[e]);
    for (int e : walk) residual[e] -= bottleneck;

    // Identify the walked path in the enumerated list.
    std::size_t idx = graph.paths.size();
    for (std::size_t p = 0; p < graph.paths.size(); ++p)
      if (graph.paths[p] == walk) {
        idx = p;
        break;
      }
    if (idx == graph.paths.size())
      throw std::runtime_error("sample_path_from_flow: walked an unenumerated path");
    pieces.push_back({idx, bottleneck});
    total += bottleneck;
  }
  if (total < 1.0 - 1e-6)
    throw std::runtime_error("sample_path_from_flow: flow does not decompose to unit mass");

  const double u = rng.uniform() * total;
  double acc = 0.0;
  for (const auto& [idx, wgt] : pieces) {
    acc += wgt;
    if (u < acc) return idx;
  }
  return pieces.back().first;
}

}  // namespace metabandit
