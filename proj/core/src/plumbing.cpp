#include "slc/plumbing.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "slc/error.hpp"

namespace slc {

PlumbingGraph::PlumbingGraph(std::vector<int> weights, std::vector<Edge> edges)
    : weights_(std::move(weights)), edges_(std::move(edges)) {
  const std::size_t n = weights_.size();
  if (n == 0) throw Error(ErrorCode::InvalidGraph, "graph has no vertices");
  for (int w : weights_) {
    if (w < 2) throw Error(ErrorCode::InvalidGraph, "vertex weight magnitude must be >= 2");
  }

  std::map<Edge, int> multiplicity;
  for (auto& [u, v] : edges_) {
    if (u >= n || v >= n) throw Error(ErrorCode::InvalidGraph, "edge endpoint out of range");
    if (u == v && n != 1) {
      throw Error(ErrorCode::InvalidGraph, "loops are only allowed on a one-vertex graph");
    }
    ++multiplicity[{std::min(u, v), std::max(u, v)}];
  }
  for (const auto& [e, mult] : multiplicity) {
    if (mult == 1) continue;
    const bool closes_two_cycle = n == 2 && e.first != e.second && mult == 2;
    if (!closes_two_cycle) throw Error(ErrorCode::InvalidGraph, "unexpected multi-edge");
  }

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v] : edges_) parent[find(u)] = find(v);
  for (std::size_t v = 1; v < n; ++v) {
    if (find(v) != find(0)) throw Error(ErrorCode::InvalidGraph, "graph is not connected");
  }
}

bool PlumbingGraph::has_loop() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.first == e.second; });
}

IntersectionForm intersection_matrix(const PlumbingGraph& g) {
  if (g.has_loop()) {
    throw Error(ErrorCode::LoopUnsupported,
                "nodal one-vertex graph: use the cusp monodromy instead");
  }
  const std::size_t n = g.vertex_count();
  IntMatrix m(n, n);
  for (std::size_t v = 0; v < n; ++v) m(v, v) = -g.weights()[v];
  for (const auto& [u, v] : g.edges()) {
    m(u, v) += 1;
    m(v, u) += 1;
  }
  return {std::move(m)};
}

bool is_negative_definite(const IntersectionForm& f) {
  if (!f.matrix.is_symmetric()) {
    throw Error(ErrorCode::InvalidMatrix, "intersection form must be symmetric");
  }
  auto minors = leading_principal_minors(f.matrix);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const int expected = (k % 2 == 0) ? -1 : 1;
    if (sgn(minors[k]) != expected) return false;
  }
  return true;
}

AbGroup discriminant_group(const PlumbingGraph& g) {
  return cokernel_torsion(intersection_matrix(g).matrix);
}

PlumbingGraph quotient_cusp_graph(std::span<const int> e) {
  const std::size_t k = e.size();
  if (k < 2) throw Error(ErrorCode::InvalidQuotientCuspData, "quotient-cusp data needs k >= 2");
  if (std::any_of(e.begin(), e.end(), [](int x) { return x < 2; })) {
    throw Error(ErrorCode::InvalidQuotientCuspData, "quotient-cusp entries must be >= 2");
  }
  if (std::all_of(e.begin(), e.end(), [](int x) { return x == 2; })) {
    throw Error(ErrorCode::InvalidQuotientCuspData, "quotient-cusp data needs some entry > 2");
  }
  std::vector<int> weights(e.begin(), e.end());
  weights.insert(weights.end(), 4, 2);
  std::vector<PlumbingGraph::Edge> edges;
  for (std::size_t i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, k);
  edges.emplace_back(0, k + 1);
  edges.emplace_back(k - 1, k + 2);
  edges.emplace_back(k - 1, k + 3);
  return PlumbingGraph(std::move(weights), std::move(edges));
}

PlumbingGraph a_chain(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidGraph, "A_n chain needs n >= 1");
  std::vector<PlumbingGraph::Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return PlumbingGraph(std::vector<int>(n, 2), std::move(edges));
}

}  // namespace slc
