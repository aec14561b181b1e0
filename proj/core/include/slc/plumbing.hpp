#pragma once

// Plumbing (resolution) graphs of rational curves and their intersection
// forms. Weights are magnitudes: a vertex with weight e is a curve of
// self-intersection -e, matching the cusp module.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "slc/arith.hpp"

namespace slc {

class PlumbingGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  /// Throws InvalidGraph unless: at least one vertex, every weight >= 2,
  /// edge endpoints in range, connected, loops only on a one-vertex graph,
  /// and parallel edges only as the double edge closing a two-vertex cycle.
  PlumbingGraph(std::vector<int> weights, std::vector<Edge> edges);

  std::span<const int> weights() const noexcept { return weights_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return weights_.size(); }
  bool has_loop() const noexcept;

 private:
  std::vector<int> weights_;
  std::vector<Edge> edges_;
};

/// Symmetric matrix with diagonal -e_v and off-diagonal entry (u, v) equal to
/// the number of edges joining u and v.
struct IntersectionForm {
  IntMatrix matrix;
};

/// Throws LoopUnsupported for a nodal one-vertex graph; use the cusp
/// monodromy for those.
IntersectionForm intersection_matrix(const PlumbingGraph& g);

/// Leading principal minors alternate in sign starting negative. Throws
/// InvalidMatrix if the matrix is not symmetric.
bool is_negative_definite(const IntersectionForm& f);

/// Torsion of coker of the intersection matrix (H_1 of the link for trees).
AbGroup discriminant_group(const PlumbingGraph& g);

/// Quotient-cusp resolution graph: chain e_1 .. e_k (vertices 0..k-1), two
/// weight-2 leaves on vertex 0 (vertices k, k+1) and two on vertex k-1
/// (vertices k+2, k+3). Throws InvalidQuotientCuspData unless k >= 2, all
/// e_i >= 2 and some e_j > 2.
PlumbingGraph quotient_cusp_graph(std::span<const int> e);

/// Chain of n vertices of weight 2 (the A_n configuration).
PlumbingGraph a_chain(std::size_t n);

}  // namespace slc
