#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gauss_spectra/chord_diagram.hpp"
#include "gauss_spectra/errors.hpp"

namespace gauss_spectra {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

// Simple graph whose vertices carry the linear order 1..n.  Edges are stored
// as (u, v) with u < v; the order is what orients the skew-adjacency matrix.
class LinearlyOrderedGraph {
public:
  LinearlyOrderedGraph() = default;
  LinearlyOrderedGraph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int u, int v) const;
  std::vector<int> neighbors(int u) const;

  friend bool operator==(const LinearlyOrderedGraph& a, const LinearlyOrderedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(const LinearlyOrderedGraph& a, const LinearlyOrderedGraph& b) {
    return !(a == b);
  }

private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // normalized u < v, sorted
};

// Chords u, v interlace when their endpoints alternate around the circle.
LinearlyOrderedGraph interlacement_graph(const ChordDiagram& d);

// Skew-adjacency: +1 at (u, v) for an edge with u < v, -1 mirrored, 0 else.
IntMatrix skew_adjacency(const LinearlyOrderedGraph& g);

// Plain symmetric 0/1 adjacency.
IntMatrix adjacency_matrix(const LinearlyOrderedGraph& g);

// Removes vertex v and closes the gap in the ordering.
LinearlyOrderedGraph delete_vertex(const LinearlyOrderedGraph& g, int v);

LinearlyOrderedGraph add_edge(const LinearlyOrderedGraph& g, int u, int v);

// g2's vertices are shifted above g1's.
LinearlyOrderedGraph disjoint_union(const LinearlyOrderedGraph& g1,
                                    const LinearlyOrderedGraph& g2);

// Disjoint union plus all edges between the two sides.
LinearlyOrderedGraph join(const LinearlyOrderedGraph& g1,
                          const LinearlyOrderedGraph& g2);

// Identifies u in g1 with v in g2.  The merged vertex keeps label u; the rest
// of g2 is appended above g1 preserving its relative order.
LinearlyOrderedGraph coalesce(const LinearlyOrderedGraph& g1, int u,
                              const LinearlyOrderedGraph& g2, int v);

// Moves vertex u to the front of the order (label 1), keeping its
// neighborhood; labels previously below u shift up by one.
LinearlyOrderedGraph promote(const LinearlyOrderedGraph& g, int u);

LinearlyOrderedGraph complete_graph(int n);
LinearlyOrderedGraph path_graph(int n);      // edges {i, i+1}
LinearlyOrderedGraph edgeless_graph(int n);

// Text form: first line the vertex count, then one "u v" edge per line.
std::string to_text(const LinearlyOrderedGraph& g);
LinearlyOrderedGraph graph_from_text(const std::string& text);

}  // namespace gauss_spectra
