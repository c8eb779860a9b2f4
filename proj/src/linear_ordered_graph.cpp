#include "gauss_spectra/linear_ordered_graph.hpp"

#include <algorithm>
#include <sstream>

namespace gauss_spectra {

LinearlyOrderedGraph::LinearlyOrderedGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw OutOfRange("negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n_ || u == v)
      throw OutOfRange("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") on " + std::to_string(n_) + " vertices");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool LinearlyOrderedGraph::adjacent(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::vector<int> LinearlyOrderedGraph::neighbors(int u) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges_) {
    if (a == u) out.push_back(b);
    if (b == u) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LinearlyOrderedGraph interlacement_graph(const ChordDiagram& d) {
  const int n = d.chord_count();
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) {
    auto [a1, b1] = d.endpoints(i);
    for (int j = i + 1; j <= n; ++j) {
      auto [a2, b2] = d.endpoints(j);
      // alternating endpoints: exactly one of j's endpoints inside (a1, b1)
      bool in1 = a1 < a2 && a2 < b1;
      bool in2 = a1 < b2 && b2 < b1;
      if (in1 != in2) edges.emplace_back(i, j);
    }
  }
  return LinearlyOrderedGraph(n, std::move(edges));
}

IntMatrix skew_adjacency(const LinearlyOrderedGraph& g) {
  IntMatrix m = IntMatrix::Zero(g.vertex_count(), g.vertex_count());
  for (const auto& [u, v] : g.edges()) {
    m(u - 1, v - 1) = 1;
    m(v - 1, u - 1) = -1;
  }
  return m;
}

IntMatrix adjacency_matrix(const LinearlyOrderedGraph& g) {
  IntMatrix m = IntMatrix::Zero(g.vertex_count(), g.vertex_count());
  for (const auto& [u, v] : g.edges()) {
    m(u - 1, v - 1) = 1;
    m(v - 1, u - 1) = 1;
  }
  return m;
}

LinearlyOrderedGraph delete_vertex(const LinearlyOrderedGraph& g, int v) {
  if (v < 1 || v > g.vertex_count())
    throw OutOfRange("no vertex " + std::to_string(v));
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges()) {
    if (a == v || b == v) continue;
    edges.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
  }
  return LinearlyOrderedGraph(g.vertex_count() - 1, std::move(edges));
}

LinearlyOrderedGraph add_edge(const LinearlyOrderedGraph& g, int u, int v) {
  if (u < 1 || u > g.vertex_count() || v < 1 || v > g.vertex_count() || u == v)
    throw OutOfRange("edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  if (g.adjacent(u, v))
    throw EdgeExists("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                     ") already present");
  auto edges = g.edges();
  edges.emplace_back(std::min(u, v), std::max(u, v));
  return LinearlyOrderedGraph(g.vertex_count(), std::move(edges));
}

LinearlyOrderedGraph disjoint_union(const LinearlyOrderedGraph& g1,
                                    const LinearlyOrderedGraph& g2) {
  auto edges = g1.edges();
  const int shift = g1.vertex_count();
  for (auto [a, b] : g2.edges()) edges.emplace_back(a + shift, b + shift);
  return LinearlyOrderedGraph(g1.vertex_count() + g2.vertex_count(), std::move(edges));
}

LinearlyOrderedGraph join(const LinearlyOrderedGraph& g1,
                          const LinearlyOrderedGraph& g2) {
  auto edges = disjoint_union(g1, g2).edges();
  for (int u = 1; u <= g1.vertex_count(); ++u)
    for (int v = g1.vertex_count() + 1; v <= g1.vertex_count() + g2.vertex_count(); ++v)
      edges.emplace_back(u, v);
  return LinearlyOrderedGraph(g1.vertex_count() + g2.vertex_count(), std::move(edges));
}

LinearlyOrderedGraph coalesce(const LinearlyOrderedGraph& g1, int u,
                              const LinearlyOrderedGraph& g2, int v) {
  if (u < 1 || u > g1.vertex_count())
    throw OutOfRange("no vertex " + std::to_string(u) + " in the first graph");
  if (v < 1 || v > g2.vertex_count())
    throw OutOfRange("no vertex " + std::to_string(v) + " in the second graph");
  const int n1 = g1.vertex_count();
  auto relabel = [n1, v](int w) { return n1 + (w < v ? w : w - 1); };
  auto edges = g1.edges();
  for (auto [a, b] : g2.edges()) {
    if (a == v)
      edges.emplace_back(std::min(u, relabel(b)), std::max(u, relabel(b)));
    else if (b == v)
      edges.emplace_back(std::min(u, relabel(a)), std::max(u, relabel(a)));
    else
      edges.emplace_back(relabel(a), relabel(b));
  }
  return LinearlyOrderedGraph(n1 + g2.vertex_count() - 1, std::move(edges));
}

LinearlyOrderedGraph promote(const LinearlyOrderedGraph& g, int u) {
  if (u < 1 || u > g.vertex_count())
    throw OutOfRange("no vertex " + std::to_string(u));
  auto relabel = [u](int w) { return w == u ? 1 : (w < u ? w + 1 : w); };
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size());
  for (auto [a, b] : g.edges()) edges.emplace_back(relabel(a), relabel(b));
  return LinearlyOrderedGraph(g.vertex_count(), std::move(edges));
}

LinearlyOrderedGraph complete_graph(int n) {
  if (n < 0) throw OutOfRange("negative vertex count");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  return LinearlyOrderedGraph(n, std::move(edges));
}

LinearlyOrderedGraph path_graph(int n) {
  if (n < 0) throw OutOfRange("negative vertex count");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return LinearlyOrderedGraph(n, std::move(edges));
}

LinearlyOrderedGraph edgeless_graph(int n) {
  return LinearlyOrderedGraph(n, {});
}

std::string to_text(const LinearlyOrderedGraph& g) {
  std::ostringstream os;
  os << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

LinearlyOrderedGraph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  if (!(in >> n)) throw OutOfRange("missing vertex count");
  std::vector<std::pair<int, int>> edges;
  int u, v;
  while (in >> u >> v) edges.emplace_back(u, v);
  return LinearlyOrderedGraph(n, std::move(edges));
}

}  // namespace gauss_spectra
