#pragma once

#include <optional>
#include <vector>

#include "rigidline/error.hpp"

namespace rigidline {

/// Undirected edge, stored with u < v. Vertices are 1-based.
struct Edge {
  int u = 0, v = 0;
  Edge() = default;
  Edge(int a, int b);
  auto operator<=>(const Edge&) const = default;
};

/// Finite simple graph on vertices 1..n. Edges are kept in canonical
/// (lexicographic) order; every edge-indexed vector in the library uses that
/// order.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }

  /// Index of {i,j} in canonical order, or nullopt for non-edges.
  std::optional<int> edge_index(int i, int j) const;
  bool has_edge(int i, int j) const { return edge_index(i, j).has_value(); }

  int degree(int vertex) const;
  bool is_connected() const;
  bool is_complete() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace rigidline
