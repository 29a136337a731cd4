#include "rigidline/graph.hpp"

#include <algorithm>

namespace rigidline {

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw Error(Errc::SchemaError, "loop edge at vertex " + std::to_string(a));
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw Error(Errc::SchemaError, "graph needs at least one vertex");
  for (const Edge& e : edges_) {
    if (e.u < 1 || e.v > n_)
      throw Error(Errc::SchemaError, "vertex index out of range in edge " +
                                         std::to_string(e.u) + "," + std::to_string(e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw Error(Errc::SchemaError, "duplicate edge");
}

std::optional<int> Graph::edge_index(int i, int j) const {
  if (i == j) return std::nullopt;
  Edge probe(i, j);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
  if (it != edges_.end() && *it == probe)
    return static_cast<int>(it - edges_.begin());
  return std::nullopt;
}

int Graph::degree(int vertex) const {
  int d = 0;
  for (const Edge& e : edges_)
    if (e.u == vertex || e.v == vertex) ++d;
  return d;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<int> stack = {1};
  std::vector<bool> seen(n_ + 1, false);
  seen[1] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Edge& e : edges_) {
      int other = (e.u == v) ? e.v : (e.v == v ? e.u : 0);
      if (other && !seen[other]) {
        seen[other] = true;
        ++reached;
        stack.push_back(other);
      }
    }
  }
  return reached == n_;
}

bool Graph::is_complete() const {
  return edge_count() == n_ * (n_ - 1) / 2;
}

}  // namespace rigidline
