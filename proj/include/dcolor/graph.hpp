#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "dcolor/types.hpp"

namespace dcolor {

// Undirected adjacency sets kept as sorted vectors. Edges are appended freely
// and normalized by finalize(); queries require a finalized graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  std::size_t n() const { return adj_.size(); }

  void add_edge(Vertex u, Vertex v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    finalized_ = false;
  }

  // Adds a directed half; callers add both halves for undirected stars.
  void add_arc(Vertex u, Vertex v) {
    adj_[u].push_back(v);
    finalized_ = false;
  }

  void finalize() {
    edges_ = 0;
    for (auto& a : adj_) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      edges_ += a.size();
    }
    edges_ /= 2;
    finalized_ = true;
  }

  bool finalized() const { return finalized_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  bool has_edge(Vertex u, Vertex v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  std::size_t edge_count() const { return edges_; }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& a : adj_) d = std::max(d, a.size());
    return d;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    g.finalize();
    return g;
  }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edges_ = 0;
  bool finalized_ = true;
};

// |A ∩ B| for sorted spans.
inline std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::size_t i = 0, j = 0, count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace dcolor
