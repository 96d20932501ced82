#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sgw/error.hpp"

namespace sgw {

using Vertex = int;

/// Edge sign. The underlying values are +1 and -1 so signs multiply.
enum class Sign : std::int8_t { Positive = 1, Negative = -1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}
constexpr Sign operator-(Sign s) noexcept { return s * Sign::Negative; }
constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr bool is_negative(Sign s) noexcept { return s == Sign::Negative; }

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Sign sign = Sign::Positive;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex vertex;
  Sign sign;
  std::size_t edge;  // index into SignedGraph::edges()
};

/// Simple loopless undirected graph with a sign on every edge.
///
/// Immutable once built. Edges are kept in canonical order (u < v, then
/// lexicographic) and adjacency lists are sorted by neighbor id, so every
/// traversal that walks neighbors in storage order is deterministic.
class SignedGraph {
 public:
  SignedGraph() = default;

  /// Validates and canonicalizes. Throws Error with LoopEdge, DuplicateEdge,
  /// VertexOutOfRange or BadSign.
  static SignedGraph build(int n, std::span<const Edge> edges);

  /// Same as build() but takes raw integer signs, rejecting anything but +1/-1.
  struct RawEdge {
    Vertex u, v;
    int sign;
  };
  static SignedGraph build_raw(int n, std::span<const RawEdge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Neighbor> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;
  std::optional<Sign> sign(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return edge_index(u, v).has_value(); }

  std::size_t negative_edge_count() const;

  /// Copy of this graph with every sign replaced (indexed like edges()).
  SignedGraph with_signs(std::span<const Sign> signs) const;
  /// All-positive graph on the same underlying graph.
  SignedGraph underlying() const;
  /// Every sign flipped.
  SignedGraph negated() const;
  /// Same unsigned edge set (and order).
  bool same_underlying(const SignedGraph& other) const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;  // CSR offsets, size n_ + 1
  std::vector<Neighbor> adjacency_;
};

/// Sequence of vertices where consecutive entries are adjacent.
struct Walk {
  std::vector<Vertex> vertices;

  bool closed() const { return !vertices.empty() && vertices.front() == vertices.back(); }
  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// Product of the edge signs along the walk, with multiplicity. Throws NotAWalk.
Sign walk_sign(const SignedGraph& g, const Walk& w);

/// Connected components by BFS from the smallest unvisited vertex. Each
/// component lists its vertices in BFS order.
std::vector<std::vector<Vertex>> connected_components(const SignedGraph& g);

bool is_connected(const SignedGraph& g);

/// BFS distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const SignedGraph& g, Vertex source);

/// Vertices reachable from `source` in BFS order (neighbors ascending).
std::vector<Vertex> bfs_order(const SignedGraph& g, Vertex source);

/// Induced subgraph on `vertices`; vertex i of the result is vertices[i].
SignedGraph induced_subgraph(const SignedGraph& g, std::span<const Vertex> vertices);

/// Subgraph with `removed` deleted and the survivors renumbered in order.
SignedGraph remove_vertices(const SignedGraph& g, std::span<const Vertex> removed);

/// Relabel: vertex v of g becomes perm[v].
SignedGraph relabel(const SignedGraph& g, std::span<const Vertex> perm);

}  // namespace sgw
