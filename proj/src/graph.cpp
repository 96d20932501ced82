#include "sgw/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace sgw {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::BadSign: return "BadSign";
    case ErrorCode::NotAWalk: return "NotAWalk";
    case ErrorCode::DifferentUnderlyingGraph: return "DifferentUnderlyingGraph";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::NotAGrid: return "NotAGrid";
    case ErrorCode::TooManyRows: return "TooManyRows";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "Unknown";
}

SignedGraph SignedGraph::build(int n, std::span<const Edge> edges) {
  if (n < 0) throw Error(ErrorCode::BadParameter, "negative vertex count");
  SignedGraph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") with n=" +
                      std::to_string(n));
    }
    if (e.u == e.v) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(e.u));
    if (e.sign != Sign::Positive && e.sign != Sign::Negative) {
      throw Error(ErrorCode::BadSign, "sign must be +1 or -1");
    }
    g.edges_.push_back(Edge{std::min(e.u, e.v), std::max(e.u, e.v), e.sign});
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < g.edges_.size(); ++i) {
    if (g.edges_[i].u == g.edges_[i - 1].u && g.edges_[i].v == g.edges_[i - 1].v) {
      throw Error(ErrorCode::DuplicateEdge, "edge (" + std::to_string(g.edges_[i].u) + "," +
                                                std::to_string(g.edges_[i].v) + ") repeated");
    }
  }

  std::vector<std::size_t> degree(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adjacency_.resize(2 * g.edges_.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    const Edge& e = g.edges_[i];
    g.adjacency_[fill[e.u]++] = Neighbor{e.v, e.sign, i};
    g.adjacency_[fill[e.v]++] = Neighbor{e.u, e.sign, i};
  }
  for (int v = 0; v < n; ++v) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
  return g;
}

SignedGraph SignedGraph::build_raw(int n, std::span<const RawEdge> edges) {
  std::vector<Edge> typed;
  typed.reserve(edges.size());
  for (const RawEdge& e : edges) {
    if (e.sign != 1 && e.sign != -1) {
      throw Error(ErrorCode::BadSign, "sign " + std::to_string(e.sign) + " on edge (" +
                                          std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    typed.push_back(Edge{e.u, e.v, e.sign == 1 ? Sign::Positive : Sign::Negative});
  }
  return build(n, typed);
}

std::span<const Neighbor> SignedGraph::neighbors(Vertex v) const {
  if (v < 0 || v >= n_) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  return std::span<const Neighbor>(adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::optional<std::size_t> SignedGraph::edge_index(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return std::nullopt;
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                             [](const Neighbor& a, Vertex x) { return a.vertex < x; });
  if (it == nbrs.end() || it->vertex != v) return std::nullopt;
  return it->edge;
}

std::optional<Sign> SignedGraph::sign(Vertex u, Vertex v) const {
  auto idx = edge_index(u, v);
  if (!idx) return std::nullopt;
  return edges_[*idx].sign;
}

std::size_t SignedGraph::negative_edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return is_negative(e.sign); }));
}

SignedGraph SignedGraph::with_signs(std::span<const Sign> signs) const {
  if (signs.size() != edges_.size()) {
    throw Error(ErrorCode::BadParameter, "sign vector length does not match edge count");
  }
  SignedGraph g = *this;
  for (std::size_t i = 0; i < g.edges_.size(); ++i) g.edges_[i].sign = signs[i];
  for (Neighbor& nb : g.adjacency_) nb.sign = signs[nb.edge];
  return g;
}

SignedGraph SignedGraph::underlying() const {
  std::vector<Sign> signs(edges_.size(), Sign::Positive);
  return with_signs(signs);
}

SignedGraph SignedGraph::negated() const {
  std::vector<Sign> signs;
  signs.reserve(edges_.size());
  for (const Edge& e : edges_) signs.push_back(-e.sign);
  return with_signs(signs);
}

bool SignedGraph::same_underlying(const SignedGraph& other) const {
  if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u != other.edges_[i].u || edges_[i].v != other.edges_[i].v) return false;
  }
  return true;
}

Sign walk_sign(const SignedGraph& g, const Walk& w) {
  Sign s = Sign::Positive;
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
    auto e = g.sign(w.vertices[i], w.vertices[i + 1]);
    if (!e) {
      throw Error(ErrorCode::NotAWalk, "no edge between " + std::to_string(w.vertices[i]) +
                                           " and " + std::to_string(w.vertices[i + 1]));
    }
    s = s * *e;
  }
  if (w.vertices.size() == 1 && (w.vertices[0] < 0 || w.vertices[0] >= g.order())) {
    throw Error(ErrorCode::NotAWalk, "vertex out of range");
  }
  return s;
}

std::vector<Vertex> bfs_order(const SignedGraph& g, Vertex source) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> order{source};
  seen[source] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const Neighbor& nb : g.neighbors(order[head])) {
      if (!seen[nb.vertex]) {
        seen[nb.vertex] = 1;
        order.push_back(nb.vertex);
      }
    }
  }
  return order;
}

std::vector<int> bfs_distances(const SignedGraph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (const Neighbor& nb : g.neighbors(u)) {
      if (dist[nb.vertex] < 0) {
        dist[nb.vertex] = dist[u] + 1;
        queue.push(nb.vertex);
      }
    }
  }
  return dist;
}

std::vector<std::vector<Vertex>> connected_components(const SignedGraph& g) {
  std::vector<std::vector<Vertex>> components;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    auto comp = bfs_order(g, s);
    for (Vertex v : comp) seen[v] = 1;
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_connected(const SignedGraph& g) {
  return g.order() == 0 || bfs_order(g, 0).size() == static_cast<std::size_t>(g.order());
}

SignedGraph induced_subgraph(const SignedGraph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.push_back(Edge{index[e.u], index[e.v], e.sign});
  }
  return SignedGraph::build(static_cast<int>(vertices.size()), edges);
}

SignedGraph remove_vertices(const SignedGraph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : removed) gone.at(v) = 1;
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!gone[v]) kept.push_back(v);
  }
  return induced_subgraph(g, kept);
}

SignedGraph relabel(const SignedGraph& g, std::span<const Vertex> perm) {
  if (perm.size() != static_cast<std::size_t>(g.order())) {
    throw Error(ErrorCode::BadParameter, "permutation length does not match order");
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.push_back(Edge{perm[e.u], perm[e.v], e.sign});
  return SignedGraph::build(g.order(), edges);
}

}  // namespace sgw
