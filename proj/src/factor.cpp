#include "sgw/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "sgw/disjoint_set.hpp"

namespace sgw {

namespace {

// All-pairs distances of a connected graph, one BFS per vertex.
class DistanceTable {
 public:
  explicit DistanceTable(const SignedGraph& g)
      : n_(static_cast<std::size_t>(g.order())), dist_(n_ * n_) {
    if (n_ > std::numeric_limits<std::uint16_t>::max()) {
      throw Error(ErrorCode::TooLarge, "graph too large for the distance table");
    }
    for (Vertex s = 0; s < g.order(); ++s) {
      auto d = bfs_distances(g, s);
      for (std::size_t t = 0; t < n_; ++t) dist_[s * n_ + t] = static_cast<std::uint16_t>(d[t]);
    }
  }
  int operator()(Vertex a, Vertex b) const { return dist_[static_cast<std::size_t>(a) * n_ + b]; }

 private:
  std::size_t n_;
  std::vector<std::uint16_t> dist_;
};

// Edge partition into Cartesian prime factors: the transitive closure of the
// Djokovic-Winkler relation together with the relation joining two incident
// edges xy, xz that do not span exactly one chordless square. Both relations
// only ever join edges of the same prime factor.
DisjointSet product_relation(const SignedGraph& g) {
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  DisjointSet classes(m);

  DistanceTable d(g);
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex x = edges[i].u, y = edges[i].v;
    for (std::size_t j = i + 1; j < m; ++j) {
      const Vertex u = edges[j].u, v = edges[j].v;
      if (d(x, u) + d(y, v) != d(x, v) + d(y, u)) classes.unite(i, j);
    }
  }

  std::vector<int> stamp(static_cast<std::size_t>(g.order()), -1);
  int round = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    auto nx = g.neighbors(x);
    for (std::size_t a = 0; a < nx.size(); ++a) {
      const Vertex y = nx[a].vertex;
      ++round;
      for (const Neighbor& nb : g.neighbors(y)) stamp[nb.vertex] = round;
      for (std::size_t b = a + 1; b < nx.size(); ++b) {
        const Vertex z = nx[b].vertex;
        bool one_chordless_square = stamp[z] != round;
        if (one_chordless_square) {
          int others = 0;
          Vertex w = -1;
          for (const Neighbor& nb : g.neighbors(z)) {
            if (nb.vertex != x && stamp[nb.vertex] == round) {
              ++others;
              w = nb.vertex;
            }
          }
          one_chordless_square = others == 1 && !g.adjacent(x, w);
        }
        if (!one_chordless_square) classes.unite(nx[a].edge, nx[b].edge);
      }
    }
  }
  return classes;
}

[[noreturn]] void broken(const std::string& what) {
  throw Error(ErrorCode::InternalInvariantViolation, "factorization: " + what);
}

}  // namespace

OrdinaryDecomposition factorize(const SignedGraph& g) {
  if (g.size() == 0) throw Error(ErrorCode::NoEdges, "graph has no edges");
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is not connected");

  const auto& edges = g.edges();
  const int n = g.order();
  DisjointSet classes = product_relation(g);

  // Factor order: first edge of each class met by a BFS from vertex 0.
  std::vector<int> color_of_root(edges.size(), -1);
  int k = 0;
  for (Vertex x : bfs_order(g, 0)) {
    for (const Neighbor& nb : g.neighbors(x)) {
      auto root = classes.find(nb.edge);
      if (color_of_root[root] < 0) color_of_root[root] = k++;
    }
  }
  std::vector<int> edge_color(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) edge_color[e] = color_of_root[classes.find(e)];

  std::vector<SignedGraph> factors;
  std::vector<std::vector<Vertex>> coords(static_cast<std::size_t>(n),
                                          std::vector<Vertex>(static_cast<std::size_t>(k), -1));
  std::vector<int> layer_index(static_cast<std::size_t>(n));
  std::vector<Vertex> queue;
  for (int c = 0; c < k; ++c) {
    // Layer of color c through vertex 0, numbered in BFS order.
    std::fill(layer_index.begin(), layer_index.end(), -1);
    queue.assign(1, 0);
    layer_index[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Neighbor& nb : g.neighbors(queue[head])) {
        if (edge_color[nb.edge] == c && layer_index[nb.vertex] < 0) {
          layer_index[nb.vertex] = static_cast<int>(queue.size());
          queue.push_back(nb.vertex);
        }
      }
    }
    std::vector<Edge> fedges;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edge_color[e] != c) continue;
      const int a = layer_index[edges[e].u], b = layer_index[edges[e].v];
      if ((a < 0) != (b < 0)) broken("layer is not closed under its own edges");
      if (a >= 0) fedges.push_back(Edge{a, b, Sign::Positive});
    }
    factors.push_back(SignedGraph::build(static_cast<int>(queue.size()), fedges));

    // Coordinate c of u: the layer vertex in u's component of the other colors.
    std::vector<Vertex> comp_queue;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex s = 0; s < n; ++s) {
      if (seen[s]) continue;
      comp_queue.assign(1, s);
      seen[s] = 1;
      int found = -1;
      for (std::size_t head = 0; head < comp_queue.size(); ++head) {
        Vertex u = comp_queue[head];
        if (layer_index[u] >= 0) {
          if (found >= 0) broken("co-layer meets the base layer twice");
          found = layer_index[u];
        }
        for (const Neighbor& nb : g.neighbors(u)) {
          if (edge_color[nb.edge] != c && !seen[nb.vertex]) {
            seen[nb.vertex] = 1;
            comp_queue.push_back(nb.vertex);
          }
        }
      }
      if (found < 0) broken("co-layer misses the base layer");
      for (Vertex u : comp_queue) coords[u][c] = found;
    }
  }

  std::size_t expected_order = 1;
  std::size_t expected_size = 0;
  for (const auto& f : factors) expected_order *= static_cast<std::size_t>(f.order());
  for (const auto& f : factors) expected_size += f.size() * (expected_order / f.order());
  if (expected_order != static_cast<std::size_t>(n) || expected_size != edges.size()) {
    broken("factor orders/sizes do not multiply out to the input");
  }
  CoordinateSystem cs;
  try {
    cs = CoordinateSystem(factors, coords);
  } catch (const Error&) {
    broken("coordinates are not a bijection");
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int c = edge_color[e];
    auto tu = cs.tuple(edges[e].u);
    auto tv = cs.tuple(edges[e].v);
    for (int i = 0; i < k; ++i) {
      if (i != c && tu[i] != tv[i]) broken("edge changes more than one coordinate");
    }
    if (!factors[c].adjacent(tu[c], tv[c])) broken("edge is not a copy of a factor edge");
  }
  return OrdinaryDecomposition{std::move(factors), std::move(cs), std::move(edge_color)};
}

bool is_prime_ordinary(const SignedGraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is not connected");
  return factorize(g).factors.size() == 1;
}

}  // namespace sgw
