#include "sgw/s_factor.hpp"

#include <string>

#include "sgw/factor.hpp"

namespace sgw {

namespace {

[[noreturn]] void broken(const std::string& what) {
  throw Error(ErrorCode::InternalInvariantViolation, "s-decomposition: " + what);
}

// Groups of ordinary factors produced by the merger, numbered by smallest member.
struct Grouping {
  std::vector<int> group_of_factor;
  std::vector<std::vector<int>> members;  // ascending factor indices
};

Grouping group_factors(ColorMerger& merger) {
  Grouping out;
  const std::size_t k = merger.size();
  out.group_of_factor.assign(k, -1);
  std::vector<int> group_of_root(k, -1);
  for (std::size_t f = 0; f < k; ++f) {
    auto root = merger.find(f);
    if (group_of_root[root] < 0) {
      group_of_root[root] = static_cast<int>(out.members.size());
      out.members.emplace_back();
    }
    out.group_of_factor[f] = group_of_root[root];
    out.members[group_of_root[root]].push_back(static_cast<int>(f));
  }
  return out;
}

}  // namespace

SDecomposition s_decompose(const SignedGraph& g, DecomposeTrace* trace) {
  const OrdinaryDecomposition ordinary = factorize(g);
  const CoordinateSystem& oc = ordinary.coords;
  const std::size_t k = oc.factor_count();
  const auto& edges = g.edges();
  const int n = g.order();

  std::vector<Vertex> scratch(k, 0);
  const Vertex base = oc.vertex_of(scratch);
  const std::vector<Vertex> order = bfs_order(g, base);
  const std::vector<int> dist = bfs_distances(g, base);

  std::vector<Sign> sign(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) sign[e] = edges[e].sign;
  std::vector<char> decided(static_cast<std::size_t>(n), 0);  // the set S
  std::vector<char> treated(edges.size(), 0);
  SwitchSet switch_set(n);
  ColorMerger merger(k);
  if (trace) {
    *trace = DecomposeTrace{};
    trace->ordinary_factor_count = k;
  }

  // Projection of x onto the current layer of `root` through the base vertex.
  auto project = [&](Vertex x, std::size_t root) {
    auto t = oc.tuple(x);
    for (std::size_t i = 0; i < k; ++i) scratch[i] = merger.find(i) == root ? t[i] : 0;
    return oc.vertex_of(scratch);
  };

  for (Vertex x : order) {
    decided[x] = 1;
    for (const Neighbor& nb : g.neighbors(x)) {
      if (treated[nb.edge]) continue;
      const Vertex y = nb.vertex;
      const int color = ordinary.edge_color[nb.edge];
      const std::size_t root = merger.find(static_cast<std::size_t>(color));
      const auto image = g.edge_index(project(x, root), project(y, root));
      if (!image) broken("projection of an edge is not an edge");
      const bool agree = sign[nb.edge] == sign[*image];

      SweepBranch branch;
      if (!agree && !decided[y]) {
        for (const Neighbor& ny : g.neighbors(y)) sign[ny.edge] = -sign[ny.edge];
        switch_set.toggle(y);
        decided[y] = 1;
        branch = SweepBranch::SwitchAndAdd;
      } else if (agree && !decided[y]) {
        decided[y] = 1;
        branch = SweepBranch::Add;
      } else if (!agree) {
        // Merge the colors of every up-edge of y with the color of xy.
        for (const Neighbor& ny : g.neighbors(y)) {
          if (dist[ny.vertex] < dist[y]) {
            merger.unite(static_cast<std::size_t>(color),
                         static_cast<std::size_t>(ordinary.edge_color[ny.edge]));
          }
        }
        branch = SweepBranch::Merge;
      } else {
        branch = SweepBranch::Keep;
      }
      treated[nb.edge] = 1;
      if (trace) trace->events.push_back(SweepEvent{x, y, color, branch});
    }
    if (trace) trace->done.push_back(x);
  }

  // Assemble one signed factor per group, read off its layer through the base.
  const Grouping grouping = group_factors(merger);
  const std::size_t groups = grouping.members.size();
  std::vector<std::vector<Vertex>> coords(static_cast<std::size_t>(n), std::vector<Vertex>(groups));
  std::vector<int> group_order(groups, 1);
  for (std::size_t gi = 0; gi < groups; ++gi) {
    for (int f : grouping.members[gi]) group_order[gi] *= oc.factor(f).order();
  }
  for (Vertex u = 0; u < n; ++u) {
    auto t = oc.tuple(u);
    for (std::size_t gi = 0; gi < groups; ++gi) {
      Vertex code = 0;
      for (int f : grouping.members[gi]) code = code * oc.factor(f).order() + t[f];
      coords[u][gi] = code;
    }
  }
  std::vector<std::vector<Edge>> factor_edges(groups);
  std::vector<int> factor_of_edge(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int gi = grouping.group_of_factor[ordinary.edge_color[e]];
    factor_of_edge[e] = gi;
    const Vertex a = edges[e].u, b = edges[e].v;
    bool in_base_layer = true;
    for (std::size_t other = 0; other < groups; ++other) {
      if (static_cast<int>(other) != gi && coords[a][other] != 0) in_base_layer = false;
    }
    if (in_base_layer) factor_edges[gi].push_back(Edge{coords[a][gi], coords[b][gi], sign[e]});
  }
  std::vector<SignedGraph> factors;
  for (std::size_t gi = 0; gi < groups; ++gi) {
    factors.push_back(SignedGraph::build(group_order[gi], factor_edges[gi]));
  }

  // Every copy of a factor edge must carry the factor's sign.
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int gi = factor_of_edge[e];
    auto s = factors[gi].sign(coords[edges[e].u][gi], coords[edges[e].v][gi]);
    if (!s || *s != sign[e]) broken("copies of a factor edge disagree in sign");
  }
  return SDecomposition{factors, CoordinateSystem(factors, std::move(coords)), std::move(switch_set),
                        std::move(factor_of_edge)};
}

namespace {

// Whether the split (side A = factors in `mask`) satisfies the layer criterion.
bool splits(const SignedGraph& g, const OrdinaryDecomposition& d, unsigned mask) {
  const CoordinateSystem& oc = d.coords;
  const std::size_t k = oc.factor_count();
  auto in_a = [&](int f) { return (mask >> f) & 1U; };

  // Every A-layer, read in A-coordinates, must be equivalent to the base one.
  std::vector<int> a_factors;
  int a_order = 1;
  for (std::size_t f = 0; f < k; ++f) {
    if (in_a(static_cast<int>(f))) {
      a_factors.push_back(static_cast<int>(f));
      a_order *= oc.factor(f).order();
    }
  }
  auto a_code = [&](Vertex u) {
    int code = 0;
    for (int f : a_factors) code = code * oc.factor(f).order() + oc.coordinate(u, f);
    return code;
  };
  auto layer_through = [&](Vertex anchor) {
    std::vector<Edge> le;
    auto t = oc.tuple(anchor);
    std::vector<Vertex> tuple(t.begin(), t.end());
    for (int code = 0; code < a_order; ++code) {
      int rest = code;
      for (auto it = a_factors.rbegin(); it != a_factors.rend(); ++it) {
        tuple[*it] = rest % oc.factor(*it).order();
        rest /= oc.factor(*it).order();
      }
      const Vertex u = oc.vertex_of(tuple);
      for (const Neighbor& nb : g.neighbors(u)) {
        if (in_a(d.edge_color[nb.edge]) && u < nb.vertex) {
          le.push_back(Edge{code, a_code(nb.vertex), nb.sign});
        }
      }
    }
    return SignedGraph::build(a_order, le);
  };

  const SignedGraph base = layer_through(0);
  for (Vertex anchor = 0; anchor < g.order(); ++anchor) {
    if (anchor == 0 || a_code(anchor) != 0) continue;
    if (!equivalent(base, layer_through(anchor))) return false;
  }

  // Squares made of two copies of an A-edge joined by two B-edges are balanced.
  for (const Edge& e : g.edges()) {
    const auto idx = g.edge_index(e.u, e.v);
    if (!in_a(d.edge_color[*idx])) continue;
    for (const Neighbor& step : g.neighbors(e.u)) {
      const int j = d.edge_color[step.edge];
      if (in_a(j)) continue;
      auto t = oc.tuple(e.v);
      std::vector<Vertex> tuple(t.begin(), t.end());
      tuple[j] = oc.coordinate(step.vertex, j);
      const Vertex v2 = oc.vertex_of(tuple);
      auto across = g.sign(e.v, v2);
      auto copy = g.sign(v2, step.vertex);
      if (!across || !copy) broken("product square missing");
      if (e.sign * *across * *copy * step.sign != Sign::Positive) return false;
    }
  }
  return true;
}

}  // namespace

bool is_s_prime(const SignedGraph& g) {
  const OrdinaryDecomposition d = factorize(g);
  const std::size_t k = d.coords.factor_count();
  if (k == 1) return true;
  if (k > 20) throw Error(ErrorCode::TooLarge, "too many ordinary factors to enumerate splits");
  const unsigned full = (1U << k) - 1;
  for (unsigned mask = 1; mask < full; mask += 2) {
    if (splits(g, d, mask)) return false;
  }
  return true;
}

}  // namespace sgw
