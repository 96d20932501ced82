#include "sgw/switching.hpp"

#include <algorithm>
#include <numeric>

namespace sgw {

SwitchSet SwitchSet::from_members(int n, std::span<const Vertex> members) {
  SwitchSet x(n);
  for (Vertex v : members) {
    if (v < 0 || v >= n) throw Error(ErrorCode::VertexOutOfRange, "switch set member out of range");
    x.set(v);
  }
  return x;
}

std::vector<Vertex> SwitchSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < flags_.size(); ++i) {
    if (flags_[i]) out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

std::size_t SwitchSet::count() const {
  return static_cast<std::size_t>(std::count(flags_.begin(), flags_.end(), 1));
}

const char* to_string(CycleClass c) noexcept {
  switch (c) {
    case CycleClass::BalancedEven: return "BC_even";
    case CycleClass::BalancedOdd: return "BC_odd";
    case CycleClass::UnbalancedEven: return "UC_even";
    case CycleClass::UnbalancedOdd: return "UC_odd";
  }
  return "?";
}

SignedGraph switched(const SignedGraph& g, const SwitchSet& x) {
  if (x.host_order() != g.order()) {
    throw Error(ErrorCode::BadParameter, "switch set built for a different vertex count");
  }
  std::vector<Sign> signs;
  signs.reserve(g.size());
  for (const Edge& e : g.edges()) signs.push_back(e.sign * x.factor(e.u) * x.factor(e.v));
  return g.with_signs(signs);
}

namespace {

// Assigns a potential in {+1,-1} per vertex so that tree edges satisfy
// potential[u] * potential[w] == required(edge). Returns the first non-tree edge
// violating the rule, if any. BFS roots are the smallest unvisited vertices.
struct Potential {
  std::vector<Sign> value;
  std::vector<Vertex> parent;
  std::vector<int> depth;
  std::optional<std::size_t> violation;
};

template <typename Required>
Potential assign_potential(const SignedGraph& g, Required required) {
  const auto n = static_cast<std::size_t>(g.order());
  Potential p{std::vector<Sign>(n, Sign::Positive), std::vector<Vertex>(n, -1),
              std::vector<int>(n, -1), std::nullopt};
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (p.depth[root] >= 0) continue;
    p.depth[root] = 0;
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (const Neighbor& nb : g.neighbors(u)) {
        Sign want = required(nb.edge);
        if (p.depth[nb.vertex] < 0) {
          p.depth[nb.vertex] = p.depth[u] + 1;
          p.parent[nb.vertex] = u;
          p.value[nb.vertex] = p.value[u] * want;
          queue.push_back(nb.vertex);
        } else if (!p.violation && p.value[u] * p.value[nb.vertex] != want) {
          p.violation = nb.edge;
        }
      }
    }
  }
  return p;
}

SwitchSet negative_potential_set(const Potential& p) {
  SwitchSet x(static_cast<int>(p.value.size()));
  for (std::size_t v = 0; v < p.value.size(); ++v) {
    if (is_negative(p.value[v])) x.set(static_cast<Vertex>(v));
  }
  return x;
}

// Cycle through the non-tree edge (a, b): tree path a -> lca -> b, then back to a.
Walk fundamental_cycle(const Potential& p, Vertex a, Vertex b) {
  std::vector<Vertex> left{a}, right{b};
  Vertex x = a, y = b;
  while (p.depth[x] > p.depth[y]) left.push_back(x = p.parent[x]);
  while (p.depth[y] > p.depth[x]) right.push_back(y = p.parent[y]);
  while (x != y) {
    left.push_back(x = p.parent[x]);
    right.push_back(y = p.parent[y]);
  }
  right.pop_back();  // lca already at the end of `left`
  Walk w;
  w.vertices = left;
  w.vertices.insert(w.vertices.end(), right.rbegin(), right.rend());
  w.vertices.push_back(a);
  return w;
}

}  // namespace

BalanceResult is_balanced(const SignedGraph& g) {
  const auto& edges = g.edges();
  Potential p = assign_potential(g, [&](std::size_t e) { return edges[e].sign; });
  BalanceResult r;
  if (!p.violation) {
    r.balanced = true;
    r.switch_set = negative_potential_set(p);
    return r;
  }
  const Edge& bad = edges[*p.violation];
  r.balanced = false;
  r.switch_set = SwitchSet(g.order());
  r.unbalanced_cycle = fundamental_cycle(p, bad.u, bad.v);
  return r;
}

std::optional<SwitchSet> equivalent(const SignedGraph& g1, const SignedGraph& g2) {
  if (!g1.same_underlying(g2)) {
    throw Error(ErrorCode::DifferentUnderlyingGraph, "graphs do not share the same edge set");
  }
  const auto& e1 = g1.edges();
  const auto& e2 = g2.edges();
  Potential p = assign_potential(g1, [&](std::size_t e) { return e1[e].sign * e2[e].sign; });
  if (p.violation) return std::nullopt;
  return negative_potential_set(p);
}

CanonicalForm canonical_form(const SignedGraph& g) {
  const auto& edges = g.edges();
  // Tree edges get potential product equal to their sign, which makes them
  // positive after switching; non-tree edges are whatever the class forces.
  Potential p = assign_potential(g, [&](std::size_t e) { return edges[e].sign; });
  SwitchSet x = negative_potential_set(p);
  return CanonicalForm{switched(g, x), x};
}

CycleClass classify_cycle(const SignedGraph& g) {
  if (g.order() < 3 || g.size() != static_cast<std::size_t>(g.order()) || !is_connected(g)) {
    throw Error(ErrorCode::NotACycle, "graph is not a single cycle");
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) throw Error(ErrorCode::NotACycle, "vertex of degree != 2");
  }
  const bool even = g.order() % 2 == 0;
  const bool balanced = g.negative_edge_count() % 2 == 0;
  if (balanced) return even ? CycleClass::BalancedEven : CycleClass::BalancedOdd;
  return even ? CycleClass::UnbalancedEven : CycleClass::UnbalancedOdd;
}

}  // namespace sgw
