#pragma once

#include <initializer_list>
#include <vector>

#include "sgw/graph.hpp"

namespace th {

// sg(3, {{0, 1, 1}, {1, 2, -1}}) builds a graph from raw signs.
inline sgw::SignedGraph sg(int n, std::initializer_list<sgw::SignedGraph::RawEdge> edges) {
  const std::vector<sgw::SignedGraph::RawEdge> list(edges);
  return sgw::SignedGraph::build_raw(n, list);
}

inline sgw::SignedGraph k2(int sign) { return sg(2, {{0, 1, sign}}); }

inline sgw::SignedGraph path(int n, int sign = 1) {
  std::vector<sgw::SignedGraph::RawEdge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, sign});
  return sgw::SignedGraph::build_raw(n, edges);
}

inline sgw::SignedGraph cycle(std::initializer_list<int> signs) {
  std::vector<sgw::SignedGraph::RawEdge> edges;
  const int n = static_cast<int>(signs.size());
  int i = 0;
  for (int s : signs) {
    edges.push_back({i, (i + 1) % n, s});
    ++i;
  }
  return sgw::SignedGraph::build_raw(n, edges);
}

}  // namespace th
