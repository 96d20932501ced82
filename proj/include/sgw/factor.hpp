#pragma once

#include <vector>

#include "sgw/graph.hpp"
#include "sgw/product.hpp"

namespace sgw {

/// Prime factorization of a connected unsigned graph.
///
/// Factors are returned as all-positive signed graphs. Vertex 0 of the input is
/// the all-zero vertex; factor order is the order in which a BFS from vertex 0
/// (neighbors ascending) first meets an edge of each factor, and the vertices
/// of each factor are numbered in BFS order of its layer through vertex 0.
struct OrdinaryDecomposition {
  std::vector<SignedGraph> factors;
  CoordinateSystem coords;
  std::vector<int> edge_color;  // per input edge (canonical order): factor index
};

/// Signs of the input are ignored. Throws Disconnected or NoEdges.
OrdinaryDecomposition factorize(const SignedGraph& g);

/// True iff factorize() returns a single factor. Throws Disconnected.
bool is_prime_ordinary(const SignedGraph& g);

}  // namespace sgw
