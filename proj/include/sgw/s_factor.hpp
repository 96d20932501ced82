#pragma once

#include <vector>

#include "sgw/disjoint_set.hpp"
#include "sgw/graph.hpp"
#include "sgw/product.hpp"
#include "sgw/switching.hpp"

namespace sgw {

/// Temporary factor colors of the decomposition, merged as the sweep finds
/// layers that disagree in sign. Elements are ordinary factor indices.
using ColorMerger = DisjointSet;

/// Prime s-decomposition of a connected signed graph.
///
/// The product of `factors` laid out by `coords` equals
/// switched(input, switch_set) edge for edge, signs included.
struct SDecomposition {
  std::vector<SignedGraph> factors;
  CoordinateSystem coords;
  SwitchSet switch_set;
  std::vector<int> factor_of_edge;  // per input edge (canonical order)
};

/// What happened to one edge during the sweep.
enum class SweepBranch {
  SwitchAndAdd,  // signs disagree, far endpoint undecided: switch it
  Add,           // signs agree, far endpoint undecided
  Merge,         // signs disagree, far endpoint decided: merge colors
  Keep,          // signs agree, far endpoint decided
};

struct SweepEvent {
  Vertex x;
  Vertex y;
  int color;  // ordinary factor index of the edge
  SweepBranch branch;
};

/// Optional trace of a decomposition run, including the order in which
/// vertices become done (all incident edges treated).
struct DecomposeTrace {
  std::vector<SweepEvent> events;
  std::vector<Vertex> done;
  std::size_t ordinary_factor_count = 0;
};

/// Throws Disconnected or NoEdges.
SDecomposition s_decompose(const SignedGraph& g, DecomposeTrace* trace = nullptr);

/// Decides s-primality by testing every split of the ordinary prime factors
/// into two sides against the layer criterion: all layers of one side are
/// switching equivalent, and every square built from two copies of such an
/// edge is balanced. Independent of s_decompose. Throws Disconnected or NoEdges.
bool is_s_prime(const SignedGraph& g);

}  // namespace sgw
