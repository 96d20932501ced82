#pragma once

#include <utility>
#include <vector>

#include "sgw/graph.hpp"

namespace sgw {

/// Bijection between the vertices of a host graph and tuples over the factor
/// vertex sets. Coordinates are stored per host vertex; the inverse is indexed
/// by the row-major code of the tuple.
class CoordinateSystem {
 public:
  CoordinateSystem() = default;

  /// Validates that `coords` (one tuple per host vertex) is a bijection onto the
  /// product of the factor vertex sets.
  CoordinateSystem(std::vector<SignedGraph> factors, std::vector<std::vector<Vertex>> coords);

  /// Host vertex id equals the row-major code of its tuple.
  static CoordinateSystem row_major(std::vector<SignedGraph> factors);

  std::size_t factor_count() const noexcept { return factors_.size(); }
  const std::vector<SignedGraph>& factors() const noexcept { return factors_; }
  const SignedGraph& factor(std::size_t i) const;
  int host_order() const noexcept { return static_cast<int>(vertex_of_code_.size()); }

  Vertex coordinate(Vertex u, std::size_t i) const;
  std::span<const Vertex> tuple(Vertex u) const;
  std::vector<std::vector<Vertex>> all_tuples() const;
  Vertex vertex_of(std::span<const Vertex> tuple) const;

 private:
  std::size_t code_of(std::span<const Vertex> tuple) const;

  std::vector<SignedGraph> factors_;
  std::vector<std::size_t> strides_;
  std::vector<Vertex> coords_;  // host_order x factor_count, row per vertex
  std::vector<Vertex> vertex_of_code_;
};

struct Product {
  SignedGraph graph;
  CoordinateSystem coords;
};

/// Vertex (x, y) gets id x * b.order() + y. Signs are copied from the factor
/// whose coordinate varies along the edge.
Product cartesian_product(const SignedGraph& a, const SignedGraph& b);

/// Left fold of cartesian_product with flattened coordinates. Throws EmptyList.
Product product_many(std::span<const SignedGraph> graphs);

/// Ordinary product of the underlying graphs (all edges positive).
SignedGraph unsigned_product(std::span<const SignedGraph> graphs);

struct Layer {
  std::vector<Vertex> vertices;  // vertices[c] has coordinate c in factor i
  std::vector<std::pair<Vertex, Vertex>> edges;  // copies of factor-i edges, host ids
};

/// The factor-i layer through `anchor`. Throws IndexOutOfRange.
Layer layer(const CoordinateSystem& cs, std::size_t i, Vertex anchor);

/// Vertex agreeing with `anchor` off coordinate i and with `u` on it.
Vertex project_vertex(const CoordinateSystem& cs, Vertex u, std::size_t i, Vertex anchor);

}  // namespace sgw
