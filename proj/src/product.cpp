#include "sgw/product.hpp"

#include <string>

namespace sgw {

CoordinateSystem::CoordinateSystem(std::vector<SignedGraph> factors,
                                   std::vector<std::vector<Vertex>> coords)
    : factors_(std::move(factors)) {
  const std::size_t k = factors_.size();
  strides_.assign(k, 1);
  std::size_t total = 1;
  for (std::size_t i = k; i-- > 0;) {
    strides_[i] = total;
    total *= static_cast<std::size_t>(factors_[i].order());
  }
  if (coords.size() != total) {
    throw Error(ErrorCode::BadParameter, "coordinate count " + std::to_string(coords.size()) +
                                             " != product of factor orders " +
                                             std::to_string(total));
  }
  coords_.reserve(total * k);
  vertex_of_code_.assign(total, -1);
  for (std::size_t u = 0; u < coords.size(); ++u) {
    if (coords[u].size() != k) throw Error(ErrorCode::BadParameter, "tuple of wrong arity");
    for (std::size_t i = 0; i < k; ++i) {
      if (coords[u][i] < 0 || coords[u][i] >= factors_[i].order()) {
        throw Error(ErrorCode::BadParameter, "coordinate out of range");
      }
      coords_.push_back(coords[u][i]);
    }
    std::size_t code = code_of(coords[u]);
    if (vertex_of_code_[code] >= 0) throw Error(ErrorCode::BadParameter, "coordinates not injective");
    vertex_of_code_[code] = static_cast<Vertex>(u);
  }
}

CoordinateSystem CoordinateSystem::row_major(std::vector<SignedGraph> factors) {
  std::size_t total = 1;
  for (const auto& f : factors) total *= static_cast<std::size_t>(f.order());
  std::vector<std::vector<Vertex>> coords(total, std::vector<Vertex>(factors.size()));
  for (std::size_t u = 0; u < total; ++u) {
    std::size_t rest = u;
    for (std::size_t i = factors.size(); i-- > 0;) {
      auto radix = static_cast<std::size_t>(factors[i].order());
      coords[u][i] = static_cast<Vertex>(rest % radix);
      rest /= radix;
    }
  }
  return CoordinateSystem(std::move(factors), std::move(coords));
}

const SignedGraph& CoordinateSystem::factor(std::size_t i) const {
  if (i >= factors_.size()) throw Error(ErrorCode::IndexOutOfRange, "factor index");
  return factors_[i];
}

Vertex CoordinateSystem::coordinate(Vertex u, std::size_t i) const {
  if (i >= factors_.size()) throw Error(ErrorCode::IndexOutOfRange, "factor index");
  if (u < 0 || u >= host_order()) throw Error(ErrorCode::IndexOutOfRange, "host vertex");
  return coords_[static_cast<std::size_t>(u) * factors_.size() + i];
}

std::span<const Vertex> CoordinateSystem::tuple(Vertex u) const {
  if (u < 0 || u >= host_order()) throw Error(ErrorCode::IndexOutOfRange, "host vertex");
  return {coords_.data() + static_cast<std::size_t>(u) * factors_.size(), factors_.size()};
}

std::vector<std::vector<Vertex>> CoordinateSystem::all_tuples() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(static_cast<std::size_t>(host_order()));
  for (Vertex u = 0; u < host_order(); ++u) {
    auto t = tuple(u);
    out.emplace_back(t.begin(), t.end());
  }
  return out;
}

std::size_t CoordinateSystem::code_of(std::span<const Vertex> tuple) const {
  std::size_t code = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) code += static_cast<std::size_t>(tuple[i]) * strides_[i];
  return code;
}

Vertex CoordinateSystem::vertex_of(std::span<const Vertex> tuple) const {
  if (tuple.size() != factors_.size()) throw Error(ErrorCode::IndexOutOfRange, "tuple arity");
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] < 0 || tuple[i] >= factors_[i].order()) {
      throw Error(ErrorCode::IndexOutOfRange, "coordinate out of range");
    }
  }
  return vertex_of_code_[code_of(tuple)];
}

Product cartesian_product(const SignedGraph& a, const SignedGraph& b) {
  const int na = a.order(), nb = b.order();
  std::vector<Edge> edges;
  edges.reserve(a.size() * static_cast<std::size_t>(nb) + b.size() * static_cast<std::size_t>(na));
  for (const Edge& e : a.edges()) {
    for (int y = 0; y < nb; ++y) edges.push_back(Edge{e.u * nb + y, e.v * nb + y, e.sign});
  }
  for (int x = 0; x < na; ++x) {
    for (const Edge& e : b.edges()) edges.push_back(Edge{x * nb + e.u, x * nb + e.v, e.sign});
  }
  return Product{SignedGraph::build(na * nb, edges), CoordinateSystem::row_major({a, b})};
}

Product product_many(std::span<const SignedGraph> graphs) {
  if (graphs.empty()) throw Error(ErrorCode::EmptyList, "product of an empty list");
  SignedGraph acc = graphs[0];
  for (std::size_t i = 1; i < graphs.size(); ++i) acc = cartesian_product(acc, graphs[i]).graph;
  // Row-major ids compose under the left fold, so the flattened coordinates
  // are exactly the mixed-radix digits of the id.
  return Product{std::move(acc),
                 CoordinateSystem::row_major(std::vector<SignedGraph>(graphs.begin(), graphs.end()))};
}

SignedGraph unsigned_product(std::span<const SignedGraph> graphs) {
  std::vector<SignedGraph> plain;
  plain.reserve(graphs.size());
  for (const auto& g : graphs) plain.push_back(g.underlying());
  return product_many(plain).graph;
}

Layer layer(const CoordinateSystem& cs, std::size_t i, Vertex anchor) {
  const SignedGraph& f = cs.factor(i);
  auto base = cs.tuple(anchor);
  std::vector<Vertex> t(base.begin(), base.end());
  Layer out;
  out.vertices.reserve(static_cast<std::size_t>(f.order()));
  for (Vertex c = 0; c < f.order(); ++c) {
    t[i] = c;
    out.vertices.push_back(cs.vertex_of(t));
  }
  for (const Edge& e : f.edges()) out.edges.emplace_back(out.vertices[e.u], out.vertices[e.v]);
  return out;
}

Vertex project_vertex(const CoordinateSystem& cs, Vertex u, std::size_t i, Vertex anchor) {
  if (i >= cs.factor_count()) throw Error(ErrorCode::IndexOutOfRange, "factor index");
  auto base = cs.tuple(anchor);
  std::vector<Vertex> t(base.begin(), base.end());
  t[i] = cs.coordinate(u, i);
  return cs.vertex_of(t);
}

}  // namespace sgw
