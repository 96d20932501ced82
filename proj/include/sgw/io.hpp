#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sgw/graph.hpp"
#include "sgw/homomorphism.hpp"
#include "sgw/product.hpp"
#include "sgw/s_factor.hpp"
#include "sgw/switching.hpp"

namespace sgw {

/// Text graph format:
///
///   # comment
///   sg <n>
///   <u> <v> <+|->
///
/// Vertices are 0-based integers. If any vertex token is not an integer, every
/// vertex token is read as a name; names are numbered in order of first
/// appearance and there must be exactly n of them.
struct GraphFile {
  SignedGraph graph;
  std::vector<std::string> names;  // empty unless the file used names
};

/// Throws Error(Parse) with a line number, or the graph validation errors.
GraphFile parse_graph_file(std::string_view text);

/// Canonical text: header, then one line per edge in canonical order.
std::string format_graph_file(const SignedGraph& g, const std::vector<std::string>& names = {});

// JSON documents (compact, deterministic key order).
std::string graph_to_json(const SignedGraph& g);
SignedGraph graph_from_json(std::string_view json);
std::string coords_to_json(const CoordinateSystem& cs);
std::string decomposition_to_json(const SDecomposition& d);
std::string certificate_to_json(const ChromaticCertificate& c);
ChromaticCertificate certificate_from_json(std::string_view json);
std::string switch_set_to_json(const SwitchSet& x);
std::string balance_to_json(const BalanceResult& b);

}  // namespace sgw
