#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgw/graph.hpp"
#include "sgw/switching.hpp"

namespace sgw {

/// Vertex map plus a switch set on the source. Every source edge uv must land
/// on a target edge map(u)map(v) whose sign equals the switched source sign.
struct SignedHomomorphism {
  std::vector<Vertex> map;
  SwitchSet switch_set;

  friend bool operator==(const SignedHomomorphism&, const SignedHomomorphism&) = default;
};

bool validate(const SignedGraph& g, const SignedGraph& h, const SignedHomomorphism& phi);

struct SearchStats {
  std::uint64_t nodes = 0;  // assignments tried
};

/// Complete backtracking search. Targets are limited to 32 vertices (TooLarge).
std::optional<SignedHomomorphism> find_homomorphism(const SignedGraph& g, const SignedGraph& h,
                                                    SearchStats* stats = nullptr);

/// One signature of K_k per switching-isomorphism class, star at vertex 0
/// positive, ordered by negative edge count and then by signature code.
/// 1 <= k <= 6, otherwise OrderTooLarge.
const std::vector<SignedGraph>& enumerate_targets(int k);

/// How the lower end of a chromatic certificate is justified.
enum class LowerBoundReason {
  Trivial,            // k == 1
  UnderlyingExact,    // exact chromatic number of the unsigned graph is k
  UnderlyingClique,   // the unsigned graph contains a k-clique
  RequestedLower,     // caller asked to start at k; minimality not claimed
  TargetsExhausted,   // no order k-1 target admits a homomorphism
};

const char* to_string(LowerBoundReason r) noexcept;

struct TargetExhaustion {
  SignedGraph target;
  std::uint64_t nodes = 0;
};

struct LowerBoundEvidence {
  LowerBoundReason reason = LowerBoundReason::Trivial;
  int underlying_bound = 1;              // bound derived from the unsigned graph
  std::vector<TargetExhaustion> exhausted;  // every order k-1 target, when exhausted
};

struct ChromaticCertificate {
  int k = 0;
  SignedGraph target;  // complete, k vertices
  SignedHomomorphism hom;
  LowerBoundEvidence lower_bound_evidence;
  std::uint64_t nodes = 0;  // total search effort across all orders tried
};

/// Smallest k (>= lo) such that g maps to an order-k target. Throws
/// BoundExceededError when k would exceed `hi` or the target cap of 6, and
/// BadParameter for an empty graph.
ChromaticCertificate chromatic_number(const SignedGraph& g, std::optional<int> lo = std::nullopt,
                                      std::optional<int> hi = std::nullopt);

/// Rechecks a certificate from scratch: the homomorphism validates into a
/// complete order-k target, and the evidence covers every order k-1 target
/// (each one re-searched) or matches a recomputed unsigned bound.
bool check_certificate(const SignedGraph& g, const ChromaticCertificate& cert);

/// Exact chromatic number of the underlying graph. n <= 20, otherwise TooLarge.
int underlying_chromatic_number(const SignedGraph& g);

/// Size of a greedily found clique of the underlying graph.
int greedy_clique_size(const SignedGraph& g);

/// Number of colors used by a greedy signed coloring; an upper bound on chi_s.
int greedy_signed_upper_bound(const SignedGraph& g);

struct ColoringTarget {
  SignedGraph target;  // one vertex per color, edges only where forced
  SignedHomomorphism hom;
};

/// Turns a vertex coloring plus switch set into a homomorphism onto the target
/// it induces. Returns nullopt when two adjacent vertices share a color or a
/// color pair would need both signs.
std::optional<ColoringTarget> coloring_target(const SignedGraph& g, std::span<const int> colors,
                                              const SwitchSet& switch_set);

/// Homomorphism of a product induced by homomorphisms of the factors. Product
/// vertex ids follow cartesian_product: (x, y) is x * order + y.
SignedHomomorphism product_homomorphism(const SignedHomomorphism& a, const SignedHomomorphism& b,
                                        int b_target_order);

/// Some vertex bijection combined with a switching takes g1 to g2. n <= 10,
/// otherwise TooLarge.
bool signed_isomorphic(const SignedGraph& g1, const SignedGraph& g2);

/// For every z in S and non-adjacent x, y in N(z) outside S, some w outside S
/// closes a balanced 4-cycle x w y z.
bool is_s_redundant(const SignedGraph& g, std::span<const Vertex> s);

/// Worker threads for parallel searches: SGW_THREADS if set, else the hardware
/// concurrency, at least 1.
int worker_count();

}  // namespace sgw
