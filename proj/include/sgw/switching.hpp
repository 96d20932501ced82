#pragma once

#include <optional>
#include <vector>

#include "sgw/graph.hpp"

namespace sgw {

/// Set of vertices to switch, as a flag per vertex of the host graph.
class SwitchSet {
 public:
  SwitchSet() = default;
  explicit SwitchSet(int n) : flags_(static_cast<std::size_t>(n), 0) {}
  static SwitchSet from_members(int n, std::span<const Vertex> members);

  int host_order() const noexcept { return static_cast<int>(flags_.size()); }
  bool contains(Vertex v) const { return flags_.at(static_cast<std::size_t>(v)) != 0; }
  void set(Vertex v, bool on = true) { flags_.at(static_cast<std::size_t>(v)) = on ? 1 : 0; }
  void toggle(Vertex v) { flags_.at(static_cast<std::size_t>(v)) ^= 1; }
  /// Sign factor of vertex v: -1 if switched.
  Sign factor(Vertex v) const { return contains(v) ? Sign::Negative : Sign::Positive; }

  std::vector<Vertex> members() const;
  std::size_t count() const;
  bool empty() const { return count() == 0; }

  friend bool operator==(const SwitchSet&, const SwitchSet&) = default;

 private:
  std::vector<char> flags_;
};

enum class CycleClass { BalancedEven, BalancedOdd, UnbalancedEven, UnbalancedOdd };

const char* to_string(CycleClass c) noexcept;

/// Flip every edge with exactly one endpoint in `x`.
SignedGraph switched(const SignedGraph& g, const SwitchSet& x);

struct BalanceResult {
  bool balanced = false;
  SwitchSet switch_set;  // balanced: switching it makes every edge positive
  Walk unbalanced_cycle; // unbalanced: a closed walk (a cycle) of sign -1
};

BalanceResult is_balanced(const SignedGraph& g);

/// A set X with switched(g1, X) == g2, or nullopt when the signatures are not
/// equivalent. Both graphs must share the same unsigned edge set exactly,
/// otherwise DifferentUnderlyingGraph is thrown.
std::optional<SwitchSet> equivalent(const SignedGraph& g1, const SignedGraph& g2);

struct CanonicalForm {
  SignedGraph graph;
  SwitchSet switch_set;  // switched(input, switch_set) == graph
};

/// Representative of the switching class: per component, BFS from the smallest
/// vertex with neighbors ascending, and switch so every BFS tree edge is positive.
CanonicalForm canonical_form(const SignedGraph& g);

/// Class of a single cycle. Throws NotACycle.
CycleClass classify_cycle(const SignedGraph& g);

}  // namespace sgw
