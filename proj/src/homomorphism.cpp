#include "sgw/homomorphism.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <charconv>
#include <climits>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_set>

namespace sgw {

bool validate(const SignedGraph& g, const SignedGraph& h, const SignedHomomorphism& phi) {
  if (phi.map.size() != static_cast<std::size_t>(g.order())) return false;
  if (phi.switch_set.host_order() != g.order()) return false;
  for (Vertex t : phi.map) {
    if (t < 0 || t >= h.order()) return false;
  }
  for (const Edge& e : g.edges()) {
    auto s = h.sign(phi.map[e.u], phi.map[e.v]);
    if (!s) return false;  // also catches map[u] == map[v]
    if (*s != e.sign * phi.switch_set.factor(e.u) * phi.switch_set.factor(e.v)) return false;
  }
  return true;
}

namespace {

using Mask = std::uint64_t;
constexpr int kMaxTarget = 32;

// Depth-first search over values 2 * target_vertex + switch_bit with forward
// checking. Vertices are visited in a fixed order chosen to keep the frontier
// (visited vertices with unvisited neighbors) small. Whether the rest of the
// graph can be completed depends only on the values on the frontier, so every
// frontier assignment that failed once is remembered and never expanded again.
class Solver {
 public:
  Solver(const SignedGraph& g, const SignedGraph& h, const std::atomic<int>* winner, int self)
      : g_(g), n_(g.order()), winner_(winner), self_(self) {
    if (h.order() > kMaxTarget) {
      throw Error(ErrorCode::TooLarge, "homomorphism targets are limited to 32 vertices");
    }
    const int values = 2 * h.order();
    allowed_.assign(static_cast<std::size_t>(values) * 2, 0);
    for (Vertex a = 0; a < h.order(); ++a) {
      for (int s = 0; s < 2; ++s) {
        for (int neg = 0; neg < 2; ++neg) {
          Mask m = 0;
          for (const Neighbor& nb : h.neighbors(a)) {
            const int r = s ^ neg ^ (is_negative(nb.sign) ? 1 : 0);
            m |= Mask{1} << (2 * nb.vertex + r);
          }
          allowed_[(2 * a + s) * 2 + neg] = m;
        }
      }
    }
    const Mask full = values == 64 ? ~Mask{0} : (Mask{1} << values) - 1;
    constexpr Mask even = 0x5555555555555555ULL;

    order_ = frontier_order(g);
    position_.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) position_[order_[i]] = i;
    plan_frontiers();
    plan_symmetries(h);

    domains_.assign(static_cast<std::size_t>(n_) * (n_ + 1), full);
    // The first vertex of each component keeps switch bit 0: switching a
    // whole component of the source maps solutions to solutions.
    for (Vertex v : order_) {
      if (component_start(v)) domains_[v] &= even;
    }
    value_.assign(static_cast<std::size_t>(n_), -1);
    failed_.resize(static_cast<std::size_t>(n_) + 1);
  }

  std::optional<SignedHomomorphism> run() {
    if (!search(0)) return std::nullopt;
    SignedHomomorphism phi{std::vector<Vertex>(static_cast<std::size_t>(n_)), SwitchSet(n_)};
    for (Vertex v = 0; v < n_; ++v) {
      phi.map[v] = value_[v] >> 1;
      phi.switch_set.set(v, (value_[v] & 1) != 0);
    }
    return phi;
  }

  std::uint64_t nodes() const { return nodes_; }
  bool cancelled() const { return cancelled_; }

 private:
  // Greedy order: repeatedly take the vertex that leaves the fewest visited
  // vertices with unvisited neighbors, preferring vertices with many visited
  // neighbors, then smaller ids. A new component starts at its smallest vertex.
  static std::vector<Vertex> frontier_order(const SignedGraph& g) {
    const int n = g.order();
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<int> open_neighbors(static_cast<std::size_t>(n));  // unvisited neighbors
    std::vector<int> visited_neighbors(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) open_neighbors[v] = g.degree(v);
    std::vector<Vertex> order;
    int frontier = 0;
    while (static_cast<int>(order.size()) < n) {
      Vertex best = -1;
      int best_frontier = INT_MAX, best_links = -1;
      for (Vertex v = 0; v < n; ++v) {
        if (visited[v] || visited_neighbors[v] == 0) continue;
        // Visiting v closes every frontier neighbor whose last open neighbor is v.
        int closed = 0;
        for (const Neighbor& nb : g.neighbors(v)) {
          if (visited[nb.vertex] && open_neighbors[nb.vertex] == 1) ++closed;
        }
        const int after = frontier - closed + (open_neighbors[v] > 0 ? 1 : 0);
        if (after < best_frontier || (after == best_frontier && visited_neighbors[v] > best_links)) {
          best = v;
          best_frontier = after;
          best_links = visited_neighbors[v];
        }
      }
      if (best < 0) {
        for (Vertex v = 0; v < n && best < 0; ++v) {
          if (!visited[v]) best = v;
        }
      }
      visited[best] = 1;
      order.push_back(best);
      frontier += open_neighbors[best] > 0 ? 1 : 0;
      for (const Neighbor& nb : g.neighbors(best)) {
        ++visited_neighbors[nb.vertex];
        if (--open_neighbors[nb.vertex] == 0 && visited[nb.vertex]) --frontier;
      }
    }
    return order;
  }

  // True when v has no neighbor earlier in the order, i.e. it starts a new
  // connected component (the order always extends the current component).
  bool component_start(Vertex v) const {
    for (const Neighbor& nb : g_.neighbors(v)) {
      if (position_[nb.vertex] < position_[v]) return false;
    }
    return true;
  }

  void plan_frontiers() {
    frontier_.assign(static_cast<std::size_t>(n_) + 1, {});
    std::vector<int> last(static_cast<std::size_t>(n_), -1);  // last neighbor position
    for (Vertex v = 0; v < n_; ++v) {
      for (const Neighbor& nb : g_.neighbors(v)) last[v] = std::max(last[v], position_[nb.vertex]);
    }
    for (int i = 0; i <= n_; ++i) {
      for (int j = 0; j < i; ++j) {
        if (last[order_[j]] >= i) frontier_[i].push_back(order_[j]);
      }
    }
  }

  // Switching automorphisms of the target act on values: relabel the target
  // vertex by p, and flip the switch bit where the relabeled target needs
  // switching back. Flipping every switch bit is always among them.
  void plan_symmetries(const SignedGraph& h) {
    const int k = h.order();
    if (k > 7) {
      for (int flip = 0; flip < 2; ++flip) {
        std::vector<std::uint8_t> map(static_cast<std::size_t>(2 * k));
        for (int v = 0; v < 2 * k; ++v) map[v] = static_cast<std::uint8_t>(v ^ flip);
        symmetries_.push_back(std::move(map));
      }
      return;
    }
    std::vector<Vertex> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      const SignedGraph moved = relabel(h, perm);
      if (!moved.same_underlying(h)) continue;
      auto y = equivalent(moved, h);
      if (!y) continue;
      for (int flip = 0; flip < 2; ++flip) {
        std::vector<std::uint8_t> map(static_cast<std::size_t>(2 * k));
        for (int t = 0; t < k; ++t) {
          for (int b = 0; b < 2; ++b) {
            const int bit = b ^ flip ^ (y->contains(perm[t]) ? 1 : 0);
            map[2 * t + b] = static_cast<std::uint8_t>(2 * perm[t] + bit);
          }
        }
        symmetries_.push_back(std::move(map));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  // Smallest image of the frontier values under the target symmetries.
  std::string frontier_key(int i) const {
    const auto& front = frontier_[i];
    std::string best, key(front.size(), '\0');
    for (const auto& map : symmetries_) {
      for (std::size_t j = 0; j < front.size(); ++j) key[j] = static_cast<char>(map[value_[front[j]]]);
      if (best.empty() || key < best) best = key;
    }
    return best;
  }

  bool search(int i) {
    if (i == n_) return true;
    std::string key = frontier_key(i);
    auto& failed = failed_[static_cast<std::size_t>(i)];
    if (failed.count(key)) return false;

    const Vertex v = order_[i];
    Mask* dom = &domains_[static_cast<std::size_t>(i) * n_];
    Mask* next = dom + n_;
    Mask candidates = dom[v];
    while (candidates) {
      const int val = std::countr_zero(candidates);
      candidates &= candidates - 1;
      if ((++nodes_ & 1023) == 0 && winner_ && winner_->load(std::memory_order_relaxed) < self_) {
        cancelled_ = true;
        return false;
      }
      std::memcpy(next, dom, sizeof(Mask) * static_cast<std::size_t>(n_));
      bool ok = true;
      for (const Neighbor& nb : g_.neighbors(v)) {
        if (position_[nb.vertex] < i) continue;
        next[nb.vertex] &= allowed_[static_cast<std::size_t>(val) * 2 + (is_negative(nb.sign) ? 1 : 0)];
        if (!next[nb.vertex]) {
          ok = false;
          break;
        }
      }
      value_[v] = val;
      if (ok && search(i + 1)) return true;
      if (cancelled_) return false;
    }
    if (memo_size_ < kMemoLimit) {
      failed.insert(std::move(key));
      ++memo_size_;
    }
    return false;
  }

  static constexpr std::size_t kMemoLimit = std::size_t{1} << 23;

  const SignedGraph& g_;
  int n_;
  const std::atomic<int>* winner_;
  int self_;
  std::vector<Mask> allowed_;  // [value * 2 + negative] -> neighbor values
  std::vector<Vertex> order_;
  std::vector<int> position_;
  std::vector<std::vector<Vertex>> frontier_;  // before visiting position i
  std::vector<std::vector<std::uint8_t>> symmetries_;  // value maps
  std::vector<Mask> domains_;  // one row of n masks per depth
  std::vector<int> value_;
  std::vector<std::unordered_set<std::string>> failed_;
  std::size_t memo_size_ = 0;
  std::uint64_t nodes_ = 0;
  bool cancelled_ = false;
};

struct TargetOutcome {
  std::optional<SignedHomomorphism> hom;
  std::uint64_t nodes = 0;
  bool searched = false;
};

// Searches every target, concurrently when allowed. The reported success is
// always the lowest-index target that admits a homomorphism, and every target
// before it is searched to completion, so results do not depend on scheduling.
std::vector<TargetOutcome> search_targets(const SignedGraph& g, const std::vector<SignedGraph>& targets) {
  std::vector<TargetOutcome> out(targets.size());
  std::atomic<int> winner{INT_MAX};
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= targets.size()) return;
      if (winner.load() < static_cast<int>(i)) continue;
      try {
        Solver solver(g, targets[i], &winner, static_cast<int>(i));
        auto hom = solver.run();
        out[i].nodes = solver.nodes();
        if (solver.cancelled()) continue;
        out[i].searched = true;
        if (hom) {
          out[i].hom = std::move(hom);
          int current = winner.load();
          while (static_cast<int>(i) < current && !winner.compare_exchange_weak(current, static_cast<int>(i))) {
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        winner.store(-1);
      }
    }
  };

  const int workers = std::min<int>(worker_count(), static_cast<int>(targets.size()));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

// Edge index of (i, j), i < j, in the canonical edge order of K_k.
int complete_edge_index(int k, int i, int j) { return i * k - i * (i + 1) / 2 + (j - i - 1); }

SignedGraph complete_from_code(int k, std::uint32_t code) {
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const bool neg = (code >> complete_edge_index(k, i, j)) & 1U;
      edges.push_back(Edge{i, j, neg ? Sign::Negative : Sign::Positive});
    }
  }
  return SignedGraph::build(k, edges);
}

// Smallest code over all relabelings, each switched so the star at 0 is positive.
std::uint32_t canonical_complete_code(int k, std::uint32_t code) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = UINT32_MAX;
  std::array<std::array<int, 6>, 6> sign{};
  do {
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        const int s = ((code >> complete_edge_index(k, i, j)) & 1U) ? 1 : 0;
        sign[perm[i]][perm[j]] = sign[perm[j]][perm[i]] = s;
      }
    }
    std::uint32_t c = 0;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        const int si = i == 0 ? 0 : sign[0][i];
        const int sj = sign[0][j];
        if (sign[i][j] ^ si ^ sj) c |= 1U << complete_edge_index(k, i, j);
      }
    }
    best = std::min(best, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<SignedGraph> build_targets(int k) {
  const int free_edges = (k - 1) * (k - 2) / 2;
  std::vector<std::uint32_t> codes;
  for (std::uint32_t bits = 0; bits < (1U << free_edges); ++bits) {
    // Spread the free bits over the edges not touching vertex 0.
    std::uint32_t code = 0;
    int b = 0;
    for (int i = 1; i < k; ++i) {
      for (int j = i + 1; j < k; ++j, ++b) {
        if ((bits >> b) & 1U) code |= 1U << complete_edge_index(k, i, j);
      }
    }
    codes.push_back(canonical_complete_code(k, code));
  }
  std::sort(codes.begin(), codes.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<SignedGraph> out;
  for (auto c : codes) out.push_back(complete_from_code(k, c));
  return out;
}

bool colorable(const SignedGraph& g, const std::vector<Vertex>& order, int k, std::vector<int>& color,
               std::size_t i) {
  if (i == order.size()) return true;
  const Vertex v = order[i];
  std::uint32_t used = 0;
  int max_used = -1;
  for (std::size_t j = 0; j < i; ++j) max_used = std::max(max_used, color[order[j]]);
  for (const Neighbor& nb : g.neighbors(v)) {
    if (color[nb.vertex] >= 0) used |= 1U << color[nb.vertex];
  }
  // Colors are interchangeable, so never open more than one new color.
  for (int c = 0; c < k && c <= max_used + 1; ++c) {
    if (used & (1U << c)) continue;
    color[v] = c;
    if (colorable(g, order, k, color, i + 1)) return true;
  }
  color[v] = -1;
  return false;
}

}  // namespace

std::optional<SignedHomomorphism> find_homomorphism(const SignedGraph& g, const SignedGraph& h,
                                                    SearchStats* stats) {
  Solver solver(g, h, nullptr, 0);
  auto hom = solver.run();
  if (stats) stats->nodes += solver.nodes();
  return hom;
}

const std::vector<SignedGraph>& enumerate_targets(int k) {
  if (k < 1 || k > 6) throw Error(ErrorCode::OrderTooLarge, "target order must be between 1 and 6");
  static std::array<std::once_flag, 7> once;
  static std::array<std::vector<SignedGraph>, 7> cache;
  std::call_once(once[k], [k] { cache[k] = build_targets(k); });
  return cache[k];
}

const char* to_string(LowerBoundReason r) noexcept {
  switch (r) {
    case LowerBoundReason::Trivial: return "trivial";
    case LowerBoundReason::UnderlyingExact: return "underlying_exact";
    case LowerBoundReason::UnderlyingClique: return "underlying_clique";
    case LowerBoundReason::RequestedLower: return "requested_lower";
    case LowerBoundReason::TargetsExhausted: return "targets_exhausted";
  }
  return "unknown";
}

int underlying_chromatic_number(const SignedGraph& g) {
  if (g.order() > 20) throw Error(ErrorCode::TooLarge, "exact unsigned chromatic number needs n <= 20");
  if (g.order() == 0) return 0;
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(static_cast<std::size_t>(g.order()));
  for (int k = std::max(1, greedy_clique_size(g));; ++k) {
    std::fill(color.begin(), color.end(), -1);
    if (colorable(g, order, k, color, 0)) return k;
  }
}

int greedy_clique_size(const SignedGraph& g) {
  int best = g.order() > 0 ? 1 : 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> clique{v};
    std::vector<Vertex> candidates;
    for (const Neighbor& nb : g.neighbors(v)) candidates.push_back(nb.vertex);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    for (Vertex c : candidates) {
      bool joins = std::all_of(clique.begin(), clique.end(), [&](Vertex u) { return g.adjacent(u, c); });
      if (joins) clique.push_back(c);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

int greedy_signed_upper_bound(const SignedGraph& g) {
  const int n = g.order();
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<int> flip(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> pair;  // required sign between classes, 0 = free
  int classes = 0;
  // Sign each neighboring class demands of v placed with switch bit s, or
  // nullopt when two neighbors in one class disagree.
  auto demands = [&](Vertex v, int s) -> std::optional<std::vector<int>> {
    std::vector<int> want(static_cast<std::size_t>(classes), 0);
    for (const Neighbor& nb : g.neighbors(v)) {
      const int cu = cls[nb.vertex];
      if (cu < 0) continue;
      const int need = to_int(nb.sign) * (flip[nb.vertex] ? -1 : 1) * (s ? -1 : 1);
      if (want[cu] != 0 && want[cu] != need) return std::nullopt;
      want[cu] = need;
    }
    return want;
  };
  for (Vertex v = 0; v < n; ++v) {
    int chosen = -1;
    int bit = 0;
    std::vector<int> want;
    for (int c = 0; c < classes && chosen < 0; ++c) {
      for (int s = 0; s < 2 && chosen < 0; ++s) {
        auto w = demands(v, s);
        if (!w || (*w)[c] != 0) continue;
        bool ok = true;
        for (int cu = 0; cu < classes && ok; ++cu) ok = (*w)[cu] == 0 || pair[cu][c] == 0 || pair[cu][c] == (*w)[cu];
        if (!ok) continue;
        chosen = c;
        bit = s;
        want = std::move(*w);
      }
    }
    if (chosen < 0) {
      auto w = demands(v, 0);
      // No class, not even a fresh one, can take v; fall back to one class per vertex.
      if (!w) return n;
      for (auto& row : pair) row.push_back(0);
      pair.emplace_back(static_cast<std::size_t>(classes + 1), 0);
      chosen = classes++;
      want = std::move(*w);
      want.push_back(0);
    }
    for (int cu = 0; cu < static_cast<int>(want.size()); ++cu) {
      if (want[cu] != 0) pair[cu][chosen] = pair[chosen][cu] = want[cu];
    }
    cls[v] = chosen;
    flip[v] = bit;
  }
  return classes;
}

ChromaticCertificate chromatic_number(const SignedGraph& g, std::optional<int> lo, std::optional<int> hi) {
  if (g.order() == 0) throw Error(ErrorCode::BadParameter, "graph has no vertices");
  const bool exact = g.order() <= 20;
  const int underlying = exact ? underlying_chromatic_number(g) : greedy_clique_size(g);
  const int start = std::max(underlying, lo.value_or(1));
  const int upper = std::min(greedy_signed_upper_bound(g), g.order());

  ChromaticCertificate cert;
  std::vector<TargetExhaustion> previous;
  for (int k = start;; ++k) {
    if (k > 6 || (hi && k > *hi)) {
      throw BoundExceededError(k, std::max(k, upper),
                               "chromatic number exceeds " +
                                   std::to_string(hi && *hi < 6 ? *hi : std::min(6, k - 1)) +
                                   " (known interval [" + std::to_string(k) + ", " +
                                   std::to_string(std::max(k, upper)) + "])");
    }
    const auto& targets = enumerate_targets(k);
    auto outcomes = search_targets(g, targets);
    for (const auto& o : outcomes) cert.nodes += o.nodes;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (!outcomes[i].hom) continue;
      cert.k = k;
      cert.target = targets[i];
      cert.hom = std::move(*outcomes[i].hom);
      auto& ev = cert.lower_bound_evidence;
      ev.underlying_bound = underlying;
      if (k == 1) {
        ev.reason = LowerBoundReason::Trivial;
      } else if (k > start) {
        ev.reason = LowerBoundReason::TargetsExhausted;
        ev.exhausted = std::move(previous);
      } else if (start > underlying) {
        ev.reason = LowerBoundReason::RequestedLower;
      } else {
        ev.reason = exact ? LowerBoundReason::UnderlyingExact : LowerBoundReason::UnderlyingClique;
      }
      return cert;
    }
    previous.clear();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      previous.push_back(TargetExhaustion{targets[i], outcomes[i].nodes});
    }
  }
}

bool check_certificate(const SignedGraph& g, const ChromaticCertificate& cert) {
  const int k = cert.k;
  if (k < 1 || cert.target.order() != k) return false;
  if (cert.target.size() != static_cast<std::size_t>(k * (k - 1) / 2)) return false;
  if (!validate(g, cert.target, cert.hom)) return false;
  const auto& ev = cert.lower_bound_evidence;
  switch (ev.reason) {
    case LowerBoundReason::Trivial:
      return k == 1;
    case LowerBoundReason::UnderlyingExact:
      return g.order() <= 20 && underlying_chromatic_number(g) == k;
    case LowerBoundReason::UnderlyingClique:
      return greedy_clique_size(g) >= k;
    case LowerBoundReason::RequestedLower:
      return true;
    case LowerBoundReason::TargetsExhausted: {
      if (k < 2 || k - 1 > 6) return false;
      // The record must cover each switching-isomorphism class of K_{k-1}
      // exactly once, and every listed target must really fail.
      const auto& classes = enumerate_targets(k - 1);
      if (ev.exhausted.size() != classes.size()) return false;
      std::vector<char> covered(classes.size(), 0);
      for (const auto& rec : ev.exhausted) {
        if (rec.target.order() != k - 1 ||
            rec.target.size() != static_cast<std::size_t>((k - 1) * (k - 2) / 2)) {
          return false;
        }
        bool matched = false;
        for (std::size_t i = 0; i < classes.size() && !matched; ++i) {
          if (!covered[i] && signed_isomorphic(rec.target, classes[i])) covered[i] = matched = true;
        }
        if (!matched) return false;
        if (find_homomorphism(g, rec.target)) return false;
      }
      return true;
    }
  }
  return false;
}

std::optional<ColoringTarget> coloring_target(const SignedGraph& g, std::span<const int> colors,
                                              const SwitchSet& switch_set) {
  if (colors.size() != static_cast<std::size_t>(g.order()) || switch_set.host_order() != g.order()) {
    throw Error(ErrorCode::BadParameter, "coloring does not match the graph order");
  }
  int c = 0;
  for (int col : colors) {
    if (col < 0) throw Error(ErrorCode::BadParameter, "negative color");
    c = std::max(c, col + 1);
  }
  std::vector<int> need(static_cast<std::size_t>(c) * c, 0);
  for (const Edge& e : g.edges()) {
    const int a = colors[e.u], b = colors[e.v];
    if (a == b) return std::nullopt;
    const int s = to_int(e.sign * switch_set.factor(e.u) * switch_set.factor(e.v));
    int& slot = need[static_cast<std::size_t>(std::min(a, b)) * c + std::max(a, b)];
    if (slot != 0 && slot != s) return std::nullopt;
    slot = s;
  }
  std::vector<Edge> edges;
  for (int a = 0; a < c; ++a) {
    for (int b = a + 1; b < c; ++b) {
      const int s = need[static_cast<std::size_t>(a) * c + b];
      if (s != 0) edges.push_back(Edge{a, b, s > 0 ? Sign::Positive : Sign::Negative});
    }
  }
  return ColoringTarget{SignedGraph::build(c, edges),
                        SignedHomomorphism{std::vector<Vertex>(colors.begin(), colors.end()), switch_set}};
}

SignedHomomorphism product_homomorphism(const SignedHomomorphism& a, const SignedHomomorphism& b,
                                        int b_target_order) {
  const int na = static_cast<int>(a.map.size()), nb = static_cast<int>(b.map.size());
  SignedHomomorphism out{std::vector<Vertex>(static_cast<std::size_t>(na) * nb), SwitchSet(na * nb)};
  for (Vertex x = 0; x < na; ++x) {
    for (Vertex y = 0; y < nb; ++y) {
      out.map[x * nb + y] = a.map[x] * b_target_order + b.map[y];
      out.switch_set.set(x * nb + y, a.switch_set.contains(x) != b.switch_set.contains(y));
    }
  }
  return out;
}

namespace {

// Per-vertex invariant under switching and relabeling.
std::vector<std::pair<int, int>> vertex_invariants(const SignedGraph& g) {
  std::vector<std::pair<int, int>> inv(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    int unbalanced = 0;
    auto nv = g.neighbors(v);
    for (std::size_t a = 0; a < nv.size(); ++a) {
      for (std::size_t b = a + 1; b < nv.size(); ++b) {
        auto s = g.sign(nv[a].vertex, nv[b].vertex);
        if (s && is_negative(nv[a].sign * nv[b].sign * *s)) ++unbalanced;
      }
    }
    inv[v] = {g.degree(v), unbalanced};
  }
  return inv;
}

struct IsoSearch {
  const SignedGraph& g1;
  const SignedGraph& g2;
  std::vector<Vertex> order;
  std::vector<char> is_root;
  std::vector<std::pair<int, int>> inv1, inv2;
  std::vector<Vertex> image;
  std::vector<int> flip;
  std::vector<char> used;

  bool extend(std::size_t i) {
    if (i == order.size()) return true;
    const Vertex v = order[i];
    for (Vertex cand = 0; cand < g2.order(); ++cand) {
      if (used[cand] || inv1[v] != inv2[cand]) continue;
      for (int s = 0; s < (is_root[v] ? 1 : 2); ++s) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
          const Vertex u = order[j];
          auto a = g1.sign(u, v);
          auto b = g2.sign(image[u], cand);
          if (a.has_value() != b.has_value()) {
            ok = false;
          } else if (a) {
            ok = to_int(*a) * (flip[u] ? -1 : 1) * (s ? -1 : 1) == to_int(*b);
          }
        }
        if (!ok) continue;
        image[v] = cand;
        flip[v] = s;
        used[cand] = 1;
        if (extend(i + 1)) return true;
        used[cand] = 0;
      }
    }
    return false;
  }
};

}  // namespace

bool signed_isomorphic(const SignedGraph& g1, const SignedGraph& g2) {
  if (g1.order() > 10 || g2.order() > 10) {
    throw Error(ErrorCode::TooLarge, "signed isomorphism is limited to 10 vertices");
  }
  if (g1.order() != g2.order() || g1.size() != g2.size()) return false;
  IsoSearch s{g1, g2, {}, std::vector<char>(static_cast<std::size_t>(g1.order()), 0), vertex_invariants(g1),
              vertex_invariants(g2), std::vector<Vertex>(static_cast<std::size_t>(g1.order()), -1),
              std::vector<int>(static_cast<std::size_t>(g1.order()), 0),
              std::vector<char>(static_cast<std::size_t>(g1.order()), 0)};
  auto a = s.inv1, b = s.inv2;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return false;
  for (const auto& comp : connected_components(g1)) {
    s.is_root[comp.front()] = 1;
    s.order.insert(s.order.end(), comp.begin(), comp.end());
  }
  return s.extend(0);
}

bool is_s_redundant(const SignedGraph& g, std::span<const Vertex> s) {
  std::vector<char> in_s(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "vertex not in graph");
    in_s[v] = 1;
  }
  for (Vertex z : s) {
    auto nz = g.neighbors(z);
    for (std::size_t a = 0; a < nz.size(); ++a) {
      const Vertex x = nz[a].vertex;
      if (in_s[x]) continue;
      for (std::size_t b = a + 1; b < nz.size(); ++b) {
        const Vertex y = nz[b].vertex;
        if (in_s[y] || g.adjacent(x, y)) continue;
        const Sign path = nz[a].sign * nz[b].sign;
        bool closed = false;
        for (const Neighbor& nw : g.neighbors(x)) {
          const Vertex w = nw.vertex;
          if (in_s[w]) continue;
          auto wy = g.sign(w, y);
          if (wy && nw.sign * *wy * path == Sign::Positive) {
            closed = true;
            break;
          }
        }
        if (!closed) return false;
      }
    }
  }
  return true;
}

int worker_count() {
  if (const char* env = std::getenv("SGW_THREADS")) {
    int value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value >= 1) return value;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace sgw
