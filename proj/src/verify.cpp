#include "sgw/verify.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "sgw/constructions.hpp"
#include "sgw/homomorphism.hpp"
#include "sgw/product.hpp"
#include "sgw/switching.hpp"

namespace sgw {

std::size_t Report::passed() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.pass ? 1 : 0;
  return n;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Exact chi_s of g as a report entry; the certificate is rechecked before the
// entry can pass.
ReportEntry chi_entry(std::string claim, std::string parameters, const SignedGraph& g, int expected) {
  ReportEntry e{std::move(claim), std::move(parameters), expected, -1, false, 0, false, {}};
  const auto start = Clock::now();
  try {
    const ChromaticCertificate cert = chromatic_number(g);
    e.computed = cert.k;
    e.certified = check_certificate(g, cert);
    e.detail = std::string("lower bound: ") + to_string(cert.lower_bound_evidence.reason) +
               ", search nodes: " + std::to_string(cert.nodes);
  } catch (const BoundExceededError& err) {
    e.detail = "interval [" + std::to_string(err.lower()) + ", " + std::to_string(err.upper()) + "]";
  }
  e.elapsed_ms = ms_since(start);
  e.pass = e.certified && e.computed == e.expected;
  return e;
}

// Entry for a yes/no check reported as 1/0.
ReportEntry check_entry(std::string claim, std::string parameters, const std::function<bool(std::string&)>& check) {
  ReportEntry e{std::move(claim), std::move(parameters), 1, 0, false, 0, false, {}};
  const auto start = Clock::now();
  e.computed = check(e.detail) ? 1 : 0;
  e.certified = e.computed == 1;
  e.elapsed_ms = ms_since(start);
  e.pass = e.computed == e.expected;
  return e;
}

struct CycleClassSpec {
  const char* name;
  bool balanced;
  std::array<int, 2> lengths;
};

constexpr std::array<CycleClassSpec, 4> kCycleClasses = {{
    {"BC_even", true, {4, 6}},
    {"BC_odd", true, {3, 5}},
    {"UC_even", false, {4, 6}},
    {"UC_odd", false, {3, 5}},
}};

// Signed chromatic number of C1 x C2 by class, rows C1 and columns C2 in the
// order of kCycleClasses.
constexpr std::array<std::array<int, 4>, 4> kCycleTable = {{
    {2, 3, 4, 3},
    {3, 3, 5, 5},
    {4, 5, 4, 5},
    {3, 5, 5, 3},
}};

SignedGraph make_cycle_of(bool balanced, int n) { return balanced ? make_bc(n) : make_uc(n); }

std::string cycle_label(bool balanced, int n) { return (balanced ? "BC" : "UC") + std::to_string(n); }

}  // namespace

Report verify_cycle_table(int max_len) {
  if (max_len < 3) throw Error(ErrorCode::BadParameter, "max_len must be at least 3");
  const int effective = std::min(max_len, 6);
  Report r{"cycle_table", {}};
  for (std::size_t a = 0; a < kCycleClasses.size(); ++a) {
    for (std::size_t b = 0; b < kCycleClasses.size(); ++b) {
      for (int la : kCycleClasses[a].lengths) {
        if (la > effective) continue;
        for (int lb : kCycleClasses[b].lengths) {
          if (lb > effective) continue;
          const SignedGraph g1 = make_cycle_of(kCycleClasses[a].balanced, la);
          const SignedGraph g2 = make_cycle_of(kCycleClasses[b].balanced, lb);
          const std::string params = cycle_label(kCycleClasses[a].balanced, la) + " x " +
                                     cycle_label(kCycleClasses[b].balanced, lb) + " (" + kCycleClasses[a].name +
                                     " x " + kCycleClasses[b].name + ")";
          r.entries.push_back(chi_entry("cycle_table", params, cartesian_product(g1, g2).graph, kCycleTable[a][b]));
        }
      }
    }
  }
  if (max_len > 6) {
    throw GuardExceededError("cycle table is limited to cycles of length 6; stopped after length 6", r);
  }
  return r;
}

Report verify_kpq(std::span<const std::pair<int, int>> pairs) {
  Report r{"kpq", {}};
  for (auto [p, q] : pairs) {
    if (p < 2 || q < 2) throw Error(ErrorCode::BadParameter, "p and q must be at least 2");
    if (p * q > 12) {
      throw GuardExceededError("K_p^+ x K_q^- is limited to pq <= 12; refused (" + std::to_string(p) + ", " +
                                   std::to_string(q) + ")",
                               r);
    }
    const SignedGraph g = cartesian_product(make_k_plus(p), make_k_minus(q)).graph;
    const int expected = (p * q + 1) / 2;
    const std::string params = "p=" + std::to_string(p) + " q=" + std::to_string(q);

    ReportEntry upper{"kpq_upper", params, expected, -1, false, 0, false, {}};
    const auto start = Clock::now();
    const Coloring coloring = kpq_coloring(p, q);
    auto induced = coloring_target(g, coloring.colors, coloring.switch_set);
    upper.certified = induced && validate(g, induced->target, induced->hom);
    upper.computed = coloring.color_count;
    upper.detail = upper.certified ? "coloring validates as a homomorphism onto its induced target"
                                   : "coloring does not validate";
    upper.elapsed_ms = ms_since(start);
    upper.pass = upper.certified && upper.computed == expected;
    r.entries.push_back(upper);

    r.entries.push_back(chi_entry("kpq_exact", params, g, expected));
  }
  return r;
}

Report verify_kpq(int max_p, int max_q) {
  std::vector<std::pair<int, int>> pairs;
  for (int p = 2; p <= max_p; ++p) {
    for (int q = 2; q <= max_q; ++q) pairs.emplace_back(p, q);
  }
  return verify_kpq(pairs);
}

Report verify_kpq_default() {
  const std::array<std::pair<int, int>, 6> pairs = {{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {4, 3}}};
  return verify_kpq(pairs);
}

Report verify_uc_bc_gap(int max_q, int max_r) {
  if (max_q < 3 || max_r < 3) throw Error(ErrorCode::BadParameter, "cycle lengths must be at least 3");
  Report r{"uc_bc_gap", {}};
  for (int q = 3; q <= max_q; ++q) {
    for (int len = 3; len <= max_r; len += 2) {
      if (q * len > 30) {
        throw GuardExceededError("UC_q x BC_r is limited to 30 vertices; refused UC" + std::to_string(q) + " x BC" +
                                     std::to_string(len),
                                 r);
      }
      // Both unbalanced classes times an odd balanced cycle need exactly 5.
      ReportEntry e = chi_entry("uc_bc_gap", "UC" + std::to_string(q) + " x BC" + std::to_string(len),
                                cartesian_product(make_uc(q), make_bc(len)).graph, 5);
      e.detail += e.computed > 4 ? "; more than 4 colors" : "; at most 4 colors";
      r.entries.push_back(std::move(e));
    }
  }
  return r;
}

Report verify_grid_fig1c() {
  Report r{"grid_fig1c", {}};
  const SignedGraph grid = make_grid_fig1c();
  r.entries.push_back(chi_entry("grid_chi", "3x4 grid with chromatic number 5", grid, 5));

  const std::vector<Sign> pos_h(9, Sign::Positive), pos_v(8, Sign::Positive);
  r.entries.push_back(chi_entry("grid_chi", "all-positive 3x4 grid", make_grid(3, 4, pos_h, pos_v), 2));

  r.entries.push_back(check_entry("grid_hom_spal5star", "3x4 grid with chromatic number 5", [&](std::string& detail) {
    const SignedHomomorphism hom = grid_hom_spal5star(grid, 3, 4);
    detail = "cell-by-cell construction into SPal5_star";
    return validate(grid, make_spal5_star(), hom);
  }));
  r.entries.push_back(check_entry("grid4_hom_spal5", "3x4 grid with chromatic number 5", [&](std::string& detail) {
    const SignedHomomorphism hom = grid4_hom_spal5(grid, 3, 4);
    detail = "column-by-column construction into SPal5";
    return validate(grid, make_spal5(), hom);
  }));
  return r;
}

Report verify_k4_classes() {
  Report r{"k4_classes", {}};
  ReportEntry e{"k4_classes", "all 64 signatures of K4", 3, 0, false, 0, false, {}};
  const auto start = Clock::now();
  std::vector<SignedGraph> reps;
  for (int code = 0; code < 64; ++code) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j, ++bit) {
        edges.push_back(Edge{i, j, (code >> bit) & 1 ? Sign::Negative : Sign::Positive});
      }
    }
    const SignedGraph g = SignedGraph::build(4, edges);
    bool known = false;
    for (const auto& rep : reps) {
      if (signed_isomorphic(g, rep)) {
        known = true;
        break;
      }
    }
    if (!known) reps.push_back(g);
  }
  e.computed = static_cast<int>(reps.size());
  // The classes must be exactly those of K4+, K4- and K4_mixed.
  const std::array<SignedGraph, 3> named = {make_k_plus(4), make_k_minus(4), make_k4_mixed()};
  bool distinct = true;
  for (std::size_t i = 0; i < named.size(); ++i) {
    for (std::size_t j = i + 1; j < named.size(); ++j) distinct = distinct && !signed_isomorphic(named[i], named[j]);
  }
  e.certified = distinct && reps.size() == named.size();
  e.detail = distinct ? "classes of K4+, K4- and K4_mixed are pairwise distinct" : "named representatives collide";
  e.elapsed_ms = ms_since(start);
  e.pass = e.certified && e.computed == e.expected;
  r.entries.push_back(e);

  r.entries.push_back(check_entry("k4_targets", "enumerated order-4 targets", [&](std::string& detail) {
    const auto& targets = enumerate_targets(4);
    detail = std::to_string(targets.size()) + " targets";
    return targets.size() == 3;
  }));
  return r;
}

Report verify_k18() {
  Report r{"k18", {}};
  ReportEntry e{"k18_times_k2", "K18 x K2", 25, -1, false, 0, false, {}};
  const auto start = Clock::now();
  const SignedGraph g = cartesian_product(make_k18(), make_k_plus(2)).graph;
  const int lower = greedy_clique_size(g);
  const int upper = greedy_signed_upper_bound(g);
  if (lower == upper) e.computed = lower;
  e.detail = "exact search is out of reach; known interval [" + std::to_string(lower) + ", " +
             std::to_string(upper) + "]";
  e.elapsed_ms = ms_since(start);
  e.pass = false;
  r.entries.push_back(e);
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "suite " << r.suite << '\n';
  for (const auto& e : r.entries) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", e.elapsed_ms);
    out << (e.pass ? "PASS " : "FAIL ") << e.claim << " [" << e.parameters << "] expected " << e.expected
        << " computed " << e.computed << (e.certified ? " certified" : " uncertified") << " (" << ms << " ms)";
    if (!e.detail.empty()) out << " - " << e.detail;
    out << '\n';
  }
  out << r.passed() << "/" << r.entries.size() << " passed\n";
  return out.str();
}

std::string render_json(const Report& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"claim", e.claim},
                       {"parameters", e.parameters},
                       {"expected", e.expected},
                       {"computed", e.computed},
                       {"pass", e.pass},
                       {"elapsed_ms", e.elapsed_ms},
                       {"certified", e.certified},
                       {"detail", e.detail}});
  }
  nlohmann::json doc = {{"suite", r.suite},
                        {"entries", entries},
                        {"summary", {{"total", r.entries.size()}, {"passed", r.passed()}, {"failed", r.failed()}}}};
  return doc.dump(2);
}

}  // namespace sgw
