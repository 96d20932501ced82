#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sgw/error.hpp"

namespace sgw {

struct ReportEntry {
  std::string claim;       // short identifier, e.g. "cycle_table"
  std::string parameters;  // e.g. "UC4 x BC3"
  int expected = 0;
  int computed = 0;
  bool pass = false;       // expected == computed and the certificate rechecked
  double elapsed_ms = 0;
  bool certified = false;  // certificate (homomorphism or exhaustion record) rechecked
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<ReportEntry> entries;

  std::size_t passed() const;
  std::size_t failed() const { return entries.size() - passed(); }
  bool all_passed() const { return passed() == entries.size(); }
};

/// A runtime guard refused part of the request. Carries the entries that were
/// within the guard and completed.
class GuardExceededError : public Error {
 public:
  GuardExceededError(const std::string& what, Report partial)
      : Error(ErrorCode::GuardExceeded, what), partial_(std::move(partial)) {}

  const Report& partial() const noexcept { return partial_; }

 private:
  Report partial_;
};

/// Signed chromatic number of every product of two cycle classes, each class
/// realized by its representatives of length <= max_len, against the table
/// of expected values. 3 <= max_len; above 6 the guard trips.
Report verify_cycle_table(int max_len);

/// ceil(pq/2) for K_p^+ x K_q^-: constructive coloring for the upper bound and
/// exhaustive search for the lower bound. Pairs need pq <= 12.
Report verify_kpq(std::span<const std::pair<int, int>> pairs);
/// All pairs 2 <= p <= max_p, 2 <= q <= max_q.
Report verify_kpq(int max_p, int max_q);
/// The six pairs (2,2), (2,3), (3,2), (3,3), (4,2), (4,3).
Report verify_kpq_default();

/// UC_q x BC_r needs more than 4 colors for 3 <= q <= max_q and odd
/// 3 <= r <= max_r. Products are limited to 30 vertices.
Report verify_uc_bc_gap(int max_q, int max_r);

/// The 3 x 4 grid with chromatic number exactly 5, plus the two grid
/// homomorphism constructions on it.
Report verify_grid_fig1c();

/// The 64 signatures of K4 fall into exactly 3 classes.
Report verify_k4_classes();

/// K18 x K2: reports the interval reachable without the exact search. Not
/// part of acceptance; expect it to fail.
Report verify_k18();

std::string render_text(const Report& r);
std::string render_json(const Report& r);

}  // namespace sgw
