#include "sgw/sgw.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "sgw/constructions.hpp"
#include "sgw/homomorphism.hpp"
#include "sgw/io.hpp"
#include "sgw/product.hpp"
#include "sgw/s_factor.hpp"
#include "sgw/switching.hpp"
#include "sgw/verify.hpp"

struct sgw_graph {
  sgw::SignedGraph graph;
  std::vector<std::string> names;
};

struct sgw_decomposition {
  sgw::SDecomposition decomposition;
};

namespace {

thread_local std::string last_error;

sgw_status status_of(sgw::ErrorCode code) {
  using sgw::ErrorCode;
  switch (code) {
    case ErrorCode::Parse:
      return SGW_ERR_PARSE;
    case ErrorCode::LoopEdge:
    case ErrorCode::DuplicateEdge:
    case ErrorCode::VertexOutOfRange:
    case ErrorCode::BadSign:
      return SGW_ERR_INVALID_GRAPH;
    case ErrorCode::NotAWalk:
    case ErrorCode::DifferentUnderlyingGraph:
    case ErrorCode::NotACycle:
    case ErrorCode::EmptyList:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::Disconnected:
    case ErrorCode::NoEdges:
    case ErrorCode::NotAGrid:
    case ErrorCode::TooManyRows:
      return SGW_ERR_PRECONDITION;
    case ErrorCode::OrderTooLarge:
    case ErrorCode::TooLarge:
      return SGW_ERR_TOO_LARGE;
    case ErrorCode::BoundExceeded:
      return SGW_ERR_BOUND_EXCEEDED;
    case ErrorCode::GuardExceeded:
      return SGW_ERR_GUARD_EXCEEDED;
    case ErrorCode::BadParameter:
      return SGW_ERR_ARGUMENT;
    case ErrorCode::InternalInvariantViolation:
      return SGW_ERR_INTERNAL;
  }
  return SGW_ERR_INTERNAL;
}

sgw_status fail(sgw_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs f, translating exceptions into status codes.
template <typename F>
sgw_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const sgw::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SGW_ERR_ALLOC, "out of memory");
  } catch (const std::exception& e) {
    return fail(SGW_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void put_string(char** out, const std::string& s) {
  if (out) *out = dup_string(s);
}

sgw_status null_argument(const char* name) { return fail(SGW_ERR_ARGUMENT, std::string(name) + " is NULL"); }

}  // namespace

extern "C" {

const char* sgw_status_string(sgw_status status) {
  switch (status) {
    case SGW_OK: return "ok";
    case SGW_ERR_ARGUMENT: return "invalid argument";
    case SGW_ERR_PARSE: return "parse error";
    case SGW_ERR_INVALID_GRAPH: return "invalid graph";
    case SGW_ERR_PRECONDITION: return "precondition violated";
    case SGW_ERR_BOUND_EXCEEDED: return "bound exceeded";
    case SGW_ERR_GUARD_EXCEEDED: return "guard exceeded";
    case SGW_ERR_TOO_LARGE: return "input too large";
    case SGW_ERR_INTERNAL: return "internal error";
    case SGW_ERR_ALLOC: return "out of memory";
  }
  return "unknown status";
}

const char* sgw_last_error(void) { return last_error.c_str(); }

void sgw_string_free(char* s) { std::free(s); }

sgw_status sgw_graph_parse(const char* text, sgw_graph** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  return guarded([&] {
    sgw::GraphFile file = sgw::parse_graph_file(text);
    *out = new sgw_graph{std::move(file.graph), std::move(file.names)};
    return SGW_OK;
  });
}

sgw_status sgw_graph_from_edges(int order, const int* u, const int* v, const int* sign, size_t count,
                                sgw_graph** out) {
  if (count > 0 && (!u || !v || !sign)) return null_argument("edge arrays");
  if (!out) return null_argument("out");
  if (order < 0) return fail(SGW_ERR_ARGUMENT, "order must be non-negative");
  return guarded([&] {
    std::vector<sgw::SignedGraph::RawEdge> edges;
    for (size_t i = 0; i < count; ++i) edges.push_back({u[i], v[i], sign[i]});
    *out = new sgw_graph{sgw::SignedGraph::build_raw(order, edges), {}};
    return SGW_OK;
  });
}

sgw_status sgw_make(const char* spec, sgw_graph** out) {
  if (!spec) return null_argument("spec");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new sgw_graph{sgw::make(spec), {}};
    return SGW_OK;
  });
}

void sgw_graph_free(sgw_graph* g) { delete g; }

int sgw_graph_order(const sgw_graph* g) { return g ? g->graph.order() : -1; }

size_t sgw_graph_size(const sgw_graph* g) { return g ? g->graph.size() : 0; }

sgw_status sgw_graph_edge(const sgw_graph* g, size_t index, int* u, int* v, int* sign) {
  if (!g) return null_argument("graph");
  if (index >= g->graph.size()) return fail(SGW_ERR_ARGUMENT, "edge index out of range");
  const sgw::Edge& e = g->graph.edges()[index];
  if (u) *u = e.u;
  if (v) *v = e.v;
  if (sign) *sign = sgw::to_int(e.sign);
  return SGW_OK;
}

sgw_status sgw_graph_to_text(const sgw_graph* g, char** out) {
  if (!g) return null_argument("graph");
  if (!out) return null_argument("out");
  return guarded([&] {
    put_string(out, sgw::format_graph_file(g->graph, g->names));
    return SGW_OK;
  });
}

sgw_status sgw_graph_to_json(const sgw_graph* g, char** out) {
  if (!g) return null_argument("graph");
  if (!out) return null_argument("out");
  return guarded([&] {
    put_string(out, sgw::graph_to_json(g->graph));
    return SGW_OK;
  });
}

sgw_status sgw_product(const sgw_graph* const* graphs, size_t count, sgw_graph** out, char** coords_json) {
  if (count > 0 && !graphs) return null_argument("graphs");
  if (!out) return null_argument("out");
  return guarded([&] {
    std::vector<sgw::SignedGraph> factors;
    for (size_t i = 0; i < count; ++i) {
      if (!graphs[i]) return null_argument("graph");
      factors.push_back(graphs[i]->graph);
    }
    sgw::Product p = sgw::product_many(factors);
    std::string coords = sgw::coords_to_json(p.coords);
    *out = new sgw_graph{std::move(p.graph), {}};
    put_string(coords_json, coords);
    return SGW_OK;
  });
}

sgw_status sgw_decompose(const sgw_graph* g, sgw_decomposition** out) {
  if (!g) return null_argument("graph");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new sgw_decomposition{sgw::s_decompose(g->graph)};
    return SGW_OK;
  });
}

size_t sgw_decomposition_factor_count(const sgw_decomposition* d) {
  return d ? d->decomposition.factors.size() : 0;
}

sgw_status sgw_decomposition_factor(const sgw_decomposition* d, size_t index, sgw_graph** out) {
  if (!d) return null_argument("decomposition");
  if (!out) return null_argument("out");
  if (index >= d->decomposition.factors.size()) return fail(SGW_ERR_ARGUMENT, "factor index out of range");
  return guarded([&] {
    *out = new sgw_graph{d->decomposition.factors[index], {}};
    return SGW_OK;
  });
}

sgw_status sgw_decomposition_to_json(const sgw_decomposition* d, char** out) {
  if (!d) return null_argument("decomposition");
  if (!out) return null_argument("out");
  return guarded([&] {
    put_string(out, sgw::decomposition_to_json(d->decomposition));
    return SGW_OK;
  });
}

void sgw_decomposition_free(sgw_decomposition* d) { delete d; }

sgw_status sgw_is_s_prime(const sgw_graph* g, int* s_prime) {
  if (!g) return null_argument("graph");
  if (!s_prime) return null_argument("s_prime");
  return guarded([&] {
    *s_prime = sgw::is_s_prime(g->graph) ? 1 : 0;
    return SGW_OK;
  });
}

sgw_status sgw_equivalent(const sgw_graph* a, const sgw_graph* b, int* equivalent, char** switch_set_json) {
  if (!a || !b) return null_argument("graph");
  if (!equivalent) return null_argument("equivalent");
  return guarded([&] {
    auto x = sgw::equivalent(a->graph, b->graph);
    *equivalent = x ? 1 : 0;
    if (x) put_string(switch_set_json, sgw::switch_set_to_json(*x));
    return SGW_OK;
  });
}

sgw_status sgw_balance(const sgw_graph* g, int* balanced, char** witness_json) {
  if (!g) return null_argument("graph");
  if (!balanced) return null_argument("balanced");
  return guarded([&] {
    const sgw::BalanceResult r = sgw::is_balanced(g->graph);
    *balanced = r.balanced ? 1 : 0;
    put_string(witness_json, sgw::balance_to_json(r));
    return SGW_OK;
  });
}

sgw_status sgw_chromatic_number(const sgw_graph* g, int lo, int hi, int* k, char** certificate_json,
                                int* interval_lo, int* interval_hi) {
  if (!g) return null_argument("graph");
  if (!k) return null_argument("k");
  return guarded([&] {
    try {
      const sgw::ChromaticCertificate cert = sgw::chromatic_number(
          g->graph, lo > 0 ? std::optional<int>(lo) : std::nullopt, hi > 0 ? std::optional<int>(hi) : std::nullopt);
      *k = cert.k;
      if (interval_lo) *interval_lo = cert.k;
      if (interval_hi) *interval_hi = cert.k;
      put_string(certificate_json, sgw::certificate_to_json(cert));
      return SGW_OK;
    } catch (const sgw::BoundExceededError& e) {
      if (interval_lo) *interval_lo = e.lower();
      if (interval_hi) *interval_hi = e.upper();
      return fail(SGW_ERR_BOUND_EXCEEDED, e.what());
    }
  });
}

sgw_status sgw_check_certificate(const sgw_graph* g, const char* certificate_json, int* valid) {
  if (!g) return null_argument("graph");
  if (!certificate_json) return null_argument("certificate_json");
  if (!valid) return null_argument("valid");
  return guarded([&] {
    *valid = sgw::check_certificate(g->graph, sgw::certificate_from_json(certificate_json)) ? 1 : 0;
    return SGW_OK;
  });
}

sgw_status sgw_verify(const char* suite, const int* params, size_t param_count, int unbounded, char** text,
                      char** json, int* all_passed) {
  if (!suite) return null_argument("suite");
  if (param_count > 0 && !params) return null_argument("params");
  const std::string name = suite;
  auto emit = [&](const sgw::Report& r) {
    put_string(text, sgw::render_text(r));
    put_string(json, sgw::render_json(r));
    if (all_passed) *all_passed = r.all_passed() ? 1 : 0;
  };
  auto param = [&](size_t i, int fallback) { return i < param_count ? params[i] : fallback; };
  return guarded([&] {
    try {
      sgw::Report report;
      if (name == "cycle_table") {
        report = sgw::verify_cycle_table(param(0, 6));
      } else if (name == "kpq") {
        report = param_count >= 2 ? sgw::verify_kpq(params[0], params[1]) : sgw::verify_kpq_default();
      } else if (name == "uc_bc_gap") {
        report = sgw::verify_uc_bc_gap(param(0, 4), param(1, 5));
      } else if (name == "grid_fig1c") {
        report = sgw::verify_grid_fig1c();
      } else if (name == "k4_classes") {
        report = sgw::verify_k4_classes();
      } else if (name == "k18") {
        if (!unbounded) {
          return fail(SGW_ERR_GUARD_EXCEEDED, "the K18 suite is beyond desk scale; pass the unbounded flag to run it");
        }
        report = sgw::verify_k18();
      } else if (name == "all") {
        report.suite = "all";
        for (const sgw::Report& part : {sgw::verify_k4_classes(), sgw::verify_grid_fig1c(),
                                        sgw::verify_kpq_default(), sgw::verify_uc_bc_gap(4, 5),
                                        sgw::verify_cycle_table(6)}) {
          report.entries.insert(report.entries.end(), part.entries.begin(), part.entries.end());
        }
      } else {
        return fail(SGW_ERR_ARGUMENT, "unknown suite '" + name + "'");
      }
      emit(report);
      return SGW_OK;
    } catch (const sgw::GuardExceededError& e) {
      emit(e.partial());
      if (all_passed) *all_passed = 0;
      return fail(SGW_ERR_GUARD_EXCEEDED, e.what());
    }
  });
}

}  // extern "C"
