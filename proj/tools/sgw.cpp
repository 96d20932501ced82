// sgw: command line front end for the signed graph library.
//
// Exit codes: 0 success, 1 usage, 2 parse or invariant failure, 3 negative
// mathematical answer, 4 guard, bound or size cap exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgw/sgw.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kFailure = 2, kNegative = 3, kLimit = 4 };

struct Failure {
  int code;
  std::string message;
};

int exit_code(sgw_status s) {
  switch (s) {
    case SGW_OK:
      return kOk;
    case SGW_ERR_ARGUMENT:
      return kUsage;
    case SGW_ERR_BOUND_EXCEEDED:
    case SGW_ERR_GUARD_EXCEEDED:
    case SGW_ERR_TOO_LARGE:
      return kLimit;
    default:
      return kFailure;
  }
}

void check(sgw_status s) {
  if (s != SGW_OK) throw Failure{exit_code(s), std::string(sgw_status_string(s)) + ": " + sgw_last_error()};
}

struct GraphDeleter {
  void operator()(sgw_graph* g) const { sgw_graph_free(g); }
};
struct DecompositionDeleter {
  void operator()(sgw_decomposition* d) const { sgw_decomposition_free(d); }
};
using GraphPtr = std::unique_ptr<sgw_graph, GraphDeleter>;
using DecompositionPtr = std::unique_ptr<sgw_decomposition, DecompositionDeleter>;

// Owns a string returned by the library.
class Owned {
 public:
  Owned() = default;
  Owned(const Owned&) = delete;
  Owned& operator=(const Owned&) = delete;
  ~Owned() { sgw_string_free(p_); }
  char** out() { return &p_; }
  std::string str() const { return p_ ? std::string(p_) : std::string(); }

 private:
  char* p_ = nullptr;
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kUsage, "cannot write '" + path + "'"};
  out << text;
}

std::string with_newline(std::string s) {
  if (s.empty() || s.back() != '\n') s.push_back('\n');
  return s;
}

GraphPtr load_graph(const std::string& path) {
  const std::string text = read_input(path);
  sgw_graph* g = nullptr;
  const sgw_status s = sgw_graph_parse(text.c_str(), &g);
  if (s != SGW_OK) throw Failure{exit_code(s), path + ": " + sgw_last_error()};
  return GraphPtr(g);
}

std::string graph_text(const sgw_graph* g) {
  Owned text;
  check(sgw_graph_to_text(g, text.out()));
  return text.str();
}

int cmd_product(const std::vector<std::string>& files, const std::string& output, const std::string& coords_path) {
  std::vector<GraphPtr> graphs;
  std::vector<const sgw_graph*> raw;
  for (const auto& f : files) {
    graphs.push_back(load_graph(f));
    raw.push_back(graphs.back().get());
  }
  sgw_graph* out = nullptr;
  Owned coords;
  check(sgw_product(raw.data(), raw.size(), &out, coords.out()));
  GraphPtr product(out);
  write_output(output, graph_text(product.get()));
  if (!coords_path.empty()) write_output(coords_path, with_newline(coords.str()));
  return kOk;
}

int cmd_decompose(const std::string& file, const std::string& prefix) {
  GraphPtr g = load_graph(file);
  sgw_decomposition* raw = nullptr;
  check(sgw_decompose(g.get(), &raw));
  DecompositionPtr d(raw);
  if (!prefix.empty()) {
    const std::size_t n = sgw_decomposition_factor_count(d.get());
    for (std::size_t i = 0; i < n; ++i) {
      sgw_graph* f = nullptr;
      check(sgw_decomposition_factor(d.get(), i, &f));
      GraphPtr factor(f);
      write_output(prefix + std::to_string(i) + ".sg", graph_text(factor.get()));
    }
  }
  Owned json;
  check(sgw_decomposition_to_json(d.get(), json.out()));
  std::cout << with_newline(json.str());
  return kOk;
}

int cmd_prime(const std::string& file) {
  GraphPtr g = load_graph(file);
  int prime = 0;
  check(sgw_is_s_prime(g.get(), &prime));
  std::cout << (prime ? "s-prime" : "not s-prime") << '\n';
  return kOk;
}

int cmd_chi(const std::string& file, int lo, int hi, const std::string& cert_path) {
  GraphPtr g = load_graph(file);
  int k = 0;
  int ilo = 0;
  int ihi = 0;
  Owned cert;
  const sgw_status s = sgw_chromatic_number(g.get(), lo, hi, &k, cert.out(), &ilo, &ihi);
  if (s == SGW_ERR_BOUND_EXCEEDED) {
    std::cerr << "sgw: " << sgw_last_error() << '\n';
    std::cout << "interval " << ilo << ' ' << ihi << '\n';
    return kLimit;
  }
  check(s);
  std::cout << k << '\n';
  if (!cert_path.empty()) write_output(cert_path, with_newline(cert.str()));
  return kOk;
}

int cmd_check(const std::string& file, const std::string& cert_path) {
  GraphPtr g = load_graph(file);
  const std::string cert = read_input(cert_path);
  int valid = 0;
  check(sgw_check_certificate(g.get(), cert.c_str(), &valid));
  std::cout << (valid ? "valid" : "invalid") << '\n';
  return valid ? kOk : kNegative;
}

int cmd_equiv(const std::string& a_path, const std::string& b_path) {
  GraphPtr a = load_graph(a_path);
  GraphPtr b = load_graph(b_path);
  int eq = 0;
  Owned set;
  check(sgw_equivalent(a.get(), b.get(), &eq, set.out()));
  if (!eq) {
    std::cout << "not equivalent\n";
    return kNegative;
  }
  std::cout << with_newline(set.str());
  return kOk;
}

int cmd_balance(const std::string& file) {
  GraphPtr g = load_graph(file);
  int balanced = 0;
  Owned witness;
  check(sgw_balance(g.get(), &balanced, witness.out()));
  std::cout << (balanced ? "balanced" : "unbalanced") << '\n' << with_newline(witness.str());
  return kOk;
}

int cmd_make(const std::string& name, const std::vector<int>& params, const std::string& output) {
  std::string spec = name;
  if (!params.empty()) {
    spec += '(';
    for (std::size_t i = 0; i < params.size(); ++i) spec += (i ? "," : "") + std::to_string(params[i]);
    spec += ')';
  }
  sgw_graph* raw = nullptr;
  check(sgw_make(spec.c_str(), &raw));
  GraphPtr g(raw);
  write_output(output, graph_text(g.get()));
  return kOk;
}

int cmd_verify(const std::string& suite, const std::vector<int>& params, bool unbounded,
               const std::string& json_path) {
  Owned text;
  Owned json;
  int all_passed = 0;
  const sgw_status s =
      sgw_verify(suite.c_str(), params.data(), params.size(), unbounded ? 1 : 0, text.out(), json.out(), &all_passed);
  std::cout << text.str();
  if (!json_path.empty() && !json.str().empty()) write_output(json_path, with_newline(json.str()));
  if (s == SGW_ERR_GUARD_EXCEEDED) {
    std::cerr << "sgw: " << sgw_last_error() << '\n';
    return kLimit;
  }
  check(s);
  return all_passed ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed graph products, decomposition, switching and chromatic numbers"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string file;
  std::string file2;
  std::string output;
  std::string extra;
  std::string name;
  std::vector<int> params;
  int lo = 0;
  int hi = 0;
  bool unbounded = false;
  int code = kOk;

  auto* product = app.add_subcommand("product", "Cartesian product of graph files");
  product->add_option("files", files, "Factor graph files ('-' for stdin)")->required();
  product->add_option("-o,--output", output, "Product graph file (default stdout)");
  product->add_option("--coords", extra, "Write the coordinate JSON here");

  auto* decompose = app.add_subcommand("decompose", "Prime s-decomposition; prints the decomposition JSON");
  decompose->add_option("file", file, "Graph file ('-' for stdin)")->required();
  decompose->add_option("--prefix", extra, "Write factor i to <prefix><i>.sg");

  auto* prime = app.add_subcommand("prime", "Decide whether a graph is s-prime");
  prime->add_option("file", file, "Graph file ('-' for stdin)")->required();

  auto* chi = app.add_subcommand("chi", "Exact signed chromatic number");
  chi->add_option("file", file, "Graph file ('-' for stdin)")->required();
  chi->add_option("--lo", lo, "Start the search at this k")->check(CLI::PositiveNumber);
  chi->add_option("--hi", hi, "Give up above this k")->check(CLI::PositiveNumber);
  chi->add_option("--certificate", extra, "Write the certificate JSON here ('-' for stdout)");

  auto* check_cmd = app.add_subcommand("check", "Re-check a chromatic certificate against a graph");
  check_cmd->add_option("file", file, "Graph file")->required();
  check_cmd->add_option("certificate", file2, "Certificate JSON file")->required();

  auto* equiv = app.add_subcommand("equiv", "Switching equivalence of two graphs on the same underlying graph");
  equiv->add_option("first", file, "Graph file")->required();
  equiv->add_option("second", file2, "Graph file")->required();

  auto* balance = app.add_subcommand("balance", "Balance test with a switch set or an unbalanced cycle");
  balance->add_option("file", file, "Graph file ('-' for stdin)")->required();

  auto* make = app.add_subcommand("make", "Emit a named construction, e.g. 'make UC 5'");
  make->add_option("name", name, "Construction name")->required();
  make->add_option("params", params, "Integer parameters");
  make->add_option("-o,--output", output, "Graph file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", name, "cycle_table, kpq, uc_bc_gap, grid_fig1c, k4_classes, k18 or all")->required();
  verify->add_option("params", params, "Suite parameters");
  verify->add_flag("--unbounded", unbounded, "Allow suites beyond desk scale (k18)");
  verify->add_option("--json", extra, "Write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*product) code = cmd_product(files, output, extra);
    else if (*decompose) code = cmd_decompose(file, extra);
    else if (*prime) code = cmd_prime(file);
    else if (*chi) code = cmd_chi(file, lo, hi, extra);
    else if (*check_cmd) code = cmd_check(file, file2);
    else if (*equiv) code = cmd_equiv(file, file2);
    else if (*balance) code = cmd_balance(file);
    else if (*make) code = cmd_make(name, params, output);
    else if (*verify) code = cmd_verify(name, params, unbounded, extra);
  } catch (const Failure& f) {
    std::cerr << "sgw: " << f.message << '\n';
    return f.code;
  }
  std::cout.flush();
  return code;
}
