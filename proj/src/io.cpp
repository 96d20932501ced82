#include "sgw/io.hpp"

#include <charconv>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace sgw {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool parse_int(std::string_view s, int& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

struct EdgeLine {
  std::size_t line;
  std::string_view u, v;
  Sign sign;
};

}  // namespace

GraphFile parse_graph_file(std::string_view text) {
  std::size_t line_no = 0;
  int n = -1;
  std::vector<EdgeLine> lines;
  bool names_mode = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (n < 0) {
      if (tokens.size() != 2 || tokens[0] != "sg" || !parse_int(tokens[1], n) || n < 0) {
        parse_error(line_no, "expected header 'sg <n>'");
      }
      continue;
    }
    if (tokens.size() != 3) parse_error(line_no, "expected '<u> <v> <+|->'");
    Sign s;
    if (tokens[2] == "+") {
      s = Sign::Positive;
    } else if (tokens[2] == "-") {
      s = Sign::Negative;
    } else {
      parse_error(line_no, "sign must be '+' or '-'");
    }
    int dummy;
    if (!parse_int(tokens[0], dummy) || !parse_int(tokens[1], dummy)) names_mode = true;
    lines.push_back(EdgeLine{line_no, tokens[0], tokens[1], s});
  }
  if (n < 0) parse_error(line_no, "missing header 'sg <n>'");

  GraphFile out;
  std::vector<Edge> edges;
  std::unordered_map<std::string_view, int> ids;
  auto vertex = [&](std::string_view tok, std::size_t line) {
    if (names_mode) {
      auto [it, inserted] = ids.emplace(tok, static_cast<int>(out.names.size()));
      if (inserted) {
        if (static_cast<int>(out.names.size()) == n) parse_error(line, "more than " + std::to_string(n) + " vertex names");
        out.names.emplace_back(tok);
      }
      return it->second;
    }
    int id = 0;
    parse_int(tok, id);
    if (id < 0 || id >= n) parse_error(line, "vertex " + std::string(tok) + " out of range");
    return id;
  };
  for (const auto& l : lines) {
    const int u = vertex(l.u, l.line);
    const int v = vertex(l.v, l.line);
    edges.push_back(Edge{u, v, l.sign});
  }
  if (names_mode && static_cast<int>(out.names.size()) != n) {
    parse_error(line_no, "expected " + std::to_string(n) + " vertex names, found " + std::to_string(out.names.size()));
  }
  out.graph = SignedGraph::build(n, edges);
  return out;
}

std::string format_graph_file(const SignedGraph& g, const std::vector<std::string>& names) {
  if (!names.empty() && names.size() != static_cast<std::size_t>(g.order())) {
    throw Error(ErrorCode::BadParameter, "need one name per vertex");
  }
  std::ostringstream out;
  out << "sg " << g.order() << '\n';
  for (const Edge& e : g.edges()) {
    if (names.empty()) {
      out << e.u << ' ' << e.v;
    } else {
      out << names[e.u] << ' ' << names[e.v];
    }
    out << ' ' << (is_negative(e.sign) ? '-' : '+') << '\n';
  }
  return out.str();
}

namespace {

json graph_json(const SignedGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, to_int(e.sign)});
  return {{"order", g.order()}, {"edges", edges}};
}

SignedGraph graph_of(const json& j) {
  std::vector<SignedGraph::RawEdge> edges;
  for (const auto& e : j.at("edges")) {
    edges.push_back(SignedGraph::RawEdge{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
  }
  return SignedGraph::build_raw(j.at("order").get<int>(), edges);
}

json coords_json(const CoordinateSystem& cs) {
  json orders = json::array();
  for (const auto& f : cs.factors()) orders.push_back(f.order());
  json rows = json::array();
  for (Vertex u = 0; u < cs.host_order(); ++u) {
    auto t = cs.tuple(u);
    rows.push_back(std::vector<Vertex>(t.begin(), t.end()));
  }
  return {{"factor_orders", orders}, {"coords", rows}};
}

json members_json(const SwitchSet& x) { return x.members(); }

json hom_json(const SignedHomomorphism& h) {
  return {{"map", h.map}, {"switch_set", members_json(h.switch_set)}};
}

template <typename F>
auto parsing(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("JSON: ") + e.what());
  }
}

}  // namespace

std::string graph_to_json(const SignedGraph& g) { return graph_json(g).dump(); }

SignedGraph graph_from_json(std::string_view text) {
  return parsing([&] { return graph_of(json::parse(text)); });
}

std::string coords_to_json(const CoordinateSystem& cs) { return coords_json(cs).dump(); }

std::string decomposition_to_json(const SDecomposition& d) {
  json factors = json::array();
  for (const auto& f : d.factors) factors.push_back(graph_json(f));
  json doc = {{"factors", factors},
              {"coords", coords_json(d.coords)},
              {"switch_set", members_json(d.switch_set)},
              {"factor_of_edge", d.factor_of_edge}};
  return doc.dump();
}

std::string certificate_to_json(const ChromaticCertificate& c) {
  json exhausted = json::array();
  for (const auto& rec : c.lower_bound_evidence.exhausted) {
    exhausted.push_back({{"target", graph_json(rec.target)}, {"nodes", rec.nodes}});
  }
  json doc = {{"k", c.k},
              {"target", graph_json(c.target)},
              {"homomorphism", hom_json(c.hom)},
              {"lower_bound",
               {{"reason", to_string(c.lower_bound_evidence.reason)},
                {"underlying_bound", c.lower_bound_evidence.underlying_bound},
                {"exhausted", exhausted}}},
              {"nodes", c.nodes}};
  return doc.dump();
}

ChromaticCertificate certificate_from_json(std::string_view text) {
  return parsing([&] {
    const json doc = json::parse(text);
    ChromaticCertificate c;
    c.k = doc.at("k").get<int>();
    c.target = graph_of(doc.at("target"));
    const auto& hom = doc.at("homomorphism");
    c.hom.map = hom.at("map").get<std::vector<Vertex>>();
    const auto members = hom.at("switch_set").get<std::vector<Vertex>>();
    c.hom.switch_set = SwitchSet::from_members(static_cast<int>(c.hom.map.size()), members);
    const auto& lb = doc.at("lower_bound");
    const std::string reason = lb.at("reason").get<std::string>();
    bool known = false;
    for (auto r : {LowerBoundReason::Trivial, LowerBoundReason::UnderlyingExact, LowerBoundReason::UnderlyingClique,
                   LowerBoundReason::RequestedLower, LowerBoundReason::TargetsExhausted}) {
      if (reason == to_string(r)) {
        c.lower_bound_evidence.reason = r;
        known = true;
      }
    }
    if (!known) throw Error(ErrorCode::Parse, "unknown lower bound reason '" + reason + "'");
    c.lower_bound_evidence.underlying_bound = lb.at("underlying_bound").get<int>();
    for (const auto& rec : lb.at("exhausted")) {
      c.lower_bound_evidence.exhausted.push_back(
          TargetExhaustion{graph_of(rec.at("target")), rec.at("nodes").get<std::uint64_t>()});
    }
    c.nodes = doc.value("nodes", std::uint64_t{0});
    return c;
  });
}

std::string switch_set_to_json(const SwitchSet& x) { return members_json(x).dump(); }

std::string balance_to_json(const BalanceResult& b) {
  json doc = {{"balanced", b.balanced}};
  if (b.balanced) {
    doc["switch_set"] = members_json(b.switch_set);
  } else {
    doc["unbalanced_cycle"] = b.unbalanced_cycle.vertices;
  }
  return doc.dump();
}

}  // namespace sgw
