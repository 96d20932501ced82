#include "sgw/constructions.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <string>

namespace sgw {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadParameter, what); }

SignedGraph make_cycle(int n, int negative_edge) {
  if (n < 3) bad("cycles need at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back(Edge{i, (i + 1) % n, i == negative_edge ? Sign::Negative : Sign::Positive});
  }
  return SignedGraph::build(n, edges);
}

SignedGraph make_complete(int p, Sign s) {
  if (p < 1) bad("complete graphs need at least 1 vertex");
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) edges.push_back(Edge{i, j, s});
  }
  return SignedGraph::build(p, edges);
}

// Signs of K18 in canonical edge order, one row per smaller endpoint.
constexpr std::array<const char*, 17> kK18Rows = {
    "++++-++-++++-++--",
    "++++--++--+++--+",
    "+--++++----+-+-",
    "++-++--++--+--",
    "--+++-+-+++++",
    "----+---+++-",
    "++--+---+-+",
    "+++--++-+-",
    "--++--+++",
    "--+++-++",
    "-+--+++",
    "++-+-+",
    "--+-+",
    "--+-",
    "-+-",
    "+-",
    "+",
};

}  // namespace

SignedGraph make_bc(int n) { return make_cycle(n, -1); }

// The canonical form keeps the BFS tree edges positive; with BFS from 0 the
// only non-tree edge of a cycle joins n/2 to its successor.
SignedGraph make_uc(int n) { return make_cycle(n, n / 2); }

SignedGraph make_k_plus(int p) { return make_complete(p, Sign::Positive); }
SignedGraph make_k_minus(int p) { return make_complete(p, Sign::Negative); }

SignedGraph make_k4_mixed() {
  std::vector<Edge> edges;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) edges.push_back(Edge{i, j, i == 0 && j == 1 ? Sign::Negative : Sign::Positive});
  }
  return SignedGraph::build(4, edges);
}

SignedGraph make_spal5() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(Edge{i, (i + 1) % 5, Sign::Positive});
    edges.push_back(Edge{i, (i + 2) % 5, Sign::Negative});
  }
  return SignedGraph::build(5, edges);
}

SignedGraph make_spal5_star() {
  std::vector<Edge> edges(make_spal5().edges());
  for (int i = 0; i < 5; ++i) edges.push_back(Edge{i, 5, Sign::Positive});
  return SignedGraph::build(6, edges);
}

SignedGraph make_k18() {
  std::vector<Edge> edges;
  for (int i = 0; i < 17; ++i) {
    const std::string_view row = kK18Rows[i];
    for (int j = i + 1; j < 18; ++j) {
      edges.push_back(Edge{i, j, row[j - i - 1] == '-' ? Sign::Negative : Sign::Positive});
    }
  }
  return SignedGraph::build(18, edges);
}

SignedGraph make_grid(int rows, int cols, std::span<const Sign> horizontal, std::span<const Sign> vertical) {
  if (rows < 1 || cols < 1) bad("grid dimensions must be positive");
  if (horizontal.size() != static_cast<std::size_t>(rows * (cols - 1)) ||
      vertical.size() != static_cast<std::size_t>((rows - 1) * cols)) {
    bad("wrong number of grid edge signs");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j + 1 < cols; ++j) edges.push_back(Edge{i * cols + j, i * cols + j + 1, horizontal[i * (cols - 1) + j]});
  }
  for (int i = 0; i + 1 < rows; ++i) {
    for (int j = 0; j < cols; ++j) edges.push_back(Edge{i * cols + j, (i + 1) * cols + j, vertical[i * cols + j]});
  }
  return SignedGraph::build(rows * cols, edges);
}

SignedGraph make_grid_fig1c() {
  constexpr Sign P = Sign::Positive, N = Sign::Negative;
  const std::array<Sign, 9> horizontal = {N, P, N, P, P, P, N, N, N};
  const std::array<Sign, 8> vertical = {P, P, P, P, P, P, P, P};
  return make_grid(3, 4, horizontal, vertical);
}

SignedGraph make(std::string_view name, std::span<const int> params) {
  auto want = [&](std::size_t count) {
    if (params.size() != count) {
      bad(std::string(name) + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  if (name == "BC" || name == "UC") {
    want(1);
    return name == "BC" ? make_bc(params[0]) : make_uc(params[0]);
  }
  if (name == "K_plus" || name == "K_minus") {
    want(1);
    return name == "K_plus" ? make_k_plus(params[0]) : make_k_minus(params[0]);
  }
  want(0);
  if (name == "K4_mixed") return make_k4_mixed();
  if (name == "SPal5") return make_spal5();
  if (name == "SPal5_star") return make_spal5_star();
  if (name == "K18") return make_k18();
  if (name == "grid_fig1c") return make_grid_fig1c();
  bad("unknown construction '" + std::string(name) + "'");
}

SignedGraph make(std::string_view spec) {
  const auto open = spec.find('(');
  if (open == std::string_view::npos) return make(spec, {});
  if (spec.back() != ')') bad("malformed construction '" + std::string(spec) + "'");
  std::vector<int> params;
  std::string_view rest = spec.substr(open + 1, spec.size() - open - 2);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      bad("bad parameter '" + std::string(item) + "'");
    }
    params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return make(spec.substr(0, open), params);
}

std::vector<std::string> construction_names() {
  return {"BC", "UC", "K_plus", "K_minus", "K4_mixed", "SPal5", "SPal5_star", "K18", "grid_fig1c"};
}

bool property_P_check(const SignedGraph& g) {
  for (Vertex y = 0; y < g.order(); ++y) {
    for (const Neighbor& xy : g.neighbors(y)) {
      for (const Neighbor& yz : g.neighbors(y)) {
        const Vertex x = xy.vertex, z = yz.vertex;
        for (Sign eps : {Sign::Positive, Sign::Negative}) {
          if (x == z && eps == Sign::Negative) continue;
          int found = 0;
          for (const Neighbor& xu : g.neighbors(x)) {
            auto zu = g.sign(z, xu.vertex);
            if (zu && xy.sign * yz.sign * *zu * xu.sign == eps) ++found;
          }
          if (found < 2) return false;
        }
      }
    }
  }
  return true;
}

namespace {

// Signs of a grid's edges, checked against the expected shape.
class GridView {
 public:
  GridView(const SignedGraph& g, int rows, int cols) : g_(g), rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1 || g.order() != rows * cols ||
        g.size() != static_cast<std::size_t>(rows * (cols - 1) + (rows - 1) * cols)) {
      throw Error(ErrorCode::NotAGrid, "graph is not a " + std::to_string(rows) + " x " + std::to_string(cols) + " grid");
    }
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        if ((j + 1 < cols && !g.adjacent(id(i, j), id(i, j + 1))) ||
            (i + 1 < rows && !g.adjacent(id(i, j), id(i + 1, j)))) {
          throw Error(ErrorCode::NotAGrid, "missing grid edge at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        }
      }
    }
  }

  Vertex id(int i, int j) const { return i * cols_ + j; }
  Sign sign(Vertex a, Vertex b) const { return *g_.sign(a, b); }

 private:
  const SignedGraph& g_;
  int rows_, cols_;
};

[[noreturn]] void broken(const std::string& what) {
  throw Error(ErrorCode::InternalInvariantViolation, what);
}

// Image of a vertex: target vertex and switch flag.
struct Slot {
  Vertex t = -1;
  bool flip = false;
};

Sign flip_sign(bool f) { return f ? Sign::Negative : Sign::Positive; }

// Switch flag that makes the source edge to an already placed neighbor match
// the target edge, or nullopt when the target vertices are not adjacent.
std::optional<bool> flag_for(const SignedGraph& h, Sign edge, const Slot& placed, Vertex t) {
  auto target = h.sign(placed.t, t);
  if (!target) return std::nullopt;
  return *target != edge * flip_sign(placed.flip);
}

bool fits(const SignedGraph& h, Sign edge, const Slot& placed, const Slot& candidate) {
  auto target = h.sign(placed.t, candidate.t);
  return target && *target == edge * flip_sign(placed.flip) * flip_sign(candidate.flip);
}

SignedHomomorphism to_hom(const std::vector<Slot>& slots) {
  SignedHomomorphism hom{std::vector<Vertex>(slots.size()), SwitchSet(static_cast<int>(slots.size()))};
  for (std::size_t v = 0; v < slots.size(); ++v) {
    hom.map[v] = slots[v].t;
    hom.switch_set.set(static_cast<Vertex>(v), slots[v].flip);
  }
  return hom;
}

}  // namespace

SignedHomomorphism grid_hom_spal5star(const SignedGraph& g, int rows, int cols) {
  const GridView grid(g, rows, cols);
  const SignedGraph h = make_spal5_star();
  std::vector<Slot> slot(static_cast<std::size_t>(g.order()));
  std::vector<std::array<Vertex, 2>> choices(static_cast<std::size_t>(g.order()), {-1, -1});

  // Image of cell (i, j) when its target vertex is t, or nullopt if t does not
  // fit the left and upper neighbors.
  auto place = [&](int i, int j, Vertex t) -> std::optional<Slot> {
    const Vertex x = grid.id(i, j);
    Slot s{t, false};
    if (j > 0) {
      const Vertex left = grid.id(i, j - 1);
      auto f = flag_for(h, grid.sign(x, left), slot[left], t);
      if (!f) return std::nullopt;
      s.flip = *f;
    } else if (i > 0) {
      const Vertex up = grid.id(i - 1, j);
      auto f = flag_for(h, grid.sign(x, up), slot[up], t);
      if (!f) return std::nullopt;
      s.flip = *f;
    }
    if (i > 0 && j > 0) {
      const Vertex up = grid.id(i - 1, j);
      if (!fits(h, grid.sign(x, up), slot[up], s)) return std::nullopt;
    }
    return s;
  };

  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const Vertex x = grid.id(i, j);
      if (i == 0 && j == 0) {
        slot[x] = Slot{0, false};
        continue;
      }
      if (i > 0 && j > 0) {
        // The square x, left, diagonal, up. If it is unbalanced and left and up
        // share an image, move the left cell to its recorded alternative.
        const Vertex left = grid.id(i, j - 1), up = grid.id(i - 1, j), diag = grid.id(i - 1, j - 1);
        const Sign square = grid.sign(x, left) * grid.sign(left, diag) * grid.sign(diag, up) * grid.sign(up, x);
        if (square == Sign::Negative && slot[left].t == slot[up].t) {
          const Vertex alt = choices[left][0] == slot[left].t ? choices[left][1] : choices[left][0];
          auto revised = alt < 0 ? std::nullopt : place(i, j - 1, alt);
          if (!revised) broken("grid cell has no alternative image");
          slot[left] = *revised;
        }
      }
      int found = 0;
      for (Vertex t = 0; t < h.order() && found < 2; ++t) {
        if (auto s = place(i, j, t)) {
          if (found == 0) slot[x] = *s;
          choices[x][found++] = t;
        }
      }
      if (found < 2) broken("grid cell has fewer than two images");
    }
  }
  return to_hom(slot);
}

SignedHomomorphism grid4_hom_spal5(const SignedGraph& g, int rows, int cols) {
  if (rows > 4) throw Error(ErrorCode::TooManyRows, "column construction needs at most 4 rows");
  const GridView grid(g, rows, cols);
  const SignedGraph h = make_spal5();
  std::vector<Slot> slot(static_cast<std::size_t>(g.order()));

  // Candidate image of (i, j) given its placed left and upper neighbors.
  auto candidate = [&](int i, int j, Vertex t) -> std::optional<Slot> {
    const Vertex x = grid.id(i, j);
    Slot s{t, false};
    bool have_flag = false;
    for (Vertex nb : {j > 0 ? grid.id(i, j - 1) : -1, i > 0 ? grid.id(i - 1, j) : -1}) {
      if (nb < 0) continue;
      if (!have_flag) {
        auto f = flag_for(h, grid.sign(x, nb), slot[nb], t);
        if (!f) return std::nullopt;
        s.flip = *f;
        have_flag = true;
      } else if (!fits(h, grid.sign(x, nb), slot[nb], s)) {
        return std::nullopt;
      }
    }
    // Exclusion: if the square through x, the cell below, and their left
    // neighbors is unbalanced, x may not share an image with the cell down-left.
    if (j > 0 && i + 1 < rows) {
      const Vertex left = grid.id(i, j - 1), down_left = grid.id(i + 1, j - 1), down = grid.id(i + 1, j);
      const Sign square = grid.sign(x, left) * grid.sign(left, down_left) * grid.sign(down_left, down) *
                          grid.sign(down, x);
      if (square == Sign::Negative && slot[down_left].t == t) return std::nullopt;
    }
    return s;
  };

  // Depth-first over the cells of one column, top to bottom.
  auto fill = [&](auto&& self, int i, int j) -> bool {
    if (i == rows) return true;
    for (Vertex t = 0; t < h.order(); ++t) {
      if (auto s = candidate(i, j, t)) {
        slot[grid.id(i, j)] = *s;
        if (self(self, i + 1, j)) return true;
      }
    }
    return false;
  };

  for (int j = 0; j < cols; ++j) {
    if (!fill(fill, 0, j)) broken("grid column has no extension into SPal5");
  }
  return to_hom(slot);
}

namespace {

// Coloring of K_p^+ x K_q^- for p >= q; vertex (i, j) is i * q + j.
void kpq_fill(int p, int q, std::vector<int>& colors, std::vector<char>& flips) {
  colors.assign(static_cast<std::size_t>(p * q), -1);
  flips.assign(static_cast<std::size_t>(p * q), 0);
  auto at = [q](int i, int j) { return i * q + j; };
  if (p == 2) {  // q == 2
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) colors[at(i, j)] = (i + j) % 2;
    }
    flips[at(0, 0)] = flips[at(0, 1)] = 1;
    return;
  }
  if (p == 3 && q == 2) {
    for (int i = 0; i < 3; ++i) {
      colors[at(i, 0)] = i;
      colors[at(i, 1)] = (i + 1) % 3;
      flips[at(i, 0)] = 1;
    }
    return;
  }
  if (p == 3 && q == 3) {
    colors = {0, 1, 2, 3, 0, 1, 2, 4, 3};
    flips[at(0, 0)] = flips[at(0, 1)] = flips[at(0, 2)] = flips[at(1, 0)] = 1;
    return;
  }
  // Switch row 0, give v(0, j) and v(1, j+1) a fresh color each, and color the
  // remaining rows recursively with the colors after those.
  for (int j = 0; j < q; ++j) {
    colors[at(0, j)] = j;
    colors[at(1, (j + 1) % q)] = j;
    flips[at(0, j)] = 1;
  }
  const int rest_p = p - 2;
  std::vector<int> sub_colors;
  std::vector<char> sub_flips;
  if (rest_p >= q) {
    kpq_fill(rest_p, q, sub_colors, sub_flips);
    for (int i = 0; i < rest_p; ++i) {
      for (int j = 0; j < q; ++j) {
        colors[at(i + 2, j)] = q + sub_colors[i * q + j];
        flips[at(i + 2, j)] = sub_flips[i * q + j];
      }
    }
  } else {
    // Negating K_a^+ x K_b^- and transposing gives K_b^+ x K_a^-; a coloring
    // and switch set stay valid under negation.
    kpq_fill(q, rest_p, sub_colors, sub_flips);
    for (int i = 0; i < rest_p; ++i) {
      for (int j = 0; j < q; ++j) {
        colors[at(i + 2, j)] = q + sub_colors[j * rest_p + i];
        flips[at(i + 2, j)] = sub_flips[j * rest_p + i];
      }
    }
  }
}

}  // namespace

Coloring kpq_coloring(int p, int q) {
  if (p < 2 || q < 2) bad("kpq_coloring needs p, q >= 2");
  std::vector<int> colors;
  std::vector<char> flips;
  const bool transpose = p < q;
  if (transpose) {
    kpq_fill(q, p, colors, flips);
  } else {
    kpq_fill(p, q, colors, flips);
  }
  Coloring out{std::vector<int>(static_cast<std::size_t>(p * q)), SwitchSet(p * q), 0};
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      const int src = transpose ? j * p + i : i * q + j;
      out.colors[i * q + j] = colors[src];
      out.switch_set.set(i * q + j, flips[src] != 0);
      out.color_count = std::max(out.color_count, colors[src] + 1);
    }
  }
  return out;
}

}  // namespace sgw
