#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sgw/graph.hpp"
#include "sgw/homomorphism.hpp"
#include "sgw/switching.hpp"

namespace sgw {

/// Cycle 0-1-...-(n-1)-0 with every edge positive. n >= 3.
SignedGraph make_bc(int n);
/// Cycle with exactly one negative edge, placed so the graph is its own
/// canonical form. n >= 3.
SignedGraph make_uc(int n);
SignedGraph make_k_plus(int p);
SignedGraph make_k_minus(int p);
/// K4 with the single edge 01 negative.
SignedGraph make_k4_mixed();
/// Pentagon i, i+1 positive and pentagram i, i+2 negative on vertices 0..4.
SignedGraph make_spal5();
/// SPal5 plus hub vertex 5 joined positively to every pentagon vertex.
SignedGraph make_spal5_star();
/// The 18-vertex complete signed graph whose product with K2 needs 25 colors.
SignedGraph make_k18();
/// The 3 x 4 signed grid with signed chromatic number 5.
SignedGraph make_grid_fig1c();

/// Construct by name: BC, UC, K_plus, K_minus (one parameter each), K4_mixed,
/// SPal5, SPal5_star, K18, grid_fig1c (none). Throws BadParameter.
SignedGraph make(std::string_view name, std::span<const int> params);

/// Same, from a string such as "UC(5)", "K_plus(3)" or "SPal5".
SignedGraph make(std::string_view spec);

/// Names accepted by make().
std::vector<std::string> construction_names();

/// Rows x columns grid: vertex (i, j), 0-based, is i * cols + j. `horizontal`
/// holds the rows * (cols - 1) edges (i, j)-(i, j+1) row by row, `vertical`
/// the (rows - 1) * cols edges (i, j)-(i+1, j) row by row.
SignedGraph make_grid(int rows, int cols, std::span<const Sign> horizontal, std::span<const Sign> vertical);

/// For every x, y, z with xy and yz edges and every sign e, except x == z with
/// e negative, at least two vertices u close a 4-cycle x y z u of sign e.
bool property_P_check(const SignedGraph& g);

/// Cell-by-cell homomorphism of a signed grid into SPal5_star. Throws
/// NotAGrid if g is not the rows x cols grid.
SignedHomomorphism grid_hom_spal5star(const SignedGraph& g, int rows, int cols);

/// Column-by-column homomorphism of a signed grid with at most 4 rows into
/// SPal5. Throws TooManyRows or NotAGrid.
SignedHomomorphism grid4_hom_spal5(const SignedGraph& g, int rows, int cols);

struct Coloring {
  std::vector<int> colors;  // per vertex, 0-based
  SwitchSet switch_set;
  int color_count = 0;
};

/// ceil(pq/2)-coloring of K_p^+ x K_q^- by the recursive switch-and-identify
/// construction. Vertex (i, j) is i * q + j, with i indexing the positive
/// clique. p, q >= 2, otherwise BadParameter.
Coloring kpq_coloring(int p, int q);

}  // namespace sgw
