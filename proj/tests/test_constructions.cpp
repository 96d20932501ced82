#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "sgw/constructions.hpp"
#include "sgw/error.hpp"
#include "sgw/homomorphism.hpp"
#include "sgw/io.hpp"
#include "sgw/switching.hpp"

using namespace sgw;
using th::sg;

TEST_CASE("named constructions") {
  CHECK(make_bc(4).size() == 4);
  CHECK(make_bc(4).negative_edge_count() == 0);
  CHECK(classify_cycle(make_uc(4)) == CycleClass::UnbalancedEven);
  CHECK(classify_cycle(make_uc(7)) == CycleClass::UnbalancedOdd);
  CHECK(make_k_plus(5).size() == 10);
  CHECK(make_k_minus(4).negative_edge_count() == 6);
  CHECK(make_k4_mixed().negative_edge_count() == 1);

  const SignedGraph star = make_spal5_star();
  CHECK(star.order() == 6);
  CHECK(star.size() == 15);
  for (Vertex i = 0; i < 5; ++i) {
    CHECK(star.sign(i, (i + 1) % 5) == Sign::Positive);
    CHECK(star.sign(i, (i + 2) % 5) == Sign::Negative);
    CHECK(star.sign(i, 5) == Sign::Positive);
  }
  CHECK(make_spal5().order() == 5);

  const SignedGraph k18 = make_k18();
  CHECK(k18.order() == 18);
  CHECK(k18.size() == 153);

  const SignedGraph grid = make_grid_fig1c();
  CHECK(grid.order() == 12);
  CHECK(grid.size() == 17);

  CHECK(make("UC(5)") == make_uc(5));
  CHECK(make("K_plus", std::vector<int>{3}) == make_k_plus(3));
  CHECK(make("SPal5_star") == star);
  CHECK_THROWS_AS(make("UC"), Error);
  CHECK_THROWS_AS(make("Petersen"), Error);
  CHECK_THROWS_AS(make("BC(2)"), Error);
  CHECK_THROWS_AS(make("UC(5"), Error);
  CHECK(construction_names().size() == 9);
}

TEST_CASE("property P") {
  CHECK(property_P_check(make_spal5_star()));
  CHECK_FALSE(property_P_check(th::k2(1)));
  CHECK_FALSE(property_P_check(make_spal5()));
}

TEST_CASE("grid homomorphisms into SPal5_star") {
  const SignedGraph star = make_spal5_star();
  CHECK(validate(th::path(7), star, grid_hom_spal5star(th::path(7), 1, 7)));
  const SignedGraph fig = make_grid_fig1c();
  const SignedHomomorphism phi = grid_hom_spal5star(fig, 3, 4);
  CHECK(validate(fig, star, phi));
  std::mt19937_64 rng(gen::kDefaultSeed + 9);
  for (int i = 0; i < 30; ++i) {
    const SignedGraph g = gen::grid(rng, 6, 6);
    CHECK(validate(g, star, grid_hom_spal5star(g, 6, 6)));
  }
  CHECK_THROWS_AS(grid_hom_spal5star(make_bc(6), 2, 3), Error);
}

TEST_CASE("grid homomorphisms into SPal5") {
  const SignedGraph pal = make_spal5();
  std::mt19937_64 rng(gen::kDefaultSeed + 10);
  for (int i = 0; i < 30; ++i) {
    const SignedGraph g = gen::grid(rng, 4, 8);
    CHECK(validate(g, pal, grid4_hom_spal5(g, 4, 8)));
  }
  const SignedGraph sq = make_grid(2, 2, std::vector<Sign>{Sign::Positive, Sign::Positive},
                                   std::vector<Sign>{Sign::Positive, Sign::Positive});
  CHECK(validate(sq, pal, grid4_hom_spal5(sq, 2, 2)));
  CHECK(validate(make_grid_fig1c(), pal, grid4_hom_spal5(make_grid_fig1c(), 3, 4)));
  CHECK_THROWS_AS(grid4_hom_spal5(gen::grid(rng, 5, 2), 5, 2), Error);
}

TEST_CASE("kpq colorings") {
  for (int p = 2; p <= 5; ++p) {
    for (int q = 2; q <= 5; ++q) {
      const Coloring c = kpq_coloring(p, q);
      CHECK(c.color_count == (p * q + 1) / 2);
      const SignedGraph g = oracle::product(make_k_plus(p), make_k_minus(q));
      const auto t = coloring_target(g, c.colors, c.switch_set);
      REQUIRE(t.has_value());
      CHECK(validate(g, t->target, t->hom));
      CHECK(t->target.order() <= c.color_count);
    }
  }
  CHECK_THROWS_AS(kpq_coloring(1, 3), Error);
}

TEST_CASE("K18 matches the frozen data file") {
  std::ifstream in(SGW_TEST_DATA "/k18.sg", std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  // FNV-1a of the file guards the transcription against accidental edits.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) h = (h ^ c) * 0x100000001b3ull;
  CHECK(h == 0x4d3eeb469ec0ec4cull);
  CHECK(parse_graph_file(text).graph == make_k18());
  CHECK(make_k18().negative_edge_count() == 69);
}
