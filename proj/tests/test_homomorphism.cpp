#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "sgw/constructions.hpp"
#include "sgw/error.hpp"
#include "sgw/homomorphism.hpp"
#include "sgw/product.hpp"
#include "sgw/switching.hpp"

using namespace sgw;
using th::sg;

TEST_CASE("validate") {
  const SignedGraph g = make_uc(5);
  SignedHomomorphism id{{0, 1, 2, 3, 4}, SwitchSet(5)};
  CHECK(validate(g, g, id));
  SignedHomomorphism collapse{{0, 0, 2, 3, 4}, SwitchSet(5)};
  CHECK_FALSE(validate(g, g, collapse));
  SignedHomomorphism wrong_size{{0, 1}, SwitchSet(5)};
  CHECK_FALSE(validate(g, g, wrong_size));

  const SignedGraph bc4 = th::cycle({-1, 1, -1, 1});
  const BalanceResult b = is_balanced(bc4);
  REQUIRE(b.balanced);
  CHECK(validate(bc4, th::k2(1), SignedHomomorphism{{0, 1, 0, 1}, b.switch_set}));
}

TEST_CASE("find_homomorphism") {
  for (const auto& k3 : gen::all_complete_signatures(3)) CHECK_FALSE(find_homomorphism(make_uc(4), k3).has_value());
  std::mt19937_64 rng(gen::kDefaultSeed + 6);
  for (int i = 0; i < 20; ++i) {
    const SignedGraph tree = gen::connected(rng, 9, 0.0);
    const auto phi = find_homomorphism(tree, th::k2(1));
    REQUIRE(phi.has_value());
    CHECK(validate(tree, th::k2(1), *phi));
  }
  const SignedGraph g = gen::connected(rng, 6, 0.5);
  SearchStats stats;
  const auto self = find_homomorphism(g, g, &stats);
  REQUIRE(self.has_value());
  CHECK(validate(g, g, *self));
  CHECK(stats.nodes > 0);

  const SignedGraph big = make_bc(33);
  CHECK_THROWS_AS(find_homomorphism(make_bc(4), big), Error);
}

TEST_CASE("targets") {
  CHECK(enumerate_targets(1).size() == 1);
  CHECK(enumerate_targets(2).size() == 1);
  CHECK(enumerate_targets(2)[0] == th::k2(1));
  CHECK(enumerate_targets(3).size() == 2);
  CHECK(enumerate_targets(4).size() == 3);
  CHECK(enumerate_targets(5).size() == 7);
  CHECK_THROWS_AS(enumerate_targets(7), Error);

  // Every signature of K_k is signed-isomorphic to exactly one target.
  for (int k = 2; k <= 4; ++k) {
    const auto& targets = enumerate_targets(k);
    for (const auto& s : gen::all_complete_signatures(k)) {
      int hits = 0;
      for (const auto& t : targets) hits += oracle::signed_isomorphic(s, t);
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("chromatic number landmarks") {
  CHECK(chromatic_number(make_uc(4)).k == 4);
  CHECK(chromatic_number(make_bc(4)).k == 2);
  CHECK(chromatic_number(make_uc(3)).k == 3);
  CHECK(chromatic_number(make_uc(5)).k == 3);
  CHECK(chromatic_number(sg(1, {})).k == 1);
  const SignedGraph kk = cartesian_product(make_k_plus(3), make_k_minus(3)).graph;
  const ChromaticCertificate c = chromatic_number(kk);
  CHECK(c.k == 5);
  CHECK(check_certificate(kk, c));
  CHECK(c.lower_bound_evidence.reason == LowerBoundReason::TargetsExhausted);
  CHECK(c.lower_bound_evidence.exhausted.size() == enumerate_targets(4).size());

  std::mt19937_64 rng(gen::kDefaultSeed + 7);
  for (int i = 0; i < 10; ++i) {
    const SignedGraph a = gen::connected(rng, 2 + i % 3, 0.0);
    const SignedGraph b = gen::connected(rng, 2 + (i + 1) % 3, 0.0);
    CHECK(chromatic_number(cartesian_product(a, b).graph).k == 2);
  }
}

TEST_CASE("chromatic number bounds and certificates") {
  const SignedGraph uc4 = make_uc(4);
  try {
    chromatic_number(uc4, std::nullopt, 3);
    FAIL("expected BoundExceededError");
  } catch (const BoundExceededError& e) {
    CHECK(e.lower() == 4);
    CHECK(e.upper() >= 4);
  }
  const ChromaticCertificate req = chromatic_number(make_bc(4), 3);
  CHECK(req.k == 3);
  CHECK(req.lower_bound_evidence.reason == LowerBoundReason::RequestedLower);
  CHECK(check_certificate(make_bc(4), req));

  ChromaticCertificate c = chromatic_number(uc4);
  CHECK(check_certificate(uc4, c));
  ChromaticCertificate broken = c;
  broken.hom.map[0] = broken.hom.map[1];
  CHECK_FALSE(check_certificate(uc4, broken));
  ChromaticCertificate missing = c;
  missing.lower_bound_evidence.exhausted.pop_back();
  CHECK_FALSE(check_certificate(uc4, missing));
  ChromaticCertificate lying = c;
  lying.k = 3;
  CHECK_FALSE(check_certificate(uc4, lying));
  CHECK_THROWS_AS(chromatic_number(sg(0, {})), Error);
}

TEST_CASE("unsigned bounds") {
  CHECK(underlying_chromatic_number(make_k_minus(5)) == 5);
  CHECK(underlying_chromatic_number(make_uc(5)) == 3);
  CHECK(underlying_chromatic_number(make_bc(6)) == 2);
  CHECK(greedy_clique_size(make_k_plus(4)) == 4);
  CHECK(greedy_signed_upper_bound(make_uc(4)) >= 4);
  std::mt19937_64 rng(gen::kDefaultSeed + 12);
  for (int i = 0; i < 300; ++i) {
    const SignedGraph g = gen::connected(rng, 1 + i % 6, 0.6);
    const int bound = greedy_signed_upper_bound(g);
    CHECK(bound >= oracle::chromatic_number(g));
    CHECK(bound <= g.order());
  }
  CHECK_THROWS_AS(underlying_chromatic_number(make_bc(21)), Error);
}

TEST_CASE("coloring targets") {
  const SignedGraph uc4 = make_uc(4);
  const std::vector<int> colors{0, 1, 2, 3};
  const auto t = coloring_target(uc4, colors, SwitchSet(4));
  REQUIRE(t.has_value());
  CHECK(t->target.order() == 4);
  CHECK(validate(uc4, t->target, t->hom));
  const std::vector<int> clash{0, 0, 1, 2};
  CHECK_FALSE(coloring_target(uc4, clash, SwitchSet(4)).has_value());
  // Two colors on an unbalanced 4-cycle force both signs on the color pair.
  const std::vector<int> two{0, 1, 0, 1};
  CHECK_FALSE(coloring_target(uc4, two, SwitchSet(4)).has_value());
}

TEST_CASE("product homomorphism") {
  const SignedGraph a = make_uc(3);
  const SignedGraph b = make_bc(4);
  const auto ca = chromatic_number(a);
  const auto cb = chromatic_number(b);
  const SignedHomomorphism phi = product_homomorphism(ca.hom, cb.hom, cb.target.order());
  CHECK(validate(cartesian_product(a, b).graph, cartesian_product(ca.target, cb.target).graph, phi));
}

TEST_CASE("signed isomorphism") {
  std::mt19937_64 rng(gen::kDefaultSeed + 8);
  const SignedGraph g = gen::connected(rng, 6, 0.5);
  CHECK(signed_isomorphic(g, switched(g, SwitchSet::from_members(6, gen::random_subset(rng, 6)))));
  CHECK_FALSE(signed_isomorphic(make_bc(4), make_uc(4)));
  CHECK(signed_isomorphic(make_uc(3), relabel(make_uc(3), std::vector<Vertex>{2, 0, 1})));
  for (int i = 0; i < 200; ++i) {
    const SignedGraph x = gen::connected(rng, 5, 0.5);
    std::vector<Vertex> perm{0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    const SignedGraph y = i % 2 ? relabel(gen::resigned(rng, x), perm) : gen::connected(rng, 5, 0.5);
    CHECK(signed_isomorphic(x, y) == oracle::signed_isomorphic(x, y));
  }
  CHECK_THROWS_AS(signed_isomorphic(make_bc(11), make_bc(11)), Error);
}

TEST_CASE("redundant sets") {
  CHECK(is_s_redundant(make_uc(4), std::vector<Vertex>{}));
  for (Vertex v = 0; v < 4; ++v) CHECK_FALSE(is_s_redundant(make_uc(4), std::vector<Vertex>{v}));
  CHECK(is_s_redundant(make_bc(4), std::vector<Vertex>{0}));
}

TEST_CASE("worker count") { CHECK(worker_count() >= 1); }
