#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "sgw/constructions.hpp"
#include "sgw/error.hpp"
#include "sgw/product.hpp"
#include "sgw/s_factor.hpp"
#include "sgw/switching.hpp"

using namespace sgw;
using th::sg;

namespace {

// switched(g, switch_set) equals the product of the factors under coords.
bool reconstructs(const SignedGraph& g, const SDecomposition& d) {
  const SignedGraph h = switched(g, d.switch_set);
  std::size_t expected = 0;
  std::size_t host = 1;
  for (const auto& f : d.factors) host *= static_cast<std::size_t>(f.order());
  for (const auto& f : d.factors) expected += f.size() * (host / static_cast<std::size_t>(f.order()));
  if (expected != h.size() || static_cast<int>(host) != h.order()) return false;
  for (std::size_t k = 0; k < h.size(); ++k) {
    const Edge& e = h.edges()[k];
    const auto a = d.coords.tuple(e.u);
    const auto b = d.coords.tuple(e.v);
    const auto i = static_cast<std::size_t>(d.factor_of_edge[k]);
    for (std::size_t j = 0; j < a.size(); ++j) {
      if ((j == i) == (a[j] == b[j])) return false;
    }
    if (d.factors[i].sign(a[i], b[i]) != e.sign) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("landmark decompositions") {
  const SDecomposition uc4 = s_decompose(make_uc(4));
  REQUIRE(uc4.factors.size() == 1);
  CHECK(oracle::signed_isomorphic(uc4.factors[0], make_uc(4)));
  CHECK(reconstructs(make_uc(4), uc4));

  const SDecomposition bc4 = s_decompose(make_bc(4));
  REQUIRE(bc4.factors.size() == 2);
  for (const auto& f : bc4.factors) CHECK(f == th::k2(1));
  CHECK(reconstructs(make_bc(4), bc4));

  const SignedGraph p = cartesian_product(make_bc(3), make_uc(3)).graph;
  const SDecomposition d = s_decompose(p);
  REQUIRE(d.factors.size() == 2);
  CHECK(oracle::same_multiset(d.factors, {make_bc(3), make_uc(3)}));
  CHECK(reconstructs(p, d));
  CHECK(d.factor_of_edge.size() == p.size());
}

TEST_CASE("sweep trace") {
  DecomposeTrace trace;
  const SignedGraph p = cartesian_product(make_uc(3), th::k2(-1)).graph;
  const SDecomposition d = s_decompose(p, &trace);
  CHECK(d.factors.size() == 2);
  CHECK(trace.ordinary_factor_count == 2);
  CHECK(trace.events.size() == p.size());
  CHECK(trace.done.size() == static_cast<std::size_t>(p.order()));

  DecomposeTrace t2;
  s_decompose(make_uc(4), &t2);
  bool merged = false;
  for (const auto& e : t2.events) merged = merged || e.branch == SweepBranch::Merge;
  CHECK(merged);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(s_decompose(sg(4, {{0, 1, 1}, {2, 3, 1}})), Error);
  CHECK_THROWS_AS(s_decompose(sg(1, {})), Error);
  CHECK_THROWS_AS(is_s_prime(sg(4, {{0, 1, 1}, {2, 3, 1}})), Error);
}

TEST_CASE("s-primality") {
  CHECK(is_s_prime(make_uc(4)));
  CHECK_FALSE(is_s_prime(make_bc(4)));
  for (const auto& k3 : gen::all_complete_signatures(3)) CHECK(is_s_prime(k3));
  CHECK_FALSE(is_s_prime(cartesian_product(make_uc(3), make_bc(3)).graph));
  CHECK(is_s_prime(th::k2(-1)));

  std::mt19937_64 rng(gen::kDefaultSeed + 4);
  for (int i = 0; i < 300; ++i) {
    const SignedGraph g = gen::connected(rng, 2 + i % 4, 0.5);
    CHECK(is_s_prime(g) == oracle::small_s_prime(g));
  }
  for (const auto& c : gen::all_signed_cycles(4)) CHECK(is_s_prime(c) == oracle::small_s_prime(c));
}

TEST_CASE("random round trips") {
  std::mt19937_64 rng(gen::kDefaultSeed + 5);
  int done = 0;
  while (done < 60) {
    std::vector<SignedGraph> parts;
    const int count = 2 + done % 2;
    while (static_cast<int>(parts.size()) < count) {
      const SignedGraph f = gen::connected(rng, 2 + static_cast<int>(rng() % 4), 0.5);
      if (oracle::small_s_prime(f)) parts.push_back(f);
    }
    SignedGraph p = product_many(parts).graph;
    p = switched(p, SwitchSet::from_members(p.order(), gen::random_subset(rng, p.order())));
    const SDecomposition d = s_decompose(p);
    CHECK(oracle::same_multiset(d.factors, parts));
    CHECK(reconstructs(p, d));
    for (const auto& f : d.factors) CHECK(is_s_prime(f));
    ++done;
  }
}
