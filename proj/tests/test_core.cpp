#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "test_util.hpp"

using namespace orbitlang;
using testutil::vp;

TEST_CASE("prime validation", "[core]") {
  CHECK(Prime(2).value() == 2);
  CHECK(Prime(251).value() == 251);
  CHECK(Prime(65521).value() == 65521);
  CHECK_THROWS_AS(Prime(1), NotPrime);
  CHECK_THROWS_AS(Prime(4), NotPrime);
  CHECK_THROWS_AS(Prime(0), NotPrime);
  CHECK_THROWS_AS(Prime(65537), InvalidArgument);  // prime, but past the supported bound
}

TEST_CASE("mod_inverse examples", "[core]") {
  CHECK(mod_inverse(Residue(1, Prime(2))).value() == 1);
  CHECK(mod_inverse(Residue(2, Prime(5))).value() == 3);
  CHECK(mod_inverse(Residue(4, Prime(7))).value() == 2);
  CHECK_THROWS_AS(mod_inverse(Residue(0, Prime(5))), NotInvertible);
}

TEST_CASE("mod_inverse inverts every nonzero residue", "[core]") {
  for (std::uint32_t pv : {2u, 3u, 5u, 7u, 251u}) {
    const Prime p(pv);
    for (std::uint32_t a = 1; a < pv; ++a) {
      CHECK((Residue(a, p) * mod_inverse(Residue(a, p))).value() == 1);
    }
  }
}

TEST_CASE("residue arithmetic context", "[core]") {
  CHECK(Residue(-1, Prime(5)).value() == 4);
  CHECK((Residue(3, Prime(5)) + Residue(4, Prime(5))).value() == 2);
  CHECK_THROWS_AS(Residue(1, Prime(3)) + Residue(1, Prime(5)), ModulusMismatch);
}

TEST_CASE("generators reduced mod p", "[core]") {
  {
    const auto [s, t] = generators(Prime(2));
    CHECK((s.a() == 0 && s.b() == 1 && s.c() == 1 && s.d() == 0));
    CHECK((t.a() == 1 && t.b() == 1 && t.c() == 0 && t.d() == 1));
  }
  {
    const auto [s, t] = generators(Prime(3));
    CHECK((s.a() == 0 && s.b() == 1 && s.c() == 2 && s.d() == 0));
    CHECK((t.a() == 1 && t.b() == 1 && t.c() == 0 && t.d() == 1));
  }
  {
    const auto [s, t] = generators(Prime(5));
    CHECK((s.a() == 0 && s.b() == 1 && s.c() == 4 && s.d() == 0));
    CHECK((t.a() == 1 && t.b() == 1 && t.c() == 0 && t.d() == 1));
  }
}

TEST_CASE("determinant checked at construction", "[core]") {
  CHECK_THROWS_AS(SL2Matrix(Prime(5), 1, 1, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(SL2Matrix(Prime(5), 2, 0, 0, 1), InvalidArgument);
  CHECK_NOTHROW(SL2Matrix(Prime(5), 2, 0, 0, 3));  // det 6 = 1 mod 5
}

TEST_CASE("apply_matrix examples", "[core]") {
  const Prime p2(2);
  const VectorPair x = vp(p2, {1, 0}, {0, 1});
  CHECK(apply_matrix(SL2Matrix::identity(p2), x) == x);

  const auto [s, t] = generators(p2);
  CHECK(apply_matrix(s, x) == vp(p2, {0, 1}, {1, 0}));
  CHECK(apply_matrix(t, vp(p2, {1, 1}, {1, 1})) == vp(p2, {0, 0}, {1, 1}));

  CHECK_THROWS_AS(apply_matrix(SL2Matrix::identity(Prime(3)), x), ModulusMismatch);
}

TEST_CASE("matrix product is a group action", "[core]") {
  std::mt19937_64 rng(20240917);
  for (std::uint32_t pv : {2u, 3u, 5u, 7u}) {
    const Prime p(pv);
    const auto [s, t] = generators(p);
    const SL2Matrix gens[4] = {s, s.inverse(), t, t.inverse()};
    std::uniform_int_distribution<int> pick(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
      SL2Matrix a = gens[pick(rng)] * gens[pick(rng)];
      SL2Matrix b = gens[pick(rng)] * gens[pick(rng)];
      const VectorPair x = testutil::random_pair(rng, p, 3);
      CHECK(apply_matrix(a, apply_matrix(b, x)) == apply_matrix(a * b, x));
      CHECK(a * a.inverse() == SL2Matrix::identity(p));
    }
  }
}

TEST_CASE("canonicalize examples", "[core]") {
  const Prime p2(2);

  for (std::size_t n : {0u, 1u, 3u}) {
    const auto form = canonicalize(VectorPair::zero(p2, n));
    CHECK(form.pair == VectorPair::zero(p2, n));
    CHECK_FALSE(form.lead.has_value());
    CHECK_FALSE(form.lower_start.has_value());
  }

  {
    const auto form = canonicalize(vp(p2, {0, 1}, {1, 0}));
    CHECK(form.pair == vp(p2, {1, 0}, {0, 1}));
    CHECK(form.lead == std::size_t{0});
    CHECK(form.lower_start == std::size_t{1});
  }
  {
    const auto form = canonicalize(vp(p2, {0, 0}, {1, 1}));
    CHECK(form.pair == vp(p2, {1, 1}, {0, 0}));
    CHECK(form.lead == std::size_t{0});
    CHECK_FALSE(form.lower_start.has_value());
  }
  {
    // All eight nonzero length-1 pairs mod 3 share one orbit; cross-checked
    // against the breadth-first closure below.
    const Prime p3(3);
    CHECK(canonicalize(vp(p3, {2}, {1})).pair == vp(p3, {1}, {0}));
    const Orbit orbit = orbit_bfs(vp(p3, {2}, {1}));
    CHECK(orbit.size() == 8);
    CHECK(orbit.contains(vp(p3, {1}, {0})));
  }
}

TEST_CASE("is_canonical examples", "[core]") {
  const Prime p2(2);
  CHECK(is_canonical(vp(p2, {1, 0}, {0, 1})));
  CHECK_FALSE(is_canonical(vp(p2, {0, 1}, {1, 0})));
  CHECK(is_canonical(VectorPair::zero(p2, 2)));
  CHECK(is_canonical(vp(p2, {1, 1}, {0, 0})));
  CHECK_FALSE(is_canonical(vp(p2, {1, 1}, {0, 1})));  // nonzero upper where the lower row starts
  CHECK_FALSE(is_canonical(vp(p2, {0, 1}, {0, 1})));  // leading column is (1,1), not (1,0)
  CHECK(is_canonical(vp(p2, {0, 1}, {0, 0})));        // lead may sit anywhere
}

TEST_CASE("canonicalize properties", "[core]") {
  std::mt19937_64 rng(987654321);
  std::uniform_int_distribution<std::size_t> len(0, 6);
  std::uniform_int_distribution<std::size_t> wordlen(0, 8);
  const std::uint32_t primes[4] = {2, 3, 5, 7};
  std::uniform_int_distribution<int> pick(0, 3);

  for (int trial = 0; trial < 2000; ++trial) {
    const Prime p(primes[pick(rng)]);
    const VectorPair x = testutil::random_pair(rng, p, len(rng));
    const CanonicalForm form = canonicalize(x);

    CHECK(is_canonical(form.pair));                      // soundness
    CHECK(canonicalize(form.pair) == form);              // idempotence
    const VectorPair moved = testutil::random_action(rng, x, wordlen(rng));
    CHECK(canonicalize(moved) == form);                  // invariance under the action
  }
}

TEST_CASE("canonical form census matches the closed count exhaustively", "[core]") {
  const auto census = [](Prime p, std::size_t n) {
    std::set<VectorPair> forms;
    for (const VectorPair& x : testutil::all_states(p, n)) forms.insert(canonicalize(x).pair);
    return forms.size();
  };
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(BigCount(census(Prime(2), n)) == r_closed(Prime(2), n));
  }
  for (std::size_t n = 0; n <= 2; ++n) {
    CHECK(BigCount(census(Prime(3), n)) == r_closed(Prime(3), n));
  }
}

TEST_CASE("canonicalize at the largest supported modulus", "[core]") {
  const Prime p(65521);
  std::mt19937_64 rng(3141592);
  for (int trial = 0; trial < 20; ++trial) {
    const VectorPair x = testutil::random_pair(rng, p, 4);
    const CanonicalForm form = canonicalize(x);
    CHECK(is_canonical(form.pair));
    CHECK(canonicalize(testutil::random_action(rng, x, 6)) == form);
  }
}

TEST_CASE("vector pair construction guards", "[core]") {
  CHECK_THROWS_AS(VectorPair(Prime(3), {1, 2}, {0}), InvalidArgument);
  CHECK_THROWS_AS(VectorPair(Prime(3), {3}, {0}), InvalidArgument);
  CHECK(VectorPair::zero(Prime(3), 0).is_zero());
}
