#include "polyfock/decomposition.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace pfx;

namespace {

ExpPoly m1(unsigned z, unsigned zb, GaussianRational c = GaussianRational(1)) {
  return ExpPoly::monomial(1, {z}, {zb}, std::move(c));
}

/// Gram-Schmidt style oracle: the level-l component of f is its orthogonal
/// projection onto span{ lift(z^n, l) }, computed with inner products only.
ExpPoly gram_component(const ExpPoly& f, unsigned level, unsigned max_n) {
  ExpPoly out(1);
  for (unsigned n = 0; n <= max_n; ++n) {
    ExpPoly basis = lift(ExpPoly::monomial(1, {n}, {0}), level);
    ExpScalar num = inner_product(f, basis);
    ExpScalar den = norm_sq(basis);
    GaussianRational coef = num.coeff() / GaussianRational(den.coeff());
    out = out + basis.scaled(coef);
  }
  return out;
}

}  // namespace

TEST_CASE("membership level") {
  CHECK(membership_level(ExpPoly::one(1)) == 1);
  CHECK(membership_level(m1(1, 2) + m1(0, 1)) == 3);
  CHECK(membership_level(ExpPoly::zero(1)) == 1);
  ExpPoly ezb = ExpPoly::one(1);
  ezb.set_exp_v({GaussianRational(1)});
  CHECK_THROWS_AS(membership_level(ezb), std::domain_error);
}

TEST_CASE("euler cartan membership") {
  CHECK(euler_cartan_membership(m1(0, 1), 2));
  CHECK_FALSE(euler_cartan_membership(m1(0, 2), 2));
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    ExpPoly f = oracle::random_polynomial(rng, 1, 6, 5);
    unsigned level = membership_level(f);
    for (unsigned k = 1; k <= level + 1; ++k)
      CHECK(euler_cartan_membership(f, k) == (level <= k));
  }
}

TEST_CASE("lift examples") {
  CHECK(lift(ExpPoly::one(1), 3) == m1(0, 2));
  CHECK(lift(ExpPoly::z(1), 2) == m1(1, 1) - ExpPoly::one(1));
  ExpPoly g = m1(2, 0) + ExpPoly::z(1);
  CHECK(lift(g, 1) == g);
  CHECK_THROWS_AS(lift(m1(0, 1), 2), std::domain_error);
}

TEST_CASE("lower examples") {
  CHECK(lower(m1(0, 2), 3) == ExpPoly::one(1));
  CHECK(lower(m1(1, 1) - ExpPoly::one(1), 2) == ExpPoly::z(1));
  CHECK_THROWS_AS(lower(m1(0, 1), 3), std::domain_error);  // level 2 element, not 3
}

TEST_CASE("lift norm scaling") {
  std::mt19937_64 rng(37);
  for (unsigned k = 1; k <= 6; ++k) {
    ExpPoly g = oracle::random_analytic(rng, 1, 5, 4);
    CHECK(norm_sq(lift(g, k)) == GaussianRational(rational_factorial(k - 1)) * norm_sq(g));
    ExpPoly psi = lift(g, k);
    CHECK(norm_sq(psi.apply_raising(1)) ==
          GaussianRational(Rational((long long)k)) * norm_sq(psi));
  }
}

TEST_CASE("true decomposition worked example") {
  // z zbar = (z zbar - 1) + 1
  ExpPoly f = m1(1, 1);
  TrueLevelDecomposition dec = true_decompose(f);
  REQUIRE(dec.components.size() == 2);
  CHECK(dec.component({2}) == m1(1, 1) - ExpPoly::one(1));
  CHECK(dec.component({1}) == ExpPoly::one(1));

  // zbar is already pure level 2
  TrueLevelDecomposition dzb = true_decompose(m1(0, 1));
  CHECK(dzb.component({2}) == m1(0, 1));
  CHECK(dzb.component({1}).is_zero());

  // analytic input stays at level 1
  ExpPoly g = m1(3, 0) + ExpPoly::z(1);
  TrueLevelDecomposition dg = true_decompose(g);
  REQUIRE(dg.components.size() == 1);
  CHECK(dg.component({1}) == g);
}

TEST_CASE("true decomposition matches the projection oracle") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    ExpPoly f = oracle::random_polynomial(rng, 1, 5, 4);
    TrueLevelDecomposition dec = true_decompose(f);
    unsigned max_n = f.max_total_degree();
    for (unsigned l = 1; l <= membership_level(f); ++l)
      CHECK(dec.component({l}) == gram_component(f, l, max_n));
  }
}

TEST_CASE("decomposition orthogonality and resum") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    ExpPoly f = oracle::random_polynomial(rng, 1, 8, 6);
    TrueLevelDecomposition dec = true_decompose(f);
    CHECK(dec.sum() == f);
    for (auto i = dec.components.begin(); i != dec.components.end(); ++i)
      for (auto j = std::next(i); j != dec.components.end(); ++j)
        CHECK(inner_product(i->second, j->second).is_zero());
  }
}

TEST_CASE("zero decomposes to a single zero component") {
  TrueLevelDecomposition dec = true_decompose(ExpPoly::zero(1));
  REQUIRE(dec.components.size() == 1);
  CHECK(dec.component({1}).is_zero());
}

TEST_CASE("fock to poly examples") {
  // (g1, g2) = (z, 1): psi = z + zbar, so (phi1, phi2) = (z, 1)
  FockColumn col{2, {ExpPoly::z(1), ExpPoly::one(1)}};
  std::vector<ExpPoly> phi = fock_to_poly(col);
  CHECK(phi[0] == ExpPoly::z(1));
  CHECK(phi[1] == ExpPoly::one(1));

  // (g1, g2) = (1, z): psi = 1 + (z zbar - 1) = z zbar -> (0, z)
  FockColumn col2{2, {ExpPoly::one(1), ExpPoly::z(1)}};
  std::vector<ExpPoly> phi2 = fock_to_poly(col2);
  CHECK(phi2[0].is_zero());
  CHECK(phi2[1] == ExpPoly::z(1));

  FockColumn col3{1, {m1(2, 0)}};
  CHECK(fock_to_poly(col3)[0] == m1(2, 0));
}

TEST_CASE("poly to fock examples") {
  std::vector<ExpPoly> phi = {ExpPoly::zero(1), ExpPoly::z(1)};
  FockColumn col = poly_to_fock(phi);
  CHECK(col.functions[0] == ExpPoly::one(1));
  CHECK(col.functions[1] == ExpPoly::z(1));

  std::vector<ExpPoly> phi2 = {ExpPoly::z(1), ExpPoly::one(1)};
  FockColumn col2 = poly_to_fock(phi2);
  CHECK(col2.functions[0] == ExpPoly::z(1));
  CHECK(col2.functions[1] == ExpPoly::one(1));
}

TEST_CASE("column conversions are mutually inverse and rebuild the function") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<unsigned> kd(1, 5);
    unsigned k = kd(rng);
    FockColumn col;
    col.k = k;
    for (unsigned j = 0; j < k; ++j) col.functions.push_back(oracle::random_analytic(rng, 1, 4, 3));
    std::vector<ExpPoly> phi = fock_to_poly(col);
    FockColumn back = poly_to_fock(phi);
    REQUIRE(back.k == k);
    for (unsigned j = 0; j < k; ++j) CHECK(back.functions[j] == col.functions[j]);

    // sum_l zbar^{l-1} phi_l equals sum_p (adag)^{p-1} g_p
    ExpPoly lhs(1), rhs(1);
    for (unsigned l = 1; l <= k; ++l) lhs = lhs + m1(0, l - 1) * phi[l - 1];
    for (unsigned p = 1; p <= k; ++p) rhs = rhs + lift(col.functions[p - 1], p);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("multidimensional decomposition examples") {
  // d=2: zbar_1 sits at level (2,1)
  ExpPoly f = ExpPoly::monomial(2, {0, 0}, {1, 0});
  TrueLevelDecomposition dec = multi_true_decompose(f);
  REQUIRE(dec.components.size() == 1);
  CHECK(dec.component({2, 1}) == f);

  // d=2: z1 zbar1 = (z1 zbar1 - 1) at (2,1) plus 1 at (1,1)
  ExpPoly g = ExpPoly::monomial(2, {1, 0}, {1, 0});
  TrueLevelDecomposition dg = multi_true_decompose(g);
  REQUIRE(dg.components.size() == 2);
  CHECK(dg.component({2, 1}) == g - ExpPoly::one(2));
  CHECK(dg.component({1, 1}) == ExpPoly::one(2));

  // analytic input stays at (1,...,1)
  ExpPoly h = ExpPoly::monomial(2, {2, 1}, {0, 0});
  TrueLevelDecomposition dh = multi_true_decompose(h);
  REQUIRE(dh.components.size() == 1);
  CHECK(dh.component({1, 1}) == h);
}

TEST_CASE("multidimensional decomposition properties") {
  std::mt19937_64 rng(53);
  for (unsigned d = 2; d <= 3; ++d) {
    for (int trial = 0; trial < 15; ++trial) {
      ExpPoly f = oracle::random_polynomial(rng, d, 4, 4);
      TrueLevelDecomposition dec = multi_true_decompose(f);
      CHECK(dec.sum() == f);
      for (auto i = dec.components.begin(); i != dec.components.end(); ++i) {
        for (auto j = std::next(i); j != dec.components.end(); ++j)
          CHECK(inner_product(i->second, j->second).is_zero());
        // every component is a coordinate-wise lift of an analytic function
        ExpPoly probe = i->second;
        for (unsigned c = 0; c < d; ++c)
          for (unsigned step = 1; step < i->first[c]; ++step) probe = probe.apply_lowering(c + 1);
        CHECK(probe.is_analytic());
      }
    }
  }
}

TEST_CASE("multi true represent") {
  CHECK(multi_true_represent(ExpPoly::one(2), {2, 2}) ==
        ExpPoly::monomial(2, {0, 0}, {1, 1}));
  ExpPoly phi = ExpPoly::monomial(2, {1, 0}, {0, 0});
  CHECK(multi_true_represent(phi, {1, 1}) == phi);
  CHECK(multi_true_represent(phi, {2, 1}) ==
        ExpPoly::monomial(2, {1, 0}, {1, 0}) - ExpPoly::one(2));
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    ExpPoly g = oracle::random_analytic(rng, 2, 3, 3);
    std::vector<unsigned> level = {1u + (unsigned)trial % 3u, 1u + ((unsigned)trial / 3u) % 3u};
    Rational scale = rational_factorial(level[0] - 1) * rational_factorial(level[1] - 1);
    CHECK(norm_sq(multi_true_represent(g, level)) == GaussianRational(scale) * norm_sq(g));
  }
}

TEST_CASE("homogeneous membership examples") {
  ExpPoly analytic = ExpPoly::monomial(2, {2, 1}, {0, 0});
  CHECK(homogeneous_membership(analytic, 1));
  CHECK(homogeneous_alt_membership(analytic, 1));

  ExpPoly f = ExpPoly::monomial(2, {0, 0}, {1, 1});  // zbar1 zbar2
  CHECK_FALSE(homogeneous_membership(f, 2));
  CHECK(homogeneous_membership(f, 3));
  CHECK_FALSE(homogeneous_alt_membership(f, 2));
  CHECK(homogeneous_alt_membership(f, 3));

  ExpPoly g = ExpPoly::monomial(2, {0, 0}, {2, 0});  // zbar1^2
  CHECK_FALSE(homogeneous_alt_membership(g, 2));

  // d = 1 reduces to the euler-cartan test
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    ExpPoly h = oracle::random_polynomial(rng, 1, 5, 4);
    for (unsigned k = 1; k <= 4; ++k)
      CHECK(homogeneous_membership(h, k) == euler_cartan_membership(h, k));
  }
}

TEST_CASE("homogeneous membership equivalence on random samples") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<unsigned> dpick(1, 3), kpick(1, 4);
    unsigned d = dpick(rng), k = kpick(rng);
    ExpPoly f = oracle::random_polynomial(rng, d, 4, 4);
    CHECK(homogeneous_membership(f, k) == homogeneous_alt_membership(f, k));
  }
}

TEST_CASE("quasi membership examples") {
  ExpPoly zb1 = ExpPoly::monomial(2, {0, 0}, {1, 0});
  ExpPoly zb2 = ExpPoly::monomial(2, {0, 0}, {0, 1});
  CHECK(quasi_membership(zb1, {1, 1}, {2, 1}));
  CHECK_FALSE(quasi_membership(zb2, {1, 1}, {2, 1}));
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    ExpPoly f = oracle::random_polynomial(rng, 2, 4, 4);
    for (unsigned k = 1; k <= 3; ++k)
      CHECK(quasi_membership(f, {2}, {k}) == homogeneous_membership(f, k));
  }
  CHECK_THROWS_AS(quasi_membership(zb1, {1, 2}, {1, 1}), std::domain_error);
}

TEST_CASE("homogeneous component counts") {
  CHECK(homogeneous_component_count(2, 1) == 1);
  CHECK(homogeneous_component_count(2, 2) == 3);
  CHECK(homogeneous_component_count(3, 3) == 10);
  for (unsigned d = 1; d <= 3; ++d)
    for (unsigned k = 1; k <= 4; ++k) {
      // enumerate multi-indices |m| <= k-1 in d variables
      unsigned count = 0;
      std::vector<unsigned> m(d, 0);
      while (true) {
        unsigned tot = 0;
        for (unsigned x : m) tot += x;
        if (tot <= k - 1) ++count;
        unsigned j = 0;
        while (j < d && m[j] == k) m[j++] = 0;
        if (j == d) break;
        ++m[j];
      }
      CHECK(homogeneous_component_count(d, k) == BigInt(count));
      CHECK(homogeneous_level_indices(d, k).size() == count);
    }
}

TEST_CASE("homogeneous space equals the union of true levels up to k+d-1") {
  for (unsigned d = 2; d <= 3; ++d) {
    for (unsigned k = 1; k <= 3; ++k) {
      for (const auto& idx : homogeneous_level_indices(d, k))
        CHECK(homogeneous_membership(multi_true_represent(ExpPoly::one(d), idx), k));
      std::vector<unsigned> outside(d, 1);
      outside[0] = k + d;
      CHECK_FALSE(homogeneous_membership(multi_true_represent(ExpPoly::one(d), outside), k));
    }
  }
}

TEST_CASE("non-polynomial inputs are rejected") {
  ExpPoly f = ExpPoly::one(1);
  f.set_exp_u({GaussianRational(1)});
  CHECK_THROWS_AS(true_decompose(f), std::domain_error);
  ExpPoly g = ExpPoly::one(2);
  g.set_exp_v({GaussianRational(1), GaussianRational(0)});
  CHECK_THROWS_AS(homogeneous_membership(g, 2), std::domain_error);
}
