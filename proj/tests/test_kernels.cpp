#include "polyfock/kernels.hpp"

#include "polyfock/decomposition.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace pfx;

namespace {

ExpPoly m1(unsigned z, unsigned zb, GaussianRational c = GaussianRational(1)) {
  return ExpPoly::monomial(1, {z}, {zb}, std::move(c));
}

GaussianRational kernel_coeff(const KernelFunc& kf, unsigned zeta, unsigned zetabar, unsigned z,
                              unsigned zbar) {
  auto it = kf.terms.find({zeta, zetabar, z, zbar});
  return it == kf.terms.end() ? GaussianRational(0) : it->second;
}

}  // namespace

TEST_CASE("level one kernel is the classical exponential kernel") {
  KernelFunc q = true_kernel(1);
  REQUIRE(q.terms.size() == 1);
  CHECK(kernel_coeff(q, 0, 0, 0, 0) == GaussianRational(1));
}

TEST_CASE("level two kernel matches 1 + (z - zeta)(zetabar - zbar)") {
  KernelFunc q = true_kernel(2);
  CHECK(kernel_coeff(q, 0, 0, 0, 0) == GaussianRational(1));
  CHECK(kernel_coeff(q, 0, 1, 1, 0) == GaussianRational(1));
  CHECK(kernel_coeff(q, 0, 0, 1, 1) == GaussianRational(-1));
  CHECK(kernel_coeff(q, 1, 1, 0, 0) == GaussianRational(-1));
  CHECK(kernel_coeff(q, 1, 0, 0, 1) == GaussianRational(1));
  CHECK(q.terms.size() == 5);
}

TEST_CASE("kernel conjugate symmetry under variable swap") {
  // q_zeta(z) with the roles swapped equals the conjugate of q_z(zeta):
  // swap (zeta, zetabar) <-> (z, zbar) and conjugate the coefficients.
  for (unsigned k = 1; k <= 4; ++k) {
    KernelFunc q = true_kernel(k);
    for (const auto& [m, c] : q.terms) {
      // the swap also swaps the e^{zeta zbar} factor into e^{z zetabar},
      // whose conjugate matches: compare coefficients directly.
      GaussianRational swapped = kernel_coeff(q, m.zbar, m.z, m.zetabar, m.zeta);
      CHECK(swapped == c.conj());
    }
  }
}

TEST_CASE("factored form exists with unit constant term") {
  for (unsigned k = 1; k <= 5; ++k) {
    UniPoly p = kernel_factor_check(k);
    CHECK(p.degree() == (int)k - 1);
    CHECK(p.coeff(0) == GaussianRational(1));
    for (int j = 0; j <= p.degree(); ++j) CHECK(p.coeff(j).is_real());
  }
  CHECK(kernel_factor_check(2) ==
        UniPoly({GaussianRational(1), GaussianRational(1)}));  // 1 + lambda
}

TEST_CASE("projection worked examples") {
  ExpPoly f = m1(1, 1);
  CHECK(project_true(f, 2, ProjectionMethod::kernel) == f - ExpPoly::one(1));
  CHECK(project_true(f, 2, ProjectionMethod::gram) == f - ExpPoly::one(1));
  CHECK(project_true(f, 1, ProjectionMethod::kernel) == ExpPoly::one(1));
  CHECK(project_true(f, 1, ProjectionMethod::gram) == ExpPoly::one(1));
  ExpPoly analytic = m1(3, 0) + ExpPoly::z(1).scaled(GaussianRational(Rational(1, 3)));
  CHECK(project_true(analytic, 1, ProjectionMethod::kernel) == analytic);
}

TEST_CASE("kernel and gram projections agree") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    ExpPoly f = oracle::random_polynomial(rng, 1, 6, 5);
    for (unsigned k = 1; k <= 4; ++k)
      CHECK(project_true(f, k, ProjectionMethod::kernel) ==
            project_true(f, k, ProjectionMethod::gram));
  }
}

TEST_CASE("projection is idempotent and self adjoint") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    ExpPoly f = oracle::random_polynomial(rng, 1, 5, 4);
    ExpPoly g = oracle::random_polynomial(rng, 1, 5, 4);
    for (unsigned k = 1; k <= 3; ++k) {
      ExpPoly pf = project_true(f, k, ProjectionMethod::kernel);
      CHECK(project_true(pf, k, ProjectionMethod::kernel) == pf);
      CHECK(inner_product(pf, g) == inner_product(f, project_true(g, k, ProjectionMethod::kernel)));
    }
  }
}

TEST_CASE("projections sum to the identity on the flag") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 20; ++trial) {
    ExpPoly f = oracle::random_polynomial(rng, 1, 6, 5);
    ExpPoly total(1);
    for (unsigned k = 1; k <= membership_level(f); ++k)
      total = total + project_true(f, k, ProjectionMethod::kernel);
    CHECK(total == f);
  }
}

TEST_CASE("kernel slice is a pure level-k element") {
  for (unsigned k = 1; k <= 4; ++k) {
    KernelFunc q = true_kernel(k);
    GaussianRational z0(Rational(1, 2), Rational(-1, 3));
    ExpPoly qz(1);
    for (const auto& [m, c] : q.terms) {
      GaussianRational coef = c * gr_pow(z0, m.z) * gr_pow(z0.conj(), m.zbar);
      ExpPoly t(1);
      t.set_term({{m.zeta}, {m.zetabar}}, coef);
      qz = qz + t;
    }
    ExpPoly expo = ExpPoly::one(1);
    expo.set_exp_u({z0.conj()});
    qz = qz * expo;
    CHECK(membership_level(qz) == k);
    // a pure level element: lowering k-1 times leaves an analytic function
    ExpPoly probe = qz;
    for (unsigned i = 1; i < k; ++i) probe = probe.apply_lowering(1);
    CHECK(probe.is_analytic());
  }
}

TEST_CASE("tensor projection") {
  // d=2, f = z1 zbar1 at level (2,1): the 1-d worked example in coordinate 1
  ExpPoly f = ExpPoly::monomial(2, {1, 0}, {1, 0});
  CHECK(tensor_project(f, {2, 1}) == f - ExpPoly::one(2));
  CHECK(tensor_project(f, {1, 1}) == ExpPoly::one(2));
  // analytic functions reproduce at (1,...,1)
  ExpPoly g = ExpPoly::monomial(2, {2, 1}, {0, 0});
  CHECK(tensor_project(g, {1, 1}) == g);
  // component living elsewhere projects to zero
  ExpPoly zb2 = ExpPoly::monomial(2, {0, 0}, {0, 1});
  CHECK(tensor_project(zb2, {2, 1}).is_zero());

  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 10; ++trial) {
    ExpPoly h = oracle::random_polynomial(rng, 2, 4, 4);
    TrueLevelDecomposition dec = multi_true_decompose(h);
    for (const auto& [idx, comp] : dec.components) {
      CHECK(tensor_project(h, idx, ProjectionMethod::kernel) == comp);
      CHECK(tensor_project(h, idx, ProjectionMethod::gram) == comp);
    }
  }
}

TEST_CASE("non-polynomial projection input is rejected") {
  ExpPoly f = ExpPoly::one(1);
  f.set_exp_u({GaussianRational(1)});
  CHECK_THROWS_AS(project_true(f, 1, ProjectionMethod::kernel), std::domain_error);
  CHECK_THROWS_AS(project_true(f, 1, ProjectionMethod::gram), std::domain_error);
}
