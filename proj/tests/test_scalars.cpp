#include "polyfock/scalars.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace pfx;

TEST_CASE("rational normalization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational(9, -6) == Rational(-3, 2));
  CHECK(Rational(9, -6).denominator() == 2);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK(Rational(7).to_string() == "7");
  CHECK(Rational(-3, 6).to_string() == "-1/2");
  CHECK(Rational::from_string("-3/6") == Rational(-1, 2));
  CHECK(Rational::from_string("42") == Rational(42));
  CHECK_THROWS(Rational::from_string("x/2"));
  CHECK_THROWS(Rational::from_string("1/0"));
}

TEST_CASE("field axioms hold on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 12);
  for (int trial = 0; trial < 300; ++trial) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
  }
  for (int trial = 0; trial < 200; ++trial) {
    GaussianRational a(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    GaussianRational b(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    GaussianRational c(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).abs_sq() == a.abs_sq() * b.abs_sq());
    if (!a.is_zero()) CHECK(a * a.inverse() == GaussianRational(1));
  }
}

TEST_CASE("gaussian rational arithmetic") {
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  GaussianRational z(Rational(3, 5), Rational(4, 5));
  CHECK(z.abs_sq() == Rational(1));
  CHECK(z * z.conj() == GaussianRational(1));
  CHECK((GaussianRational(1) / z) == z.conj());
  CHECK_THROWS_AS(GaussianRational(0).inverse(), std::domain_error);
}

TEST_CASE("exp scalar multiplication") {
  ExpScalar a(GaussianRational(1), GaussianRational(-1));
  ExpScalar b(GaussianRational(1), GaussianRational(1));
  CHECK(a * b == ExpScalar(GaussianRational(1), GaussianRational(0)));
  CHECK(a * b == ExpScalar::one());

  ExpScalar two_half(GaussianRational(2), GaussianRational(Rational(1, 2)));
  ExpScalar three_half(GaussianRational(3), GaussianRational(Rational(1, 2)));
  CHECK(two_half * three_half == ExpScalar(GaussianRational(6), GaussianRational(1)));

  ExpScalar zero5(GaussianRational(0), GaussianRational(5));
  CHECK(zero5 == ExpScalar::zero());  // zero coefficient forces exponent 0
  CHECK(zero5 * ExpScalar(GaussianRational(7), GaussianRational(2)) == ExpScalar::zero());
}

TEST_CASE("exp scalar addition requires a shared exponent") {
  ExpScalar a(GaussianRational(1), GaussianRational(2));
  ExpScalar b(GaussianRational(3), GaussianRational(2));
  CHECK(a + b == ExpScalar(GaussianRational(4), GaussianRational(2)));

  ExpScalar c(GaussianRational(5), GaussianRational(3));
  CHECK(c + ExpScalar::zero() == c);
  CHECK(ExpScalar::zero() + c == c);

  ExpScalar d(GaussianRational(1), GaussianRational(1));
  ExpScalar e(GaussianRational(1), GaussianRational(2));
  CHECK_THROWS_AS(d + e, std::domain_error);
}

TEST_CASE("exp scalar algebra properties") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    GaussianRational c1 = oracle::random_coeff(rng), c2 = oracle::random_coeff(rng),
                     c3 = oracle::random_coeff(rng);
    GaussianRational e1 = oracle::random_coeff(rng), e2 = oracle::random_coeff(rng),
                     e3 = oracle::random_coeff(rng);
    ExpScalar a(c1, e1), b(c2, e2), c(c3, e3);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    ExpScalar inv_exp(GaussianRational(1), -e1);
    ExpScalar direct(c1, GaussianRational(0));
    CHECK(a * inv_exp == direct);  // e^x e^{-x} = 1 exactly
    CHECK(a.conj().conj() == a);
  }
}

TEST_CASE("factorial and binomial helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(factorial(25) == BigInt("15511210043330985984000000"));  // past 64-bit
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(5, 7) == 0);
  CHECK(falling_factorial(7, 3) == 210);
  CHECK(falling_factorial(3, 5) == 0);
}
