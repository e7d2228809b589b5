#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apa/scalar.hpp"

using namespace apa;

TEST_CASE("rational field arithmetic") {
  Field f(1, 1);
  Scalar a(&f, Rational(9, 4)), b(&f, Rational(2, 3));
  CHECK(a * b == Scalar(&f, Rational(3, 2)));
  CHECK((a - a).is_zero());
  CHECK(a.inverse() * a == Scalar::one(&f));
  CHECK(a.sign_real() == 1);
  CHECK((-a).sign_real() == -1);
}

TEST_CASE("gaussian part and conjugation") {
  Field f(1, 1);
  Scalar i = Scalar::i(&f);
  CHECK(i * i == -Scalar::one(&f));
  Scalar z = Scalar(&f, 2) + i * Scalar(&f, 3);
  CHECK(z.conj() == Scalar(&f, 2) - i * Scalar(&f, 3));
  CHECK((z * z.conj()).is_conj_fixed());
  CHECK((z * z.conj()).sign_real() == 1);
  CHECK(z.inverse() * z == Scalar::one(&f));
  // conj is a ring homomorphism fixing rationals, order 2
  Scalar w = Scalar(&f, Rational(1, 7)) - i;
  CHECK((z * w).conj() == z.conj() * w.conj());
  CHECK(z.conj().conj() == z);
}

TEST_CASE("quartic tower theta^4 = 2") {
  Field f = Field::for_spin(2);
  CHECK(f.degree() == 4);
  Scalar t = Scalar::theta(&f);
  Scalar t4 = t * t * t * t;
  CHECK(t4 == Scalar(&f, 2));
  // delta = theta^2 = sqrt(2) > 0, theta^3 - theta > 0, theta - 2 < 0
  CHECK((t * t).sign_real() == 1);
  CHECK((t * t * t - t).sign_real() == 1);
  CHECK((t - Scalar(&f, 2)).sign_real() == -1);
  CHECK(t.inverse() * t == Scalar::one(&f));
  // inverse of a mixed element
  Scalar z = t * t + Scalar(&f, 1) + Scalar::i(&f) * t;
  CHECK(z.inverse() * z == Scalar::one(&f));
}

TEST_CASE("field selection") {
  CHECK(Field::for_delta(Rational(9, 4)).degree() == 1);
  CHECK(Field::for_delta(Rational(4)).degree() == 1);
  CHECK(Field::for_delta(Rational(3)).degree() == 2);
  CHECK(Field::for_spin(4).degree() == 2);   // 4^{1/4} = sqrt(2)
  CHECK(Field::for_spin(16).degree() == 1);  // 16^{1/4} = 2
  CHECK(Field::for_spin(3).degree() == 4);
}

TEST_CASE("powers") {
  Field f = Field::for_spin(2);
  Scalar d = Scalar::theta(&f) * Scalar::theta(&f);
  CHECK(pow(d, 4) == Scalar(&f, 4));
  CHECK(pow(d, -2) == Scalar(&f, Rational(1, 2)));
  CHECK(pow(d, 0) == Scalar::one(&f));
}
