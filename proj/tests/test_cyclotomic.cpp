#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "refl/cyclotomic.hpp"

using refl::Cyclotomic;
using refl::Rational;

namespace {

Cyclotomic random_elem(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  auto q = [&] { return Rational(num(rng), den(rng)); };
  return Cyclotomic(q(), q(), q(), q());
}

}  // namespace

TEST_CASE("basis reduction identities") {
  Cyclotomic z = Cyclotomic::zeta_pow(1);
  CHECK(z * z * z * z == Cyclotomic::zeta_pow(2) - Cyclotomic::one());
  CHECK(Cyclotomic::zeta_pow(6) == -Cyclotomic::one());
  CHECK(Cyclotomic::zeta_pow(12) == Cyclotomic::one());
  for (int k = 0; k < 24; ++k)
    CHECK(Cyclotomic::zeta_pow(k) == Cyclotomic::zeta_pow(k % 12));
}

TEST_CASE("omega is a primitive cube root of unity") {
  Cyclotomic w = Cyclotomic::omega();
  CHECK(w != Cyclotomic::one());
  CHECK(w * w * w == Cyclotomic::one());
  CHECK(Cyclotomic::one() + w + w * w == Cyclotomic::zero());
}

TEST_CASE("field axioms on sampled elements") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    Cyclotomic a = random_elem(rng), b = random_elem(rng),
               c = random_elem(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Cyclotomic::zero() == a);
    CHECK(a * Cyclotomic::one() == a);
    CHECK(a - a == Cyclotomic::zero());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Cyclotomic::one());
      CHECK(a.inverse().inverse() == a);
    }
  }
}

TEST_CASE("inverse of zero is rejected") {
  CHECK_THROWS_AS(Cyclotomic::zero().inverse(), refl::DivisionByZero);
}

TEST_CASE("conjugation is the automorphism z -> z^-1") {
  CHECK(Cyclotomic::zeta_pow(1).conj() == Cyclotomic::zeta_pow(11));
  std::mt19937 rng(777);
  for (int trial = 0; trial < 50; ++trial) {
    Cyclotomic a = random_elem(rng), b = random_elem(rng);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK(a.conj().conj() == a);
  }
}

TEST_CASE("text round trip") {
  std::mt19937 rng(999);
  for (int trial = 0; trial < 50; ++trial) {
    Cyclotomic a = random_elem(rng);
    CHECK(Cyclotomic::parse(a.to_string()) == a);
  }
  CHECK(Cyclotomic::parse("-1/3 + 0*z + 2/3*z^2 + 0*z^3") ==
        Cyclotomic(Rational(-1, 3), 0, Rational(2, 3), 0));
}

TEST_CASE("hash respects equality") {
  Cyclotomic a(Rational(1, 2), 1, 0, Rational(-3, 4));
  Cyclotomic b(Rational(2, 4), 1, 0, Rational(-6, 8));
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
}
