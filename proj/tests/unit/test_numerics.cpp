#include <doctest.h>

#include "../oracle/oracle.hpp"
#include "../support/generators.hpp"
#include "jcouple/numerics.hpp"

using namespace jcouple;

TEST_CASE("parse_halfint accepts k, k/2 and decimals") {
  CHECK(parse_halfint("3/2").twice() == 3);
  CHECK(parse_halfint("2").twice() == 4);
  CHECK(parse_halfint("-1/2").twice() == -1);
  CHECK(parse_halfint("4/2").twice() == 4);
  CHECK(parse_halfint("0.5").twice() == 1);
  CHECK(parse_halfint("-1.5").twice() == -3);
  CHECK_THROWS_AS(parse_halfint("5/3"), DomainError);
  CHECK_THROWS_AS(parse_halfint("abc"), DomainError);
  CHECK_THROWS_AS(parse_halfint(""), DomainError);
  CHECK_THROWS_AS(parse_halfint("0.25"), DomainError);
}

TEST_CASE("HalfInt canonical text round-trips") {
  for (int t = -41; t <= 41; ++t) {
    const HalfInt h = HalfInt::from_twice(t);
    CHECK(parse_halfint(h.to_string()) == h);
  }
  CHECK(HalfInt(3, 2).to_string() == "3/2");
  CHECK(HalfInt(-2).to_string() == "-2");
  CHECK_THROWS_AS(HalfInt(1, 3), DomainError);
}

TEST_CASE("classify examples") {
  CHECK(classify(HalfInt(1, 2)) == Parity::HalfOdd);
  CHECK(classify(HalfInt(0)) == Parity::Natural);
  CHECK(classify(HalfInt(1, 2) + HalfInt(3, 2)) == Parity::Natural);
  CHECK_THROWS_AS(classify(HalfInt(-1, 2)), DomainError);
  CHECK(classify_signed(HalfInt(-1, 2)) == SignedClass::NegativeHalfOdd);
  CHECK(classify_signed(HalfInt(-3)) == SignedClass::NegativeNatural);
}

TEST_CASE("closure table of the integers and half-odd numbers, twice in [0,40]") {
  auto is_even = [](HalfInt h) { return h.is_integer() && h.as_integer() % 2 == 0; };
  auto is_odd = [](HalfInt h) { return h.is_integer() && h.as_integer() % 2 != 0; };
  for (int a = 0; a <= 40; ++a) {
    const HalfInt x = HalfInt::from_twice(a);
    // every element is exactly one of N, H
    CHECK((classify(x) == Parity::Natural) == x.is_integer());
    CHECK((classify(x) == Parity::HalfOdd) != (classify(x) == Parity::Natural));
    for (int b = 0; b <= 40; ++b) {
      const HalfInt y = HalfInt::from_twice(b);
      if (is_even(x) && is_even(y)) CHECK(is_even(x + y));
      if (is_even(x) && is_odd(y)) CHECK(is_odd(x + y));
      if (is_odd(x) && is_odd(y)) CHECK(is_even(x + y));
      if (classify(x) == Parity::Natural && classify(y) == Parity::HalfOdd) {
        CHECK(classify(x + y) == Parity::HalfOdd);
      }
      if (classify(x) == Parity::HalfOdd && classify(y) == Parity::HalfOdd) {
        CHECK(classify(x + y) == Parity::Natural);
        CHECK(classify(abs(x - y)) == Parity::Natural);
      }
    }
  }
}

TEST_CASE("minus_one_power and univalence_sign") {
  CHECK(minus_one_power(HalfInt(3)) == -1);
  CHECK(minus_one_power(HalfInt(-2)) == 1);
  CHECK_THROWS_AS(minus_one_power(HalfInt(1, 2)), DomainError);
  CHECK(univalence_sign(HalfInt(1, 2)) == -1);
  CHECK(univalence_sign(HalfInt(2)) == 1);
}

TEST_CASE("surd_mul examples") {
  const Surd half(1, Rational(1, 2));
  CHECK(surd_mul(half, half) == Surd(1, Rational(1, 4)));
  CHECK(surd_mul(half, half) == Surd::from_rational(Rational(1, 2)));
  CHECK(surd_mul(Surd(-1, Rational(2, 3)), Surd(1, Rational(3, 2))) == Surd::from_rational(-1));
  CHECK(surd_mul(Surd(), Surd(1, 5)).is_zero());
}

TEST_CASE("Surd construction and text") {
  CHECK(Surd(1, 0).sign() == 0);
  CHECK_THROWS_AS(Surd(1, -1), DomainError);
  CHECK_THROWS_AS(Surd(0, 2), DomainError);
  CHECK(Surd().to_string() == "0");
  CHECK(Surd(1, Rational(1, 2)).to_string() == "√(1/2)");
  CHECK(Surd(-1, Rational(2, 3)).to_string() == "-√(2/3)");
  CHECK(Surd::from_rational(Rational(-1, 2)).to_string() == "-1/2");
  CHECK_THROWS_AS(Surd(1, 2) / Surd(), DomainError);
  CHECK(Surd(1, 2).to_double() == doctest::Approx(1.4142135623730951));
}

TEST_CASE("Surd multiplication is associative and commutative on 1000 triples") {
  for (int k = 0; k < 1000; ++k) {
    const Surd a = gen::surd(), b = gen::surd(), c = gen::surd();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
  }
}

TEST_CASE("surd_to_sum examples") {
  const auto s1 = surd_to_sum(Surd(1, Rational(1, 2)));
  REQUIRE(s1.terms().size() == 1);
  CHECK(s1.terms().at(2) == GaussianRational{Rational(1, 2), 0});

  const auto s2 = surd_to_sum(Surd(-1, Rational(4, 9)));
  REQUIRE(s2.terms().size() == 1);
  CHECK(s2.terms().at(1) == GaussianRational{Rational(-2, 3), 0});

  const auto s3 = surd_to_sum(Surd(1, 8));
  REQUIRE(s3.terms().size() == 1);
  CHECK(s3.terms().at(2) == GaussianRational{2, 0});

  CHECK(surd_to_sum(Surd()).is_zero());
}

TEST_CASE("PhasedSurdSum ring laws on random samples") {
  for (int k = 0; k < 300; ++k) {
    const auto x = gen::phased_sum(), y = gen::phased_sum(), z = gen::phased_sum();
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK((x - x).is_zero());
  }
  for (int k = 0; k < 300; ++k) {
    const Surd s = gen::surd();
    CHECK((surd_to_sum(s) + surd_to_sum(-s)).is_zero());
    // squaring a single surd lands back on its signed rational square
    CHECK(surd_to_sum(s) * surd_to_sum(s) == PhasedSurdSum::from_rational(s.square()));
  }
}

TEST_CASE("PhasedSurdSum phases") {
  const auto one = PhasedSurdSum::from_rational(1);
  CHECK(one.times_i_power(2) == -one);
  CHECK(one.times_i_power(4) == one);
  CHECK(one.times_i_power(1).conj() == one.times_i_power(3));
  CHECK(one.times_i_power(1).to_string() == "i");
  CHECK(PhasedSurdSum().to_string() == "0");
}

TEST_CASE("square_free_split") {
  auto s = square_free_split(72);
  CHECK(s.root == 6);
  CHECK(s.core == 2);
  s = square_free_split(1);
  CHECK(s.root == 1);
  CHECK(s.core == 1);
  s = square_free_split(30);
  CHECK(s.root == 1);
  CHECK(s.core == 30);
}

TEST_CASE("factorial_factorized examples") {
  CHECK(factorial_factorized(0).exponents().empty());
  const auto f4 = factorial_factorized(4).exponents();
  CHECK(f4 == std::map<std::uint32_t, std::uint32_t>{{2, 3}, {3, 1}});
  CHECK(factorial_factorized(10).exponents().at(2) == 8);
}

TEST_CASE("factorial reconstruction matches the iterative product for n <= 30") {
  for (unsigned n = 0; n <= 30; ++n) {
    CHECK(factorial_factorized(n).value() == oracle::factorial_iterative(n));
    CHECK(factorial(n) == oracle::factorial_iterative(n));
  }
  CHECK(factorial(60) == oracle::factorial_iterative(60));
}

TEST_CASE("PrimePowerProduct builds factorial ratios") {
  PrimePowerProduct p;
  p.multiply_factorial(10).multiply_factorial(7, -1).multiply_integer(4, -1);
  CHECK(p.to_rational() == Rational(720, 4));
}

TEST_CASE("parse_rational and to_string") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
}
