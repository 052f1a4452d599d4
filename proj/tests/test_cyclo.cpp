#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "superorb/cyclo.hpp"

using superorb::Cyclo;
using superorb::Rational;

namespace {

Cyclo random_element(std::mt19937& rng, long long n) {
  std::uniform_int_distribution<long long> exp_d(0, n - 1);
  std::uniform_int_distribution<long long> num_d(-6, 6);
  std::uniform_int_distribution<long long> den_d(1, 4);
  Cyclo x;
  int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t)
    x += Rational(num_d(rng), den_d(rng)) * Cyclo::zeta(n, exp_d(rng));
  return x;
}

}  // namespace

TEST_CASE("rational parsing round trip") {
  CHECK(superorb::parse_rational("3/4") == Rational(3, 4));
  CHECK(superorb::parse_rational("-3/4") == Rational(-3, 4));
  CHECK(superorb::parse_rational(" 12 ") == Rational(12));
  CHECK(superorb::rational_str(Rational(-6, 8)) == "-3/4");
  CHECK(superorb::rational_str(Rational(5)) == "5");
  CHECK_THROWS_AS(superorb::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(superorb::parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(superorb::parse_rational(""), std::invalid_argument);
}

TEST_CASE("roots of unity satisfy their minimal relations") {
  CHECK(Cyclo::zeta(4) * Cyclo::zeta(4) == Cyclo(-1));
  CHECK(Cyclo::zeta(8, 4) == Cyclo(-1));
  CHECK(Cyclo::zeta(1) == Cyclo(1));
  CHECK(Cyclo::zeta(2) == Cyclo(-1));
  CHECK(Cyclo(1) + Cyclo::zeta(3) + Cyclo::zeta(3, 2) == Cyclo());
  Cyclo z5 = Cyclo::zeta(5);
  CHECK(Cyclo(1) + z5 + z5 * z5 + z5 * z5 * z5 + z5 * z5 * z5 * z5 == Cyclo());
}

TEST_CASE("canonical form minimizes the level") {
  CHECK(Cyclo::zeta(6).level() == 3);
  CHECK(Cyclo::zeta(6) == Cyclo(1) + Cyclo::zeta(3));
  CHECK(Cyclo::zeta(12, 3).level() == 4);
  CHECK(Cyclo::zeta(12, 3) == Cyclo::zeta(4));
  Cyclo sqrt2 = Cyclo::zeta(8) + Cyclo::zeta(8, 7);
  CHECK(sqrt2.level() == 8);
  CHECK((sqrt2 * sqrt2).level() == 1);
  CHECK(sqrt2 * sqrt2 == Cyclo(2));
  CHECK(Cyclo::zeta(8) * Cyclo::zeta(8, 7) == Cyclo(1));
  CHECK((Cyclo::zeta(48, 16)).level() == 3);
}

TEST_CASE("exact division") {
  Cyclo i = Cyclo::zeta(4);
  CHECK((Cyclo(1) + i) / (Cyclo(1) - i) == i);
  Cyclo sqrt2 = Cyclo::zeta(8) + Cyclo::zeta(8, 7);
  CHECK(Cyclo(2) / sqrt2 == sqrt2);
  CHECK(Cyclo(1) / (Cyclo(1) / sqrt2) == sqrt2);
  CHECK_THROWS_AS(Cyclo(1) / Cyclo(), std::domain_error);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  for (long long n : {1LL, 3LL, 4LL, 5LL, 8LL, 12LL}) {
    for (int rep = 0; rep < 8; ++rep) {
      Cyclo a = random_element(rng, n);
      Cyclo b = random_element(rng, n);
      Cyclo c = random_element(rng, n);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a / a == Cyclo(1));
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("galois action and conjugation") {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 8; ++rep) {
    Cyclo a = random_element(rng, 12);
    Cyclo b = random_element(rng, 12);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).galois(5) == a.galois(5) + b.galois(5));
    CHECK((a * b).galois(7) == a.galois(7) * b.galois(7));
    std::complex<double> ea = a.embed();
    std::complex<double> ec = a.conj().embed();
    CHECK(std::abs(ec - std::conj(ea)) < 1e-12);
  }
  CHECK_THROWS_AS(Cyclo::zeta(8).galois(2), std::invalid_argument);
}

TEST_CASE("numerical embedding") {
  CHECK(std::abs((Cyclo::zeta(8) + Cyclo::zeta(8, 7)).embed() -
                 std::complex<double>(std::sqrt(2.0), 0)) < 1e-14);
  // 2*cos(2*pi/5) = (sqrt(5)-1)/2
  CHECK(std::abs((Cyclo::zeta(5) + Cyclo::zeta(5, 4)).embed().real() -
                 (std::sqrt(5.0) - 1) / 2) < 1e-14);
  CHECK(std::abs(Cyclo::zeta(48).embed() -
                 std::polar(1.0, 2 * M_PI / 48)) < 1e-14);
  std::mt19937 rng(3);
  for (int rep = 0; rep < 8; ++rep) {
    Cyclo a = random_element(rng, 8);
    Cyclo b = random_element(rng, 8);
    CHECK(std::abs((a * b).embed() - a.embed() * b.embed()) < 1e-11);
  }
}

TEST_CASE("root_of_unity from rational turns") {
  CHECK(Cyclo::root_of_unity(Rational(1, 2)) == Cyclo(-1));
  CHECK(Cyclo::root_of_unity(Rational(0)) == Cyclo(1));
  CHECK(Cyclo::root_of_unity(Rational(23, 48)) == Cyclo::zeta(48, 23));
  CHECK(Cyclo::root_of_unity(Rational(-1, 48)) == Cyclo::zeta(48, 47));
  CHECK(Cyclo::root_of_unity(Rational(-1, 48)) == Cyclo::root_of_unity(Rational(1, 48)).conj());
  CHECK(Cyclo::root_of_unity(Rational(5, 4)) == Cyclo::zeta(4));
}

TEST_CASE("text round trip") {
  std::mt19937 rng(19);
  for (long long n : {1LL, 4LL, 8LL, 12LL, 48LL}) {
    for (int rep = 0; rep < 10; ++rep) {
      Cyclo a = random_element(rng, n);
      CHECK(Cyclo::parse(a.str()) == a);
    }
  }
  CHECK(Cyclo::parse("3/4") == Cyclo(Rational(3, 4)));
  CHECK(Cyclo::parse("-2") == Cyclo(-2));
  CHECK(Cyclo::parse("z + z^7 (N=8)") == Cyclo::zeta(8) + Cyclo::zeta(8, 7));
  CHECK(Cyclo::parse("1/2*z + 1/2*z^7 (N=8)").embed().real() ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(Cyclo::parse("0 (N=1)") == Cyclo());
  CHECK(Cyclo().str() == "0 (N=1)");
  CHECK((Cyclo(1) - Cyclo::zeta(4)).str() == "1 - z (N=4)");
  CHECK_THROWS_AS(Cyclo::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Cyclo::parse("z + (N=8)"), std::invalid_argument);
  CHECK_THROWS_AS(Cyclo::parse("q (N=8)"), std::invalid_argument);
}

TEST_CASE("recognize sparse exact values") {
  using R = Cyclo::Recog;
  auto sqrt2 = Cyclo::zeta(8) + Cyclo::zeta(8, 7);

  auto r1 = Cyclo::recognize({std::sqrt(0.5), 0.0}, 8, 1e-9);
  REQUIRE(r1.status == R::ok);
  CHECK(r1.value == Rational(1, 2) * sqrt2);

  auto r2 = Cyclo::recognize({-std::sqrt(2.0), 0.0}, 8, 1e-9);
  REQUIRE(r2.status == R::ok);
  CHECK(r2.value == -sqrt2);

  auto r3 = Cyclo::recognize({0.5, 0.0}, 8, 1e-9);
  REQUIRE(r3.status == R::ok);
  CHECK(r3.value == Cyclo(Rational(1, 2)));

  auto r4 = Cyclo::recognize({0.0, 1.0}, 8, 1e-9);
  REQUIRE(r4.status == R::ok);
  CHECK(r4.value == Cyclo::zeta(4));

  auto r5 = Cyclo::recognize({0.0, 0.0}, 8, 1e-9);
  REQUIRE(r5.status == R::ok);
  CHECK(r5.value.is_zero());

  // zeta_48 itself
  auto r6 = Cyclo::recognize(std::polar(1.0, 2 * M_PI / 48), 48, 1e-9);
  REQUIRE(r6.status == R::ok);
  CHECK(r6.value == Cyclo::zeta(48));

  // not in the two-term family over Q(zeta_8) at this precision
  auto r7 = Cyclo::recognize({std::log(2.0), 0.0}, 8, 1e-10);
  CHECK(r7.status == R::no_candidate);
}

TEST_CASE("recognize round trip on random sparse elements") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long long> exp_d(0, 7);
  std::uniform_int_distribution<long long> num_d(-5, 5);
  std::uniform_int_distribution<long long> den_d(1, 3);
  for (int rep = 0; rep < 24; ++rep) {
    Cyclo x = Rational(num_d(rng), den_d(rng)) * Cyclo::zeta(8, exp_d(rng)) +
              Rational(num_d(rng), den_d(rng)) * Cyclo::zeta(8, exp_d(rng));
    auto r = Cyclo::recognize(x.embed(), 8, 1e-9);
    if (r.status == Cyclo::Recog::ok) CHECK(r.value == x);
    // ambiguity is allowed for coincidental near-collisions, silence is not
    CHECK(r.status != Cyclo::Recog::no_candidate);
  }
}

TEST_CASE("total order is consistent") {
  Cyclo a(1), b = Cyclo::zeta(4), c = Cyclo::zeta(8);
  CHECK(((a < b) || (b < a)));
  CHECK(!(a < a));
  if (a < b) CHECK(!(b < a));
  CHECK(((a < b && b < c) ? (a < c) : true));
}
