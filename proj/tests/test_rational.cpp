#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lct/rational.hpp"

using namespace lct;

TEST_CASE("rationals are canonical after arithmetic") {
  Rational a = make_rational(6, -4);
  CHECK(numerator(a) == -3);
  CHECK(denominator(a) == 2);
  CHECK(to_string(a) == "-3/2");
  CHECK(to_string(a - a) == "0/1");
  CHECK(make_rational(2, 4) == make_rational(1, 2));
}

TEST_CASE("parse_rational accepts only the canonical spelling") {
  CHECK(parse_rational("3/2") == make_rational(3, 2));
  CHECK(parse_rational("-3/2") == make_rational(-3, 2));
  CHECK(parse_rational("0/1") == Rational(0));
  CHECK(parse_rational("17/1") == Rational(17));

  for (const char* bad : {"2/4", "3/-2", "-0/1", "01/2", "1/02", "3", "1.5", "3/0", "", "/2", "a/b"}) {
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
  CHECK_THROWS_MATCHES(parse_rational("2/4"), Error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("NonCanonicalRational")));
}

TEST_CASE("parse and format round-trip") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  for (int i = 0; i < 2000; ++i) {
    Rational q = make_rational(num(rng), den(rng));
    CHECK(parse_rational(to_string(q)) == q);
  }
}

TEST_CASE("gaussian rational field operations are exact") {
  GaussianRational i{Rational(0), Rational(1)};
  CHECK(i * i == gauss(-1, 0));
  CHECK(i.conj() == gauss(0, -1));
  CHECK(i.inverse() == gauss(0, -1));

  GaussianRational z = gauss(3, 4, -1, 2);  // 3/4 - i/2
  CHECK(z * z.inverse() == gauss(1, 0));
  CHECK((z + (-z)).is_zero());
  CHECK(z.norm() == make_rational(13, 16));
  CHECK_THROWS_AS(GaussianRational{}.inverse(), Error);
}

TEST_CASE("gaussian arithmetic closure on random values") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 12);
  for (int k = 0; k < 500; ++k) {
    GaussianRational a = gauss(num(rng), den(rng), num(rng), den(rng));
    GaussianRational b = gauss(num(rng), den(rng), num(rng), den(rng));
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("limit_denominator returns the input when already small") {
  Rational q = make_rational(7, 3);
  CHECK(limit_denominator(q, 10) == q);
}

TEST_CASE("limit_denominator approximates within the bound") {
  Rational pi_ish = make_rational(314159265, 100000000);
  Rational approx = limit_denominator(pi_ish, 1000);
  CHECK(denominator(approx) <= 1000);
  Rational err = approx - pi_ish;
  if (err < 0) err = -err;
  CHECK(err < make_rational(1, 1000));
  CHECK(limit_denominator(-pi_ish, 1000) == -approx);
}
