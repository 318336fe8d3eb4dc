// Copyright 2026 the gregdow authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gregdow/rational.hpp"

#include <random>
#include <sstream>

#include <doctest.h>

namespace gregdow {

TEST_SUITE("rational") {

TEST_CASE("normalization keeps lowest terms and positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(0, 5).den() == 1);
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(2, -4).den() == 2);
  CHECK(Rational(2, -4).num() == -1);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 2) / Rational(1, 3) == Rational(3, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::invalid_argument);

  Rational acc(0);
  for (int i = 1; i <= 10; ++i) acc += Rational(1, i);
  CHECK(acc == Rational(7381, 2520));
  acc -= Rational(7381, 2520);
  CHECK(acc == Rational(0));

  // 1/3 has no finite binary or decimal expansion; summing it three thousand
  // times must land exactly on 1000.
  Rational third(1, 3);
  Rational sum(0);
  for (int i = 0; i < 3000; ++i) sum += third;
  CHECK(sum == Rational(1000));
}

TEST_CASE("comparisons cross-multiply") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 1) > Rational(13, 2));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(1000000007LL) > Rational(1000000006LL));
}

TEST_CASE("floor and half-up rounding") {
  CHECK(floor(Rational(7, 2)) == 3);
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(floor(Rational(5)) == 5);
  CHECK(floor(Rational(-1, 3)) == -1);

  CHECK(round_half_up(Rational(1, 2)) == 1);
  CHECK(round_half_up(Rational(-1, 2)) == 0);
  CHECK(round_half_up(Rational(3, 2)) == 2);
  CHECK(round_half_up(Rational(-3, 2)) == -1);
  CHECK(round_half_up(Rational(2, 3)) == 1);
  CHECK(round_half_up(Rational(-2, 3)) == -1);
  CHECK(round_half_up(Rational(7)) == 7);
  CHECK(round_half_up(Rational(-172, 165)) == -1);
  CHECK(round_half_up(Rational(5, 26)) == 0);
}

TEST_CASE("to_string") {
  CHECK(Rational(1, 2).to_string() == "1/2");
  CHECK(Rational(-1, 2).to_string() == "-1/2");
  CHECK(Rational(7).to_string() == "7");
  CHECK(Rational(0).to_string() == "0");
  CHECK(Rational(-300).to_string() == "-300");
  std::ostringstream os;
  os << Rational(4350, 143);
  CHECK(os.str() == "4350/143");
}

TEST_CASE("to_decimal rounds half up at the last place") {
  CHECK(Rational(1, 2).to_decimal(1) == "0.5");
  CHECK(Rational(5, 26).to_decimal(1) == "0.2");
  CHECK(Rational(-172, 165).to_decimal(1) == "-1.0");
  CHECK(Rational(-1, 40).to_decimal(1) == "0.0");
  CHECK(Rational(-1, 4).to_decimal(1) == "-0.2");
  CHECK(Rational(1, 4).to_decimal(1) == "0.3");
  CHECK(Rational(2, 3).to_decimal(6) == "0.666667");
  CHECK(Rational(1, 3).to_decimal(6) == "0.333333");
  CHECK(Rational(3, 2).to_decimal(0) == "2");
  CHECK(Rational(-3, 2).to_decimal(0) == "-1");
  CHECK(Rational(1234, 1).to_decimal(2) == "1234.00");
  CHECK(Rational(-665, 22).to_decimal(6) == "-30.227273");
  CHECK_THROWS_AS(Rational(1, 2).to_decimal(-1), std::invalid_argument);
}

TEST_CASE("parse round-trips to_string") {
  const Rational samples[] = {Rational(4350, 143), Rational(-665, 22),
                              Rational(0),         Rational(-300),
                              Rational(1009, 33),  Rational(-1739, 55)};
  for (const Rational& r : samples) CHECK(Rational::parse(r.to_string()) == r);
  CHECK(Rational::parse("2/4") == Rational(1, 2));
  CHECK(Rational::parse("-0") == Rational(0));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("--1"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1 / 2"), std::invalid_argument);
}

TEST_CASE("no overflow on large operands") {
  const Rational big(BigInt("123456789012345678901234567890"), BigInt(7));
  CHECK(big * Rational(7) == Rational(BigInt("123456789012345678901234567890")));
  CHECK((big - big) == Rational(0));
  Rational p(1);
  for (int i = 0; i < 64; ++i) p *= Rational(2);
  CHECK(p == Rational(BigInt("18446744073709551616")));
  CHECK(floor(p / Rational(3)) == BigInt("6148914691236517205"));
}

TEST_CASE("algebraic properties on random fractions") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long long> nums(-1000, 1000);
  std::uniform_int_distribution<long long> dens(1, 1000);
  for (int i = 0; i < 500; ++i) {
    const Rational a(nums(rng), dens(rng));
    const Rational b(nums(rng), dens(rng));
    const Rational c(nums(rng), dens(rng));
    REQUIRE(a + b == b + a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a - a == Rational(0));
    if (b != Rational(0)) REQUIRE((a / b) * b == a);
    REQUIRE(Rational::parse(a.to_string()) == a);
    const BigInt f = floor(a);
    REQUIRE(Rational(f) <= a);
    REQUIRE(a < Rational(f + 1));
  }
}

}  // TEST_SUITE

}  // namespace gregdow
