#include <doctest.h>

#include "hfc/linking.hpp"

using namespace hfc;

TEST_CASE("pairing values on Z_9 with self-pairing -4/9") {
  CyclicLinkingForm form(9, Rational(-4, 9));
  CHECK(form.self_pairing() == Rational(5, 9));
  CHECK(form.pair(1, 1) == Rational(5, 9));
  CHECK(form.pair(1, 2) == Rational(1, 9));
  CHECK(form.pair(3, 3) == Rational(0));
  CHECK(form.pair(0, 5) == Rational(0));
  CHECK(form.pair(-1, 1) == Rational(4, 9));
}

TEST_CASE("pairing is bilinear and symmetric") {
  CyclicLinkingForm form(25, Rational(7, 25));
  for (int a = 0; a < 25; ++a)
    for (int b = 0; b < 25; ++b) {
      CHECK(form.pair(a, b) == form.pair(b, a));
      CHECK(form.pair(a + b, 3) == (form.pair(a, 3) + form.pair(b, 3)).mod_one());
    }
}

TEST_CASE("singular pairings are rejected") {
  CHECK_THROWS_AS(CyclicLinkingForm(9, Rational(1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(CyclicLinkingForm(9, Rational(2)), std::invalid_argument);
  CHECK_THROWS_AS(CyclicLinkingForm(0, Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("metabolizers of the Z_9 form") {
  CHECK(metabolizers(CyclicLinkingForm(9, Rational(-4, 9))) == std::vector<int>{3});
  CHECK(metabolizers(CyclicLinkingForm(9, Rational(1, 9))) == std::vector<int>{3});
}

TEST_CASE("metabolizers of small orders") {
  // trivial group: the zero subgroup works
  CHECK(metabolizers(CyclicLinkingForm(1, Rational(0))) == std::vector<int>{0});
  CHECK(metabolizers(CyclicLinkingForm(4, Rational(1, 4))) == std::vector<int>{2});
  // non-square order admits no metabolizer
  CHECK(metabolizers(CyclicLinkingForm(2, Rational(1, 2))).empty());
  CHECK(metabolizers(CyclicLinkingForm(6, Rational(1, 6))).empty());
  CHECK(metabolizers(CyclicLinkingForm(12, Rational(5, 12))).empty());
}

TEST_CASE("metabolizer subgroups square to the order") {
  for (auto [p, num] : {std::pair{9, 2}, {16, 3}, {25, 4}, {49, 5}}) {
    for (int d : metabolizers(CyclicLinkingForm(p, Rational(num, p)))) {
      int size = d == 0 ? 1 : p / d;
      CHECK(size * size == p);
    }
  }
}
