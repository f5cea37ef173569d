#include <doctest.h>

#include <random>

#include "hfc/laurent.hpp"

using namespace hfc;

namespace {

LaurentPoly from_coeffs(std::vector<int> c, int min_exp = 0) {
  std::vector<Integer> v(c.begin(), c.end());
  return LaurentPoly(min_exp, std::move(v));
}

// closed form p_n(t) + t^{4n-1} + t^{8n-2} p_n(1/t) for the family
// polynomials, with p_n(t) = sum_{i<n} (t^{4i} - t^{4i+1})
LaurentPoly family_closed_form(int n) {
  LaurentPoly p = LaurentPoly::zero();
  for (int i = 0; i < n; ++i)
    p = p + LaurentPoly::monomial(4 * i) - LaurentPoly::monomial(4 * i + 1);
  return p + LaurentPoly::monomial(4 * n - 1) +
         LaurentPoly::monomial(8 * n - 2) * p.invert_variable();
}

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(1, 6), coeff(-4, 4), shift(-3, 3);
  std::vector<Integer> c;
  int n = len(rng);
  for (int i = 0; i < n; ++i) c.push_back(coeff(rng));
  return LaurentPoly(shift(rng), std::move(c));
}

}  // namespace

TEST_CASE("torus knot Alexander polynomials") {
  CHECK(torus_alexander(2, 3) == from_coeffs({1, -1, 1}));
  CHECK(torus_alexander(2, 5) == from_coeffs({1, -1, 1, -1, 1}));
  CHECK(torus_alexander(3, 2) == torus_alexander(2, 3));
  // the (2, 2n+1) closed form sum (-1)^i t^i
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> c;
    for (int i = 0; i <= 2 * n; ++i) c.push_back(i % 2 == 0 ? 1 : -1);
    CHECK(torus_alexander(2, 2 * n + 1) == from_coeffs(c));
  }
  CHECK(torus_alexander(4, 5).coeff(0) == 1);
  CHECK(torus_alexander(4, 5).degree_span() == 12);
  CHECK_THROWS_AS(torus_alexander(4, 6), std::invalid_argument);
  CHECK_THROWS_AS(torus_alexander(1, 5), std::invalid_argument);
}

TEST_CASE("torus polynomials are palindromic") {
  for (auto [p, q] : {std::pair{2, 3}, {2, 7}, {3, 4}, {3, 5}, {4, 5}, {5, 6}}) {
    LaurentPoly f = torus_alexander(p, q);
    int deg = f.degree_span();
    for (int k = 0; k <= deg; ++k) CHECK(f.coeff(k) == f.coeff(deg - k));
  }
}

TEST_CASE("substitute_power") {
  LaurentPoly f = from_coeffs({1, -1, 1});
  CHECK(f.substitute_power(2) == from_coeffs({1, 0, -1, 0, 1}));
  CHECK(f.substitute_power(1) == f);
  CHECK_THROWS_AS(f.substitute_power(0), std::invalid_argument);
}

TEST_CASE("cable Alexander polynomials") {
  // (2,3)-cable of the trefoil
  CHECK(cable_alexander(torus_alexander(2, 3), 2, 3) ==
        from_coeffs({1, -1, 0, 1, 0, -1, 1}));
  // unknot companion reduces to the torus knot
  CHECK(cable_alexander(LaurentPoly::one(), 2, 3) == torus_alexander(2, 3));
  // the n=2 family member against hand expansion of the closed form
  CHECK(torus_alexander(2, 5).substitute_power(2) * torus_alexander(2, 7) ==
        family_closed_form(2));
}

TEST_CASE("family polynomial matches the closed form for n=1..6") {
  for (int n = 1; n <= 6; ++n)
    CHECK(family_alexander(n) == family_closed_form(n));
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    if (!f.is_zero() && !g.is_zero())
      CHECK((f * g).degree_span() == f.degree_span() + g.degree_span());
  }
}

TEST_CASE("exact division") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly f = random_poly(rng), g = random_poly(rng);
    if (f.is_zero() || g.is_zero()) continue;
    CHECK((f * g).divide_exact(g) == f);
  }
  CHECK_THROWS_AS(from_coeffs({1, 1, 1}).divide_exact(from_coeffs({1, 1})),
                  std::invalid_argument);
}

TEST_CASE("normalized and symmetrized views") {
  LaurentPoly f = torus_alexander(2, 3);
  CHECK(f.min_exp() == 0);
  LaurentPoly s = f.symmetrized();
  CHECK(s.min_exp() == -1);
  CHECK(s.coeff(-1) == 1);
  CHECK(s.coeff(0) == -1);
  CHECK(s.coeff(1) == 1);
  CHECK(s == s.invert_variable());
}
