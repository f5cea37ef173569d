#ifndef HFC_LAURENT_HPP
#define HFC_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace hfc {

using Integer = boost::multiprecision::cpp_int;

// Integer Laurent polynomial in one variable t.  Stored as the lowest
// exponent together with a dense coefficient vector; the zero polynomial
// has an empty vector, otherwise the first and last entries are nonzero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int min_exp, std::vector<Integer> coeffs);

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(0); }
  static LaurentPoly monomial(int exp, Integer c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int min_exp() const { return min_exp_; }
  int max_exp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  int degree_span() const;  // max_exp - min_exp, -1 for zero
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(int exp) const;

  // Exponents carrying a nonzero coefficient, ascending.
  std::vector<int> support() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const = default;

  // f(t) -> f(t^m), m >= 1
  LaurentPoly substitute_power(int m) const;

  // f(t) -> f(1/t)
  LaurentPoly invert_variable() const;

  // Shift exponents so min_exp becomes 0.
  LaurentPoly normalized() const;

  // Centered view: shift so the polynomial is symmetric around exponent 0.
  // Requires an even degree span.
  LaurentPoly symmetrized() const;

  // Exact division; throws if the remainder is nonzero.
  LaurentPoly divide_exact(const LaurentPoly& d) const;

  std::string str() const;

 private:
  void trim();
  int min_exp_ = 0;
  std::vector<Integer> coeffs_;
};

// Alexander polynomial of the (p,q) torus knot, normalized with lowest
// exponent 0 and constant term +1.  Requires p,q >= 2 coprime.
LaurentPoly torus_alexander(int p, int q);

// Alexander polynomial of the (p,q) cable of a knot with Alexander
// polynomial `base`:  base(t^p) * torus_alexander(p,q).
LaurentPoly cable_alexander(const LaurentPoly& base, int p, int q);

// Alexander polynomial of K_n = T_{2,2n+1;2,4n-1}, n >= 1.
LaurentPoly family_alexander(int n);

}  // namespace hfc

#endif
