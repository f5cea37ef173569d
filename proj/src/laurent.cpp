#include "hfc/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hfc {

LaurentPoly::LaurentPoly(int min_exp, std::vector<Integer> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(int exp, Integer c) {
  if (c == 0) return zero();
  return LaurentPoly(exp, {std::move(c)});
}

void LaurentPoly::trim() {
  size_t lo = 0;
  while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
  size_t hi = coeffs_.size();
  while (hi > lo && coeffs_[hi - 1] == 0) --hi;
  if (lo == hi) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  if (lo > 0 || hi < coeffs_.size()) {
    coeffs_ = std::vector<Integer>(coeffs_.begin() + lo, coeffs_.begin() + hi);
    min_exp_ += static_cast<int>(lo);
  }
}

int LaurentPoly::degree_span() const {
  return is_zero() ? -1 : static_cast<int>(coeffs_.size()) - 1;
}

Integer LaurentPoly::coeff(int exp) const {
  if (is_zero() || exp < min_exp_ || exp > max_exp()) return 0;
  return coeffs_[exp - min_exp_];
}

std::vector<int> LaurentPoly::support() const {
  std::vector<int> out;
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.push_back(min_exp_ + static_cast<int>(i));
  return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lo = std::min(min_exp_, o.min_exp_);
  int hi = std::max(max_exp(), o.max_exp());
  std::vector<Integer> c(hi - lo + 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[min_exp_ - lo + i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[o.min_exp_ - lo + i] += o.coeffs_[i];
  return LaurentPoly(lo, std::move(c));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly neg = o;
  for (auto& c : neg.coeffs_) c = -c;
  return *this + neg;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<Integer> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return LaurentPoly(min_exp_ + o.min_exp_, std::move(c));
}

LaurentPoly LaurentPoly::substitute_power(int m) const {
  if (m < 1) throw std::invalid_argument("substitute_power: m must be >= 1");
  if (is_zero() || m == 1) return *this;
  std::vector<Integer> c((coeffs_.size() - 1) * m + 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i * m] = coeffs_[i];
  return LaurentPoly(min_exp_ * m, std::move(c));
}

LaurentPoly LaurentPoly::invert_variable() const {
  if (is_zero()) return zero();
  std::vector<Integer> c(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(-max_exp(), std::move(c));
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return zero();
  return LaurentPoly(0, coeffs_);
}

LaurentPoly LaurentPoly::symmetrized() const {
  if (is_zero()) return zero();
  int span = degree_span();
  if (span % 2 != 0)
    throw std::invalid_argument("symmetrized: odd degree span");
  return LaurentPoly(-span / 2, coeffs_);
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
  if (is_zero()) return zero();
  // Long division on the coefficient vectors, top down.
  std::vector<Integer> rem = coeffs_;
  const std::vector<Integer>& dc = d.coeffs_;
  if (rem.size() < dc.size())
    throw std::invalid_argument("divide_exact: not divisible");
  std::vector<Integer> q(rem.size() - dc.size() + 1, 0);
  const Integer& lead = dc.back();
  for (size_t k = q.size(); k-- > 0;) {
    Integer top = rem[k + dc.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) throw std::invalid_argument("divide_exact: not divisible");
    Integer f = top / lead;
    q[k] = f;
    for (size_t j = 0; j < dc.size(); ++j) rem[k + j] -= f * dc[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw std::invalid_argument("divide_exact: nonzero remainder");
  return LaurentPoly(min_exp_ - d.min_exp_, std::move(q));
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e : support()) {
    Integer c = coeff(e);
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Integer a = c < 0 ? Integer(-c) : c;
    if (a != 1 || e == 0) os << a.str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPoly torus_alexander(int p, int q) {
  if (p < 2 || q < 2) throw std::invalid_argument("torus_alexander: need p,q >= 2");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("torus_alexander: p,q not coprime");
  auto cyc = [](int n) {  // t^n - 1
    std::vector<Integer> c(n + 1, 0);
    c[0] = -1;
    c[n] = 1;
    return LaurentPoly(0, std::move(c));
  };
  LaurentPoly num = cyc(p * q) * cyc(1);
  LaurentPoly den = cyc(p) * cyc(q);
  return num.divide_exact(den).normalized();
}

LaurentPoly cable_alexander(const LaurentPoly& base, int p, int q) {
  return (base.substitute_power(p) * torus_alexander(p, q)).normalized();
}

LaurentPoly family_alexander(int n) {
  if (n < 1) throw std::invalid_argument("family_alexander: n >= 1");
  return cable_alexander(torus_alexander(2, 2 * n + 1), 2, 4 * n - 1);
}

}  // namespace hfc
