#include "hfc/dinv.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace hfc {

namespace {

Rational lens_d_rec(int p, int q, int i) {
  if (p == 1) return 0;
  int64_t s = 2 * i + 1 - p - q;
  Rational term(s * s - int64_t(p) * q, 4 * int64_t(p) * q);
  return term - lens_d_rec(q, p % q, i % q);
}

}  // namespace

Rational lens_d(int p, int q, int i) {
  if (p < 1 || q < 1) throw std::invalid_argument("lens_d: need positive p/q");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("lens_d: p,q not coprime");
  if (i < 0 || i >= p) throw std::invalid_argument("lens_d: label out of range");

  static std::map<std::tuple<int, int, int>, Rational> memo;
  static std::mutex memo_mutex;
  std::lock_guard<std::mutex> lock(memo_mutex);
  auto key = std::make_tuple(p, q, i);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Rational r = lens_d_rec(p, q, i);
  memo.emplace(key, r);
  return r;
}

int conjugate_label(int p, int q, int i) {
  int c = (p + q - 1 - i) % p;
  return c < 0 ? c + p : c;
}

Rational niwu_d(int p, int q, int i, const std::vector<int>& v) {
  if (i < 0 || i >= p) throw std::invalid_argument("niwu_d: label out of range");
  size_t a = i / q;
  size_t b = (p + q - 1 - i) / q;
  if (a >= v.size() || b >= v.size())
    throw std::invalid_argument("niwu_d: V-sequence too short");
  int vmax = std::max(v[a], v[b]);
  return lens_d(p, q, i) - Rational(2 * int64_t(vmax));
}

int spin_label(int p, int q) {
  if (p < 1 || p % 2 == 0) throw std::invalid_argument("spin_label: p must be odd");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("spin_label: p,q not coprime");
  int twice = (q % 2 == 1) ? q - 1 : p + q - 1;  // the even numerator
  return (twice / 2) % p;
}

int translate_s_to_t(int p, int q, int m) {
  int base = spin_label(p, q);
  int64_t label = (base + int64_t(m) * q) % p;
  if (label < 0) label += p;
  return static_cast<int>(label);
}

}  // namespace hfc
