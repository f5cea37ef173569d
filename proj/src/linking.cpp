#include "hfc/linking.hpp"

#include <set>
#include <stdexcept>

namespace hfc {

CyclicLinkingForm::CyclicLinkingForm(int order, Rational self_pairing)
    : order_(order), self_(self_pairing.mod_one()) {
  if (order_ < 1) throw std::invalid_argument("CyclicLinkingForm: order must be positive");
  // non-singularity: x -> lambda(x, .) injective <=> denominator equals p
  if (order_ > 1 && self_.den() != order_)
    throw std::invalid_argument("CyclicLinkingForm: singular pairing");
}

Rational CyclicLinkingForm::pair(int64_t a, int64_t b) const {
  return (Rational(a * b) * self_).mod_one();
}

std::vector<int> metabolizers(const CyclicLinkingForm& form) {
  int p = form.order();
  auto subgroup = [&](int d) {
    std::set<int> s;
    for (int x = 0; x < p; x += d) s.insert(x);
    return s;
  };
  auto perp = [&](const std::set<int>& m) {
    std::set<int> s;
    for (int x = 0; x < p; ++x) {
      bool ok = true;
      for (int y : m)
        if (form.pair(x, y) != Rational(0)) {
          ok = false;
          break;
        }
      if (ok) s.insert(x);
    }
    return s;
  };
  std::vector<int> out;
  for (int d = 1; d <= p; ++d) {
    if (p % d != 0) continue;
    auto m = subgroup(d);
    if (perp(m) == m) out.push_back(d % p);
  }
  return out;
}

}  // namespace hfc
