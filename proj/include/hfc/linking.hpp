#ifndef HFC_LINKING_HPP
#define HFC_LINKING_HPP

#include <vector>

#include "hfc/rational.hpp"

namespace hfc {

// Non-singular Q/Z-valued linking form on a cyclic group Z_p with chosen
// generator mu; determined by the self-pairing lambda(mu, mu).
class CyclicLinkingForm {
 public:
  CyclicLinkingForm(int order, Rational self_pairing);

  int order() const { return order_; }
  Rational self_pairing() const { return self_; }

  // lambda(a*mu, b*mu) reduced into [0, 1)
  Rational pair(int64_t a, int64_t b) const;

 private:
  int order_;
  Rational self_;  // stored mod 1
};

// All metabolizers M = M^perp of the form, each reported by a generator
// (a divisor d of p generating the subgroup <d*mu>).  Empty unless p is a
// perfect square.
std::vector<int> metabolizers(const CyclicLinkingForm& form);

}  // namespace hfc

#endif
