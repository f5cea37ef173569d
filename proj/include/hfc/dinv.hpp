#ifndef HFC_DINV_HPP
#define HFC_DINV_HPP

#include <vector>

#include "hfc/rational.hpp"

namespace hfc {

// Correction term d(S^3_{p/q}(U), t_i) of the lens space obtained by
// p/q-surgery on the unknot, by the standard recursion
//   d(p, q, i) = ((2i+1-p-q)^2 - pq) / (4pq) - d(q, p mod q, i mod q),
// with d(1, *, 0) = 0.  Labels follow the surgery-formula identification
// Spin^c(S^3_{p/q}) = Z_p; requires 0 <= i < p and gcd(p, q) = 1, p/q > 0.
Rational lens_d(int p, int q, int i);

// Conjugate Spin^c label: i -> (p + q - 1 - i) mod p.
int conjugate_label(int p, int q, int i);

// d(S^3_{p/q}(K), t_i) from the V-sequence of K:
//   lens_d(p,q,i) - 2 * max(V[i/q], V[(p+q-1-i)/q]).
Rational niwu_d(int p, int q, int i, const std::vector<int>& v);

// Label of the Spin structure: the mod-p reduction of the integer among
// (q-1)/2 and (p+q-1)/2.  Requires odd p.
int spin_label(int p, int q);

// Label of s_{m*mu}, the Spin structure shifted by m times the meridian
// class: adding one meridian step moves the label by q mod p.
int translate_s_to_t(int p, int q, int m);

}  // namespace hfc

#endif
