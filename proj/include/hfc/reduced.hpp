#ifndef HFC_REDUCED_HPP
#define HFC_REDUCED_HPP

#include <vector>

#include "hfc/staircase.hpp"

namespace hfc {

// The reduced complex of an L-space knot: a free rank-one F_2[U]-tower
// with generator a in grading 0 and an Alexander filtration A(U^i a).
// The filtration is stored explicitly up to the point where it becomes
// A(U^i a) = -i and is extended linearly past it.
class ReducedComplex {
 public:
  ReducedComplex(std::vector<int> prefix, int linear_from);

  // Alexander level of U^i a, i >= 0.
  int filt(int i) const;
  int genus() const { return filt(0); }
  int linear_from() const { return linear_from_; }

 private:
  std::vector<int> prefix_;  // filt(0..linear_from_)
  int linear_from_;
};

// Closed-form reduction of a staircase complex: filtration level
// a_1+...+a_{n-i} - j on the step [a_1+...+a_i, a_1+...+a_{i+1}),
// and -j from the genus onward.
ReducedComplex reduce_staircase(const StaircaseList& list);

// Piecewise filtration of the reduced complex of the representative
// staircase (1 x 2n, 2, 2, 3 x (2n-2)); earlier branches win where the
// ranges collide at n = 1.
int family_filtration_2jn(int n, int i);

// Filtration levels of the homology tower of the tensor with
// CFK^-(-T_{2,5}): entry i is the Alexander level of the generator of
// H_{-2i}, from the three-term max rule with A-offsets {+2, 0, -2}.
class MirrorTensorTower {
 public:
  explicit MirrorTensorTower(const ReducedComplex& r) : r_(r) {}
  int filt(int i) const;

 private:
  ReducedComplex r_;
};

int fast_vk(const ReducedComplex& r, int k);
int fast_vk(const MirrorTensorTower& t, int k);

}  // namespace hfc

#endif
