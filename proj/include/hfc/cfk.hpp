#ifndef HFC_CFK_HPP
#define HFC_CFK_HPP

#include <map>
#include <string>
#include <vector>

#include "hfc/staircase.hpp"

namespace hfc {

// A finitely generated bigraded-filtered complex over F_2[U,U^{-1}].
// Each generator stands for its U^0 homogeneous element at algebraic
// level 0; U^m translates are implicit with M(U^m g) = M(g) - 2m and
// Alexander level A(g) - m.  An arrow (target, u_power) in diff[g]
// contributes U^{u_power} * target to the differential of g.
class FilteredComplex {
 public:
  struct Generator {
    std::string name;
    int maslov;
    int alexander;
  };
  struct Arrow {
    int target;
    int u_power;
  };

  FilteredComplex(std::vector<Generator> gens,
                  std::vector<std::vector<Arrow>> diff);

  int rank() const { return static_cast<int>(gens_.size()); }
  const std::vector<Generator>& generators() const { return gens_; }
  const std::vector<std::vector<Arrow>>& differential() const { return diff_; }
  int max_alexander() const;
  int min_alexander() const;
  int max_u_power() const;  // largest u_power on any arrow

  // Debug dump: one generator per line `name M A 0`, then arrows
  // `src -> dst * U^p`.
  std::string dump() const;

 private:
  void validate() const;
  std::vector<Generator> gens_;
  std::vector<std::vector<Arrow>> diff_;
};

// The region {i <= 0} or {i <= 0, j <= k} of the (i,j)-plane.
struct SubquotientSpec {
  bool has_alexander_cap = false;
  int alexander_cap = 0;

  static SubquotientSpec half_plane() { return {false, 0}; }
  static SubquotientSpec third_quadrant(int k) { return {true, k}; }
};

// Model complexes -----------------------------------------------------------

// The staircase complex S_{(a_1,...,a_n)}: 2n+1 generators, the odd ones
// cycles, with d(x_{2i}) = U^{a_i} x_{2i-1} + x_{2i+1} after translating
// every generator to algebraic level 0.
FilteredComplex staircase_complex(const StaircaseList& list);

// One generator at (M,A) = (0,0), zero differential.  Tensor unit.
FilteredComplex trivial_complex();

// The dual complex: M -> -M, A -> -A, arrows reversed.
FilteredComplex mirror(const FilteredComplex& c);

FilteredComplex tensor(const FilteredComplex& a, const FilteredComplex& b);

// Homology ------------------------------------------------------------------

// Per-Maslov-grading F_2 dimensions of the selected subcomplex, computed on
// the U-power window [0, window].
std::map<int, int> homology_f2(const FilteredComplex& c, SubquotientSpec spec,
                               int window);

// V_k by direct F_2 Gaussian elimination on a self-certifying truncation:
// the largest grading of a cycle in C{i<=0, j<=k} that survives to a nonzero
// class of H(C{i<=0}), negated and halved.  Throws std::domain_error if the
// tower hypothesis fails and std::runtime_error if the truncation window
// cannot certify the answer.
int brute_force_vk(const FilteredComplex& c, int k);

// V_0..V_kmax in one pass (shares the boundary-rank computations).
std::vector<int> brute_force_vk_sequence(const FilteredComplex& c, int kmax);

}  // namespace hfc

#endif
