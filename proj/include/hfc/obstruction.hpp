#ifndef HFC_OBSTRUCTION_HPP
#define HFC_OBSTRUCTION_HPP

#include <map>
#include <string>
#include <vector>

#include "hfc/linking.hpp"
#include "hfc/rational.hpp"
#include "hfc/reduced.hpp"
#include "hfc/staircase.hpp"

namespace hfc {

// One member of the L_n family, with everything needed to run the
// obstruction: the staircase representative of 2J_n, the mirror factor,
// the 9/4 surgery description of the branched cover Z_n, and its linking
// form.
struct FamilyInstance {
  int n;
  StaircaseList knot_staircase;  // K_n = T_{2,2n+1;2,4n-1}
  StaircaseList rep_staircase;   // representative of K_n # K_n
  StaircaseList mirror_factor;   // (1,1), taken mirrored (-T_{2,5})
  int surgery_p = 9;
  int surgery_q = 4;
  CyclicLinkingForm linking;
  // the chain of substitutions that reduces 2J_n to the staircase side
  std::vector<std::string> provenance;
};

struct ObstructionReport {
  int n;
  int v0;
  int v1;
  std::vector<int> v_sequence;  // V_0..V_3 of 2J_n
  int metabolizer_generator;
  std::map<int, Rational> dbar;  // metabolizer element -> dbar(Z_n, s_m)
  Rational d_spin;               // d(Z_n, s_0) in the pipeline's convention
  bool obstructed;               // some dbar value nonzero
  std::vector<std::string> provenance;
};

// Builds the instance, deriving the representative staircase both from the
// closed-form list and from the Alexander-polynomial pipeline, and checking
// they agree.
FamilyInstance build_family(int n);

// V_0 and V_1 of 2J_n via the reduced tensor tower; for n <= 2 also runs
// the brute-force tensor oracle and insists on agreement.
std::pair<int, int> compute_v01(const FamilyInstance& inst);

// dbar(Z_n, s_m) = d(Z_n, s_m) - d(Z_n, s_0) for each m in the metabolizer.
std::map<int, Rational> dbar_over_metabolizer(const FamilyInstance& inst);

ObstructionReport verdicts(const FamilyInstance& inst);

}  // namespace hfc

#endif
