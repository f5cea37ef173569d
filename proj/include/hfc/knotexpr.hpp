#ifndef HFC_KNOTEXPR_HPP
#define HFC_KNOTEXPR_HPP

#include <string>
#include <vector>

#include "hfc/laurent.hpp"
#include "hfc/staircase.hpp"

namespace hfc {

// A parsed connected-sum expression: a multiset of L-space staircase
// summands plus the number of -T(2,5) mirror factors (the only mirror the
// fast path supports; at most one is accepted downstream).
struct KnotExpr {
  std::vector<StaircaseList> summands;
  int mirror_t25_count = 0;
};

// Grammar:
//   expr    := term ('#' term)*
//   term    := INT '*' atom | atom
//   atom    := 'T(' p ',' q ')' | 'C(' p ',' q ';' expr ')'
//            | 'Kn(' n ')' | '-T(2,5)'
// Whitespace is insignificant.  Throws std::invalid_argument with the
// offending position on parse errors.
KnotExpr parse_knot_expr(const std::string& text);

// Descriptor grammar of the alexander command:
//   desc := 'torus' p q | 'cable' p q '(' desc ')' | 'Kn' n
LaurentPoly parse_alexander_descriptor(const std::string& text);

// Folds the summands into one representative staircase.
// Throws std::domain_error if some intermediate pair is incompatible.
StaircaseList fold_representative(const KnotExpr& e);

}  // namespace hfc

#endif
