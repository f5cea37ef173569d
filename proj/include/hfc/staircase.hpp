#ifndef HFC_STAIRCASE_HPP
#define HFC_STAIRCASE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hfc/laurent.hpp"

namespace hfc {

// The list (a_1,...,a_n) of horizontal/vertical step lengths of the
// staircase complex of an L-space knot.  All entries positive.
struct StaircaseList {
  std::vector<int> steps;

  explicit StaircaseList(std::vector<int> s);
  int size() const { return static_cast<int>(steps.size()); }
  int genus() const;
  bool operator==(const StaircaseList&) const = default;
  std::string str() const;
};

// Ordered list of pairs ((a_1,a_n),(a_2,a_{n-1}),...,(a_n,a_1)).
struct StaircaseShape {
  std::vector<std::pair<int, int>> pairs;
  bool operator==(const StaircaseShape&) const = default;
};

enum class RiffleSide { Left, Right };

// An interleaving of two shapes preserving both internal orders.
struct Riffle {
  struct Entry {
    RiffleSide side;
    std::pair<int, int> pair;
  };
  std::vector<Entry> merged;
};

// Reads the step list off the alternating-coefficient Alexander polynomial
// of an L-space knot (gaps between the 1st/2nd, 3rd/4th, ... exponents).
// Throws if the polynomial is not of L-space-knot form.
StaircaseList staircase_from_alexander(const LaurentPoly& f);

// Whether the polynomial passes the L-space-knot shape checks
// (coefficients +-1, alternating, constant term +1, symmetric).
bool is_lspace_alexander(const LaurentPoly& f);

// Inverse of staircase_from_alexander: the symmetric alternating polynomial
// with gap sequence a_1, a_n, a_2, a_{n-1}, ...
LaurentPoly alexander_from_staircase(const StaircaseList& list);

StaircaseShape shape(const StaircaseList& list);

// Searches for a riffle satisfying the opposite-successor inequalities.
// Deterministic: among compatible riffles returns the lexicographically
// smallest tag sequence with Left < Right.
std::optional<Riffle> find_compatible_riffle(const StaircaseShape& left,
                                             const StaircaseShape& right);

// Staircase list of the summand representing the connected sum of two
// compatible staircases (first coordinates of the merged riffle).
// Throws std::domain_error when the shapes admit no compatible riffle.
StaircaseList representative_staircase(const StaircaseList& left,
                                       const StaircaseList& right);

}  // namespace hfc

#endif
