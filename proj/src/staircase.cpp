#include "hfc/staircase.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hfc {

StaircaseList::StaircaseList(std::vector<int> s) : steps(std::move(s)) {
  if (steps.empty()) throw std::invalid_argument("StaircaseList: empty list");
  for (int a : steps)
    if (a < 1) throw std::invalid_argument("StaircaseList: entries must be positive");
}

int StaircaseList::genus() const {
  return std::accumulate(steps.begin(), steps.end(), 0);
}

std::string StaircaseList::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < steps.size(); ++i) os << (i ? "," : "") << steps[i];
  os << ")";
  return os.str();
}

bool is_lspace_alexander(const LaurentPoly& f) {
  if (f.is_zero()) return false;
  LaurentPoly g = f.normalized();
  auto supp = g.support();
  if (supp.size() % 2 == 0) return false;
  int deg = g.max_exp();
  for (size_t j = 0; j < supp.size(); ++j) {
    Integer c = g.coeff(supp[j]);
    int expect = (j % 2 == 0) ? 1 : -1;
    if (c != expect) return false;
    // symmetry: the support must be palindromic in [0, deg]
    if (g.coeff(deg - supp[j]) != g.coeff(supp[j])) return false;
  }
  return true;
}

StaircaseList staircase_from_alexander(const LaurentPoly& f) {
  if (!is_lspace_alexander(f))
    throw std::invalid_argument("staircase_from_alexander: not an L-space knot polynomial");
  auto supp = f.normalized().support();
  std::vector<int> steps;
  for (size_t i = 0; 2 * i + 1 < supp.size(); ++i)
    steps.push_back(supp[2 * i + 1] - supp[2 * i]);
  StaircaseList list(steps);
  if (2 * list.genus() != f.degree_span())
    throw std::invalid_argument("staircase_from_alexander: degree/genus mismatch");
  return list;
}

LaurentPoly alexander_from_staircase(const StaircaseList& list) {
  int n = list.size();
  std::vector<int> gaps;
  for (int i = 0; i < n; ++i) {
    gaps.push_back(list.steps[i]);
    gaps.push_back(list.steps[n - 1 - i]);
  }
  std::vector<Integer> coeffs(2 * list.genus() + 1, 0);
  int exp = 0, sign = 1;
  coeffs[0] = 1;
  for (int g : gaps) {
    exp += g;
    sign = -sign;
    coeffs[exp] = sign;
  }
  return LaurentPoly(0, std::move(coeffs));
}

StaircaseShape shape(const StaircaseList& list) {
  StaircaseShape s;
  int n = list.size();
  s.pairs.reserve(n);
  for (int i = 0; i < n; ++i)
    s.pairs.emplace_back(list.steps[i], list.steps[n - 1 - i]);
  return s;
}

namespace {

// Backtracking merge.  Two constraints make the merged staircase an honest
// filtered direct summand of the tensor product:
//  - cross-pair dominance: every already-placed entry f from the opposite
//    list must satisfy f.first <= e.first and f.second >= e.second when e is
//    placed (the opposite-successor inequality, propagated to every pair --
//    the adjacent case alone admits merges whose change of basis is not
//    filtered);
//  - the merged sequence must itself be a staircase shape: the second
//    coordinates read backwards equal the first coordinates (position t is
//    the transpose of position N-1-t).
// Trying Left before Right at every step makes the first complete merge the
// lexicographically smallest tag sequence.  Both constraints prune hard, so
// plain DFS suffices.
struct RiffleSearch {
  const std::vector<std::pair<int, int>>& left;
  const std::vector<std::pair<int, int>>& right;
  std::vector<Riffle::Entry> merged;

  static bool prefix_allows(const std::vector<std::pair<int, int>>& opposite,
                            size_t placed, std::pair<int, int> e) {
    for (size_t t = 0; t < placed; ++t) {
      if (opposite[t].first > e.first) return false;
      if (opposite[t].second < e.second) return false;
    }
    return true;
  }

  bool transpose_allows(std::pair<int, int> e) const {
    size_t n = left.size() + right.size();
    size_t t = merged.size();
    size_t partner = n - 1 - t;
    if (partner == t) return e.first == e.second;
    if (partner > t) return true;  // deferred until the partner is placed
    return merged[partner].pair.second == e.first &&
           merged[partner].pair.first == e.second;
  }

  bool search(size_t li, size_t ri) {
    if (li == left.size() && ri == right.size()) return true;
    // take from the left first
    if (li < left.size() && prefix_allows(right, ri, left[li]) &&
        transpose_allows(left[li])) {
      merged.push_back({RiffleSide::Left, left[li]});
      if (search(li + 1, ri)) return true;
      merged.pop_back();
    }
    if (ri < right.size() && prefix_allows(left, li, right[ri]) &&
        transpose_allows(right[ri])) {
      merged.push_back({RiffleSide::Right, right[ri]});
      if (search(li, ri + 1)) return true;
      merged.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<Riffle> find_compatible_riffle(const StaircaseShape& left,
                                             const StaircaseShape& right) {
  RiffleSearch s{left.pairs, right.pairs, {}};
  if (!s.search(0, 0)) return std::nullopt;
  return Riffle{std::move(s.merged)};
}

StaircaseList representative_staircase(const StaircaseList& left,
                                       const StaircaseList& right) {
  auto riffle = find_compatible_riffle(shape(left), shape(right));
  if (!riffle)
    throw std::domain_error("representative_staircase: incompatible shapes " +
                            left.str() + " and " + right.str());
  std::vector<int> steps;
  steps.reserve(riffle->merged.size());
  for (const auto& e : riffle->merged) steps.push_back(e.pair.first);
  return StaircaseList(steps);
}

}  // namespace hfc
