// Acceptance gate: one pass/fail line per criterion; exit nonzero on any failure.
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hfc/cfk.hpp"
#include "hfc/dinv.hpp"
#include "hfc/knotexpr.hpp"
#include "hfc/laurent.hpp"
#include "hfc/linking.hpp"
#include "hfc/obstruction.hpp"
#include "hfc/reduced.hpp"
#include "hfc/staircase.hpp"

using namespace hfc;

namespace {

bool g_any_failed = false;

void report(int id, const std::string& title, bool ok, const std::string& detail = "") {
  std::printf("criterion %d: %-4s %s%s%s\n", id, ok ? "PASS" : "FAIL", title.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) g_any_failed = true;
}

StaircaseList knot_list(int n) {
  std::vector<int> s(n, 1);
  s.push_back(2);
  s.insert(s.end(), n - 1, 3);
  return StaircaseList(s);
}

StaircaseList rep_list(int n) {
  std::vector<int> s(2 * n, 1);
  s.push_back(2);
  s.push_back(2);
  s.insert(s.end(), 2 * n - 2, 3);
  return StaircaseList(s);
}

// enumerate every staircase list with the given genus (compositions)
void each_list(int genus, const std::function<void(const StaircaseList&)>& fn) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      fn(StaircaseList(cur));
      return;
    }
    for (int a = 1; a <= left; ++a) {
      cur.push_back(a);
      rec(left - a);
      cur.pop_back();
    }
  };
  rec(genus);
}

StaircaseList random_list(std::mt19937& rng, int max_genus) {
  std::uniform_int_distribution<int> step(1, 4);
  std::vector<int> steps;
  int g = 0;
  while (g < max_genus) {
    int a = std::min(step(rng), max_genus - g);
    steps.push_back(a);
    g += a;
  }
  return StaircaseList(steps);
}

void criterion1() {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 6 && ok; ++n) {
    auto [v0, v1] = compute_v01(build_family(n));
    if (v0 != 2 * n || v1 != 2 * n - 1) {
      ok = false;
      detail = "n=" + std::to_string(n) + " gave V0=" + std::to_string(v0) +
               " V1=" + std::to_string(v1);
    }
  }
  report(1, "V_0(2J_n) = 2n and V_1(2J_n) = 2n-1 for n=1..6", ok, detail);
}

void criterion2() {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 2 && ok; ++n) {
    FamilyInstance inst = build_family(n);
    MirrorTensorTower tower(reduce_staircase(inst.rep_staircase));
    FilteredComplex full =
        tensor(tensor(staircase_complex(inst.knot_staircase),
                      staircase_complex(inst.knot_staircase)),
               mirror(staircase_complex(inst.mirror_factor)));
    auto brute = brute_force_vk_sequence(full, 3);
    for (int k = 0; k <= 3; ++k)
      if (fast_vk(tower, k) != brute[k]) {
        ok = false;
        detail = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      }
  }
  report(2, "brute-force V_k equals reduced-path V_k for n=1,2, k=0..3", ok, detail);
}

void criterion3() {
  bool ok = true;
  std::string detail;
  // the 13-term polynomial of K_3
  {
    std::vector<std::pair<int, int>> terms = {
        {0, 1},  {1, -1},  {4, 1},  {5, -1},  {8, 1},  {9, -1}, {11, 1},
        {13, -1}, {14, 1}, {17, -1}, {18, 1}, {21, -1}, {22, 1}};
    LaurentPoly expect = LaurentPoly::zero();
    for (auto [e, c] : terms) expect = expect + LaurentPoly::monomial(e, c);
    if (!(family_alexander(3) == expect)) {
      ok = false;
      detail = "K_3 polynomial mismatch";
    }
  }
  for (int n = 1; n <= 6 && ok; ++n) {
    if (!(staircase_from_alexander(family_alexander(n)) == knot_list(n))) {
      ok = false;
      detail = "K_" + std::to_string(n) + " staircase mismatch";
    } else if (!(representative_staircase(knot_list(n), knot_list(n)) == rep_list(n))) {
      ok = false;
      detail = "2K_" + std::to_string(n) + " representative mismatch";
    }
  }
  report(3, "K_3 polynomial, K_n staircases and 2K_n representatives (n=1..6)", ok,
         detail);
}

void criterion4() {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 6 && ok; ++n) {
    ReducedComplex r = reduce_staircase(rep_list(n));
    for (int i = 0; i <= 8 * n + 4; ++i)
      if (family_filtration_2jn(n, i) != r.filt(i)) {
        ok = false;
        detail = "n=" + std::to_string(n) + " i=" + std::to_string(i);
      }
  }
  report(4, "piecewise family filtration equals the staircase reduction", ok, detail);
}

void criterion5() {
  bool ok = lens_d(9, 4, 0) == Rational(0) && lens_d(9, 4, 6) == Rational(0) &&
            spin_label(9, 4) == 6 && translate_s_to_t(9, 4, 3) == 0;
  report(5, "lens-space anchors d(9/4; t_0) = d(9/4; t_6) = 0, spin label 6,"
            " 3mu translate 0", ok);
}

void criterion6() {
  bool ok = true;
  std::string detail;
  auto mets = metabolizers(CyclicLinkingForm(9, Rational(-4, 9)));
  if (mets != std::vector<int>{3}) {
    ok = false;
    detail = "metabolizer not uniquely <3>";
  }
  for (int n = 1; n <= 6 && ok; ++n) {
    auto dbar = dbar_over_metabolizer(build_family(n));
    if (dbar.size() != 3 || dbar.at(0) != Rational(0) || dbar.at(3) != Rational(-2) ||
        dbar.at(6) != Rational(-2)) {
      ok = false;
      detail = "n=" + std::to_string(n);
    }
  }
  report(6, "dbar = {0, -2, -2} on the unique metabolizer <3> for n=1..6", ok, detail);
}

void criterion7() {
  bool ok = true;
  std::string detail;
  std::vector<Rational> spins;
  for (int n = 1; n <= 6; ++n) spins.push_back(verdicts(build_family(n)).d_spin);
  for (size_t a = 0; a < spins.size() && ok; ++a)
    for (size_t b = a + 1; b < spins.size() && ok; ++b) {
      Rational diff = spins[b] - spins[a];
      if (diff < Rational(0)) diff = -diff;
      if (diff != Rational(4 * int64_t(b - a))) {
        ok = false;
        detail = "n=" + std::to_string(a + 1) + " m=" + std::to_string(b + 1);
      }
    }
  report(7, "|d_spin(Z_n) - d_spin(Z_m)| = 4|n-m| for 1 <= n < m <= 6", ok, detail);
}

void criterion8() {
  bool ok = true;
  std::string detail;
  std::mt19937 rng(20250824);

  // V_k - 1 <= V_{k+1} <= V_k on 200 random staircases
  for (int trial = 0; trial < 200 && ok; ++trial) {
    StaircaseList l = random_list(rng, 8);
    ReducedComplex r = reduce_staircase(l);
    int kmax = l.genus() + 1;
    for (int k = 0; k < kmax; ++k) {
      int vk = fast_vk(r, k), vk1 = fast_vk(r, k + 1);
      if (!(vk - 1 <= vk1 && vk1 <= vk)) {
        ok = false;
        detail = "monotonicity on " + l.str();
      }
    }
  }
  // V_{k+j}(K#J) <= V_k(K) + V_j(J) on 200 random compatible pairs
  int pairs_checked = 0;
  while (pairs_checked < 200 && ok) {
    StaircaseList a = random_list(rng, 4), b = random_list(rng, 4);
    if (!find_compatible_riffle(shape(a), shape(b))) continue;
    ++pairs_checked;
    ReducedComplex ra = reduce_staircase(a), rb = reduce_staircase(b);
    ReducedComplex rs = reduce_staircase(representative_staircase(a, b));
    for (int k = 0; k <= a.genus() && ok; ++k)
      for (int j = 0; j <= b.genus() && ok; ++j)
        if (fast_vk(rs, k + j) > fast_vk(ra, k) + fast_vk(rb, j)) {
          ok = false;
          detail = "additivity on " + a.str() + " # " + b.str();
        }
  }
  // representative staircase carries the V-sequence of the tensor product:
  // every compatible pair with total genus <= 8
  if (ok) {
    std::vector<StaircaseList> all;
    for (int g = 1; g <= 7; ++g)
      each_list(g, [&](const StaircaseList& l) { all.push_back(l); });
    for (size_t i = 0; i < all.size() && ok; ++i)
      for (size_t j = i; j < all.size() && ok; ++j) {
        const StaircaseList &a = all[i], &b = all[j];
        if (a.genus() + b.genus() > 8) continue;
        if (!find_compatible_riffle(shape(a), shape(b))) continue;
        ReducedComplex rs = reduce_staircase(representative_staircase(a, b));
        FilteredComplex full = tensor(staircase_complex(a), staircase_complex(b));
        int kmax = a.genus() + b.genus();
        auto brute = brute_force_vk_sequence(full, kmax);
        for (int k = 0; k <= kmax; ++k)
          if (fast_vk(rs, k) != brute[k]) {
            ok = false;
            detail = "oracle equivalence on " + a.str() + " # " + b.str();
          }
      }
  }
  // |M|^2 = p on every tested form
  if (ok) {
    for (auto [p, num] : {std::pair{9, -4}, {1, 0}, {4, 1}, {16, 3}, {25, 4}, {49, 5}}) {
      for (int d : metabolizers(CyclicLinkingForm(p, Rational(num, p)))) {
        int size = d == 0 ? 1 : p / d;
        if (size * size != p) {
          ok = false;
          detail = "|M|^2 != p at p=" + std::to_string(p);
        }
      }
    }
  }
  report(8, "V_k monotonicity, subadditivity, summand oracle equivalence,"
            " |M|^2 = p", ok, detail);
}

void criterion9() {
  bool ok = true;
  std::string detail;
  StaircaseList rep =
      representative_staircase(StaircaseList({1}), StaircaseList({1, 2}));
  if (!(rep == StaircaseList({1, 1, 2}))) {
    ok = false;
    detail = "representative is " + rep.str();
  } else {
    ReducedComplex r = reduce_staircase(rep);
    FilteredComplex full = tensor(staircase_complex(StaircaseList({1})),
                                  staircase_complex(StaircaseList({1, 2})));
    auto brute = brute_force_vk_sequence(full, 4);
    for (int k = 0; k <= 4; ++k)
      if (fast_vk(r, k) != brute[k]) {
        ok = false;
        detail = "V_" + std::to_string(k) + " mismatch";
      }
  }
  report(9, "T(2,3) # T(3,4) representative (1,1,2) with matching V-sequence", ok,
         detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  return g_any_failed ? 1 : 0;
}
