#include "hfc/obstruction.hpp"

#include <stdexcept>

#include "hfc/cfk.hpp"
#include "hfc/dinv.hpp"
#include "hfc/laurent.hpp"

namespace hfc {

namespace {

StaircaseList family_list_closed_form(int n) {
  // (1 x 2n, 2, 2, 3 x (2n-2))
  std::vector<int> steps;
  steps.insert(steps.end(), 2 * n, 1);
  steps.push_back(2);
  steps.push_back(2);
  steps.insert(steps.end(), 2 * n - 2, 3);
  return StaircaseList(steps);
}

std::vector<int> family_v_sequence(const FamilyInstance& inst, int kmax) {
  MirrorTensorTower tower(reduce_staircase(inst.rep_staircase));
  std::vector<int> v;
  for (int k = 0; k <= kmax; ++k) v.push_back(fast_vk(tower, k));
  for (size_t k = 1; k < v.size(); ++k)
    if (v[k] > v[0])
      throw std::logic_error("V-sequence not dominated by V_0");
  return v;
}

}  // namespace

FamilyInstance build_family(int n) {
  if (n < 1) throw std::invalid_argument("build_family: n >= 1");
  StaircaseList kn = staircase_from_alexander(family_alexander(n));
  StaircaseList rep = representative_staircase(kn, kn);
  if (!(rep == family_list_closed_form(n)))
    throw std::logic_error("build_family: riffled representative disagrees with closed form");
  FamilyInstance inst{
      n,
      kn,
      rep,
      StaircaseList({1, 1}),
      9,
      4,
      CyclicLinkingForm(9, Rational(-4, 9)),
      {}};
  inst.provenance = {
      "J_n ~ K_n # -T(2,3)  [nu+ via nD ~ T(2,2n+1), cabling stability, sum additivity]",
      "2J_n ~ 2K_n # -T(2,5)  [nu+ sum additivity, 2(-T(2,3)) ~ -T(2,5)]",
      "2K_n -> representative staircase " + rep.str() + "  [compatible riffle]",
      "Z_n = S^3_{9/4}(J_n # J_n^r), J_n # J_n^r computed as 2J_n  [CFK(K^r) = CFK(K)]"};
  return inst;
}

std::pair<int, int> compute_v01(const FamilyInstance& inst) {
  auto v = family_v_sequence(inst, 1);
  if (inst.n <= 2) {
    FilteredComplex full = tensor(
        tensor(staircase_complex(inst.knot_staircase),
               staircase_complex(inst.knot_staircase)),
        mirror(staircase_complex(inst.mirror_factor)));
    auto brute = brute_force_vk_sequence(full, 1);
    if (brute[0] != v[0] || brute[1] != v[1])
      throw std::logic_error("compute_v01: fast/brute-force V_k mismatch");
  }
  return {v[0], v[1]};
}

std::map<int, Rational> dbar_over_metabolizer(const FamilyInstance& inst) {
  const int p = inst.surgery_p, q = inst.surgery_q;
  // labels at (9,4) need V up to floor((p+q-1)/q) = 3
  auto v = family_v_sequence(inst, (p + q - 1) / q);
  auto mets = metabolizers(inst.linking);
  if (mets.size() != 1)
    throw std::logic_error("dbar_over_metabolizer: expected a unique metabolizer");
  int gen = mets[0];
  Rational d0 = niwu_d(p, q, spin_label(p, q), v);
  std::map<int, Rational> out;
  for (int m = 0; m < p; m += gen == 0 ? p : gen) {
    int label = translate_s_to_t(p, q, m);
    out[m] = niwu_d(p, q, label, v) - d0;
    if (gen == 0) break;
  }
  return out;
}

ObstructionReport verdicts(const FamilyInstance& inst) {
  ObstructionReport rep;
  rep.n = inst.n;
  auto [v0, v1] = compute_v01(inst);
  rep.v0 = v0;
  rep.v1 = v1;
  rep.v_sequence = family_v_sequence(inst, (inst.surgery_p + inst.surgery_q - 1) / inst.surgery_q);
  auto mets = metabolizers(inst.linking);
  rep.metabolizer_generator = mets.at(0);
  rep.dbar = dbar_over_metabolizer(inst);
  rep.d_spin = niwu_d(inst.surgery_p, inst.surgery_q,
                      spin_label(inst.surgery_p, inst.surgery_q), rep.v_sequence);
  rep.obstructed = false;
  for (const auto& [m, val] : rep.dbar)
    if (val != Rational(0)) rep.obstructed = true;
  rep.provenance = inst.provenance;
  return rep;
}

}  // namespace hfc
