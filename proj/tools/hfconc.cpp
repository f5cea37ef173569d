#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "hfc/cfk.hpp"
#include "hfc/dinv.hpp"
#include "hfc/knotexpr.hpp"
#include "hfc/laurent.hpp"
#include "hfc/obstruction.hpp"
#include "hfc/reduced.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";

json make_record(const std::string& command, json inputs) {
  json rec;
  rec["version"] = kVersion;
  rec["command"] = command;
  rec["inputs"] = std::move(inputs);
  rec["results"] = json::object();
  rec["provenance"] = json::array();
  return rec;
}

void emit(const json& rec, const std::string& format) {
  if (format == "json") {
    std::cout << rec.dump(2) << "\n";
    return;
  }
  // plain table rendering of the results object
  std::cout << "# " << rec["command"].get<std::string>() << " (v" << kVersion
            << ")\n";
  for (const auto& [key, val] : rec["results"].items())
    std::cout << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump())
              << "\n";
  for (const auto& p : rec["provenance"])
    std::cout << "note: " << p.get<std::string>() << "\n";
}

// V-sequence of an expression along the fast (reduced) path
std::vector<int> fast_v_sequence(const hfc::KnotExpr& expr, int kmax) {
  hfc::StaircaseList rep = hfc::fold_representative(expr);
  std::vector<int> v;
  if (expr.mirror_t25_count == 0) {
    hfc::ReducedComplex r = hfc::reduce_staircase(rep);
    for (int k = 0; k <= kmax; ++k) v.push_back(hfc::fast_vk(r, k));
  } else if (expr.mirror_t25_count == 1) {
    hfc::MirrorTensorTower t(hfc::reduce_staircase(rep));
    for (int k = 0; k <= kmax; ++k) v.push_back(hfc::fast_vk(t, k));
  } else {
    throw std::invalid_argument("at most one -T(2,5) factor is supported");
  }
  return v;
}

std::vector<int> brute_v_sequence(const hfc::KnotExpr& expr, int kmax) {
  if (expr.summands.empty())
    throw std::invalid_argument("empty expression");
  if (expr.mirror_t25_count > 1)
    throw std::invalid_argument("at most one -T(2,5) factor is supported");
  hfc::FilteredComplex c = hfc::staircase_complex(expr.summands[0]);
  for (size_t i = 1; i < expr.summands.size(); ++i)
    c = hfc::tensor(c, hfc::staircase_complex(expr.summands[i]));
  if (expr.mirror_t25_count == 1)
    c = hfc::tensor(c, hfc::mirror(hfc::staircase_complex(hfc::StaircaseList({1, 1}))));
  return hfc::brute_force_vk_sequence(c, kmax);
}

int cmd_alexander(const std::string& descriptor, const std::string& format) {
  hfc::LaurentPoly f = hfc::parse_alexander_descriptor(descriptor);
  json rec = make_record("alexander", {{"descriptor", descriptor}});
  json coeffs = json::array();
  for (const auto& c : f.normalized().coeffs()) coeffs.push_back(c.str());
  rec["results"]["polynomial"] = f.normalized().str();
  rec["results"]["coefficients"] = coeffs;
  rec["results"]["min_exp"] = 0;
  if (hfc::is_lspace_alexander(f)) {
    auto list = hfc::staircase_from_alexander(f);
    rec["results"]["staircase"] = list.steps;
    rec["results"]["genus"] = list.genus();
  } else {
    rec["results"]["staircase"] = nullptr;
  }
  emit(rec, format);
  return 0;
}

int cmd_vk(const std::string& expr_text, int kmax, bool brute, bool check_oracle,
           const std::string& format) {
  hfc::KnotExpr expr = hfc::parse_knot_expr(expr_text);
  json rec = make_record("vk", {{"expr", expr_text}, {"k_max", kmax}});
  std::vector<int> v;
  if (brute) {
    v = brute_v_sequence(expr, kmax);
    rec["provenance"].push_back("brute-force tensor path");
  } else {
    v = fast_v_sequence(expr, kmax);
    rec["provenance"].push_back("reduced fast path");
  }
  if (check_oracle) {
    auto other = brute ? fast_v_sequence(expr, kmax) : brute_v_sequence(expr, kmax);
    if (other != v) throw std::logic_error("oracle mismatch between fast and brute paths");
    rec["provenance"].push_back("fast and brute-force paths agree");
  }
  rec["results"]["V"] = v;
  emit(rec, format);
  return 0;
}

int cmd_dinv(int p, int q, const std::string& expr_text, int label, bool all_labels,
             const std::string& format) {
  std::vector<int> v((p + q - 1) / q + 1, 0);
  json inputs = {{"p", p}, {"q", q}};
  json rec = make_record("dinv", inputs);
  if (!expr_text.empty()) {
    hfc::KnotExpr expr = hfc::parse_knot_expr(expr_text);
    v = fast_v_sequence(expr, (p + q - 1) / q);
    rec["inputs"]["knot"] = expr_text;
    rec["results"]["V"] = v;
  }
  int spin = (p % 2 == 1) ? hfc::spin_label(p, q) : -1;
  if (spin >= 0) rec["results"]["spin_label"] = spin;
  json table = json::object();
  if (all_labels) {
    for (int i = 0; i < p; ++i)
      table["t" + std::to_string(i)] = hfc::niwu_d(p, q, i, v).str();
  } else {
    if (label < 0) label = (spin >= 0) ? spin : 0;
    table["t" + std::to_string(label)] = hfc::niwu_d(p, q, label, v).str();
  }
  rec["results"]["d"] = table;
  emit(rec, format);
  return 0;
}

json report_to_json(const hfc::ObstructionReport& r) {
  json j;
  j["n"] = r.n;
  j["V0"] = r.v0;
  j["V1"] = r.v1;
  j["V"] = r.v_sequence;
  j["metabolizer_generator"] = r.metabolizer_generator;
  json dbar = json::object();
  for (const auto& [m, val] : r.dbar) dbar[std::to_string(m)] = val.str();
  j["dbar"] = dbar;
  j["d_spin"] = r.d_spin.str();
  j["obstructed"] = r.obstructed;
  j["provenance"] = r.provenance;
  return j;
}

int cmd_obstruct(const std::string& nspec, const std::string& format) {
  int lo, hi;
  if (auto dots = nspec.find(".."); dots != std::string::npos) {
    lo = std::stoi(nspec.substr(0, dots));
    hi = std::stoi(nspec.substr(dots + 2));
  } else {
    lo = hi = std::stoi(nspec);
  }
  if (lo < 1 || hi < lo) throw std::invalid_argument("obstruct: bad n range");

  std::vector<hfc::ObstructionReport> reports;
  for (int n = lo; n <= hi; ++n)
    reports.push_back(hfc::verdicts(hfc::build_family(n)));

  if (format == "csv") {
    std::cout << "n,V0,V1,dbar_0,dbar_3mu,dbar_6mu,d_spin,verdict\n";
    for (const auto& r : reports)
      std::cout << r.n << "," << r.v0 << "," << r.v1 << ","
                << r.dbar.at(0).str() << "," << r.dbar.at(3).str() << ","
                << r.dbar.at(6).str() << "," << r.d_spin.str() << ","
                << (r.obstructed ? "obstructed" : "unobstructed") << "\n";
    return 0;
  }
  json rec = make_record("obstruct", {{"n", nspec}});
  json results = json::array();
  for (const auto& r : reports) results.push_back(report_to_json(r));
  rec["results"] = json{{"reports", results}};
  for (const auto& p : reports.front().provenance) rec["provenance"].push_back(p);
  if (format == "json") {
    std::cout << rec.dump(2) << "\n";
    return 0;
  }
  for (const auto& r : reports) {
    std::cout << "n=" << r.n << "  V0=" << r.v0 << "  V1=" << r.v1
              << "  metabolizer=<" << r.metabolizer_generator << ">  dbar={";
    bool first = true;
    for (const auto& [m, val] : r.dbar) {
      std::cout << (first ? "" : ", ") << m << ": " << val.str();
      first = false;
    }
    std::cout << "}  d_spin=" << r.d_spin.str() << "  verdict="
              << (r.obstructed ? "obstructed" : "unobstructed") << "\n";
  }
  for (const auto& p : reports.front().provenance) std::cout << "note: " << p << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heegaard Floer concordance obstruction calculator"};
  app.require_subcommand(1);
  app.fallthrough(true);
  std::string format = "table";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  auto* alex = app.add_subcommand(
      "alexander", "Alexander polynomial of a knot descriptor: 'torus p q', "
                   "'cable p q (desc)', or 'Kn n'");
  std::vector<std::string> desc_words;
  alex->add_option("descriptor", desc_words, "knot descriptor")->required();

  auto* vk = app.add_subcommand(
      "vk", "V_k table of a connected-sum expression: atoms T(p,q), "
            "C(p,q; expr), Kn(n), -T(2,5); combine with '#' and 'k*'");
  std::string vk_expr;
  int kmax = 3;
  bool brute = false, check_oracle = false;
  vk->add_option("expr", vk_expr, "knot expression")->required();
  vk->add_option("--k-max", kmax, "largest k to tabulate");
  vk->add_flag("--brute", brute, "force the brute-force tensor path");
  vk->add_flag("--check-oracle", check_oracle, "run both paths and compare");

  auto* dinv = app.add_subcommand(
      "dinv", "d-invariants of p/q surgery (on the unknot, or on a knot expression)");
  int dp = 0, dq = 0, dlabel = -1;
  std::string dinv_expr;
  bool all_labels = false;
  dinv->add_option("p", dp, "surgery numerator")->required();
  dinv->add_option("q", dq, "surgery denominator")->required();
  dinv->add_option("knot", dinv_expr, "knot expression (default: unknot)");
  dinv->add_option("--label", dlabel, "single Spin^c label");
  dinv->add_flag("--all-labels", all_labels, "tabulate every label");

  auto* obstruct = app.add_subcommand(
      "obstruct", "Run the full obstruction pipeline for family members n (or a..b)");
  std::string nspec;
  obstruct->add_option("--n", nspec, "family index or range a..b")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (alex->parsed()) {
      std::string d;
      for (const auto& w : desc_words) d += (d.empty() ? "" : " ") + w;
      return cmd_alexander(d, format);
    }
    if (vk->parsed()) return cmd_vk(vk_expr, kmax, brute, check_oracle, format);
    if (dinv->parsed()) return cmd_dinv(dp, dq, dinv_expr, dlabel, all_labels, format);
    if (obstruct->parsed()) return cmd_obstruct(nspec, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
