#include "hfc/cfk.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hfc {

namespace {

// --- dense F_2 rows --------------------------------------------------------

using Row = std::vector<uint64_t>;

Row make_row(int ncols) { return Row((ncols + 63) / 64, 0); }

void row_set(Row& r, int j) { r[j / 64] ^= (uint64_t(1) << (j % 64)); }

bool row_zero(const Row& r) {
  for (uint64_t w : r)
    if (w) return false;
  return true;
}

int row_pivot(const Row& r) {  // lowest set bit, -1 if zero
  for (size_t w = 0; w < r.size(); ++w)
    if (r[w]) return static_cast<int>(w * 64 + std::countr_zero(r[w]));
  return -1;
}

void row_xor(Row& a, const Row& b) {
  for (size_t w = 0; w < b.size(); ++w) a[w] ^= b[w];
}

// Row space in echelon form; supports incremental insert and membership.
struct F2Span {
  std::vector<Row> rows;
  std::vector<int> pivots;

  // Reduces r in place against the span; returns the residue's pivot (-1 if
  // r lies in the span).
  int reduce(Row& r) const {
    for (size_t i = 0; i < rows.size(); ++i) {
      int p = pivots[i];
      if (r[p / 64] & (uint64_t(1) << (p % 64))) row_xor(r, rows[i]);
    }
    return row_pivot(r);
  }

  bool insert(Row r) {
    int p = reduce(r);
    if (p < 0) return false;
    rows.push_back(std::move(r));
    pivots.push_back(p);
    return true;
  }

  int rank() const { return static_cast<int>(rows.size()); }
};

}  // namespace

// --- FilteredComplex -------------------------------------------------------

FilteredComplex::FilteredComplex(std::vector<Generator> gens,
                                 std::vector<std::vector<Arrow>> diff)
    : gens_(std::move(gens)), diff_(std::move(diff)) {
  if (diff_.size() != gens_.size())
    throw std::invalid_argument("FilteredComplex: differential size mismatch");
  validate();
}

void FilteredComplex::validate() const {
  int n = rank();
  for (int g = 0; g < n; ++g) {
    for (const Arrow& a : diff_[g]) {
      if (a.target < 0 || a.target >= n)
        throw std::invalid_argument("FilteredComplex: arrow target out of range");
      if (a.u_power < 0)
        throw std::invalid_argument("FilteredComplex: arrow goes right");
      const Generator& s = gens_[g];
      const Generator& t = gens_[a.target];
      if (t.maslov - 2 * a.u_power != s.maslov - 1)
        throw std::invalid_argument("FilteredComplex: differential must drop M by 1");
      if (t.alexander - a.u_power > s.alexander)
        throw std::invalid_argument("FilteredComplex: arrow goes up");
    }
  }
  // d^2 = 0 over F_2: count parity of each (target, total u-power)
  for (int g = 0; g < n; ++g) {
    std::map<std::pair<int, int>, int> count;
    for (const Arrow& a : diff_[g])
      for (const Arrow& b : diff_[a.target])
        count[{b.target, a.u_power + b.u_power}]++;
    for (const auto& [key, c] : count)
      if (c % 2 != 0) throw std::invalid_argument("FilteredComplex: d^2 != 0");
  }
}

int FilteredComplex::max_alexander() const {
  int m = 0;
  for (const auto& g : gens_) m = std::max(m, g.alexander);
  return m;
}

int FilteredComplex::min_alexander() const {
  int m = 0;
  for (const auto& g : gens_) m = std::min(m, g.alexander);
  return m;
}

int FilteredComplex::max_u_power() const {
  int m = 0;
  for (const auto& arrows : diff_)
    for (const auto& a : arrows) m = std::max(m, a.u_power);
  return m;
}

std::string FilteredComplex::dump() const {
  std::ostringstream os;
  for (const auto& g : gens_)
    os << g.name << " " << g.maslov << " " << g.alexander << " 0\n";
  for (size_t g = 0; g < diff_.size(); ++g)
    for (const Arrow& a : diff_[g])
      os << gens_[g].name << " -> " << gens_[a.target].name << " * U^"
         << a.u_power << "\n";
  return os.str();
}

// --- model complexes -------------------------------------------------------

FilteredComplex staircase_complex(const StaircaseList& list) {
  int n = list.size();
  std::vector<int> partial(n + 1, 0);  // partial[i] = a_1 + ... + a_i
  for (int i = 0; i < n; ++i) partial[i + 1] = partial[i] + list.steps[i];

  std::vector<FilteredComplex::Generator> gens(2 * n + 1);
  std::vector<std::vector<FilteredComplex::Arrow>> diff(2 * n + 1);
  for (int i = 0; i <= n; ++i) {
    // x_{2i+1}, translated to algebraic level 0
    gens[2 * i] = {"x" + std::to_string(2 * i + 1), -2 * partial[i],
                   partial[n - i] - partial[i]};
  }
  for (int i = 1; i <= n; ++i) {
    gens[2 * i - 1] = {"x" + std::to_string(2 * i), -2 * partial[i] + 1,
                       partial[n - i + 1] - partial[i]};
    diff[2 * i - 1] = {{2 * i - 2, list.steps[i - 1]}, {2 * i, 0}};
  }
  return FilteredComplex(std::move(gens), std::move(diff));
}

FilteredComplex trivial_complex() {
  return FilteredComplex({{"e", 0, 0}}, {{}});
}

FilteredComplex mirror(const FilteredComplex& c) {
  int n = c.rank();
  std::vector<FilteredComplex::Generator> gens(n);
  std::vector<std::vector<FilteredComplex::Arrow>> diff(n);
  for (int g = 0; g < n; ++g) {
    const auto& src = c.generators()[g];
    gens[g] = {src.name + "*", -src.maslov, -src.alexander};
  }
  for (int g = 0; g < n; ++g)
    for (const auto& a : c.differential()[g])
      diff[a.target].push_back({g, a.u_power});
  return FilteredComplex(std::move(gens), std::move(diff));
}

FilteredComplex tensor(const FilteredComplex& a, const FilteredComplex& b) {
  int na = a.rank(), nb = b.rank();
  std::vector<FilteredComplex::Generator> gens;
  std::vector<std::vector<FilteredComplex::Arrow>> diff;
  gens.reserve(na * nb);
  diff.resize(na * nb);
  auto id = [nb](int i, int j) { return i * nb + j; };
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      const auto& gi = a.generators()[i];
      const auto& gj = b.generators()[j];
      gens.push_back({gi.name + "|" + gj.name, gi.maslov + gj.maslov,
                      gi.alexander + gj.alexander});
    }
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      auto& arrows = diff[id(i, j)];
      for (const auto& ar : a.differential()[i])
        arrows.push_back({id(ar.target, j), ar.u_power});
      for (const auto& ar : b.differential()[j])
        arrows.push_back({id(i, ar.target), ar.u_power});
    }
  return FilteredComplex(std::move(gens), std::move(diff));
}

// --- truncated linear algebra ----------------------------------------------

namespace {

// The half-plane C{i<=0} of a complex, truncated to U-powers 0..window,
// organized by Maslov grading.
struct Truncation {
  const FilteredComplex& c;
  int window;
  // grading -> basis elements (gen, m)
  std::map<int, std::vector<std::pair<int, int>>> basis;
  // (gen, m) -> column index within its grading
  std::map<std::pair<int, int>, int> col;
  // cached image spans of the boundary map into each grading
  std::map<int, F2Span> image_cache;

  Truncation(const FilteredComplex& cc, int w) : c(cc), window(w) {
    for (int g = 0; g < c.rank(); ++g) {
      int M = c.generators()[g].maslov;
      for (int m = 0; m <= window; ++m) basis[M - 2 * m].push_back({g, m});
    }
    for (auto& [d, elems] : basis)
      for (size_t j = 0; j < elems.size(); ++j)
        col[elems[j]] = static_cast<int>(j);
  }

  int dim(int d) const {
    auto it = basis.find(d);
    return it == basis.end() ? 0 : static_cast<int>(it->second.size());
  }

  // boundary of U^m g as a vector over the grading-(d-1) basis;
  // arrows leaving the window are dropped (only safe in the certified range)
  Row boundary(int g, int m, int dim_below) const {
    Row r = make_row(std::max(dim_below, 1));
    for (const auto& a : c.differential()[g]) {
      int mm = m + a.u_power;
      if (mm > window) continue;
      row_set(r, col.at({a.target, mm}));
    }
    return r;
  }

  const F2Span& image_into(int d) {
    auto it = image_cache.find(d);
    if (it != image_cache.end()) return it->second;
    F2Span span;
    int nb = dim(d);
    if (auto above = basis.find(d + 1); above != basis.end() && nb > 0)
      for (const auto& [g, m] : above->second) span.insert(boundary(g, m, nb));
    return image_cache.emplace(d, std::move(span)).first->second;
  }

  // rank of the boundary map leaving grading d
  int rank_out(int d) { return image_into(d - 1).rank(); }
};

bool in_region(const FilteredComplex& c, SubquotientSpec spec, int g, int m) {
  if (m < 0) return false;
  if (spec.has_alexander_cap &&
      c.generators()[g].alexander - m > spec.alexander_cap)
    return false;
  return true;
}

}  // namespace

std::map<int, int> homology_f2(const FilteredComplex& c, SubquotientSpec spec,
                               int window) {
  if (window < 0) throw std::invalid_argument("homology_f2: negative window");
  std::map<int, std::vector<std::pair<int, int>>> basis;
  std::map<std::pair<int, int>, int> col;
  for (int g = 0; g < c.rank(); ++g) {
    int M = c.generators()[g].maslov;
    int A = c.generators()[g].alexander;
    int m0 = spec.has_alexander_cap ? std::max(0, A - spec.alexander_cap) : 0;
    for (int m = m0; m <= window; ++m) basis[M - 2 * m].push_back({g, m});
  }
  for (auto& [d, elems] : basis)
    for (size_t j = 0; j < elems.size(); ++j) col[elems[j]] = static_cast<int>(j);

  auto boundary = [&](int g, int m, int dim_below) {
    Row r = make_row(std::max(dim_below, 1));
    for (const auto& a : c.differential()[g]) {
      int mm = m + a.u_power;
      if (mm > window) continue;
      if (!in_region(c, spec, a.target, mm)) continue;  // cannot happen for subcomplexes
      row_set(r, col.at({a.target, mm}));
    }
    return r;
  };

  std::map<int, int> rank_from;  // rank of boundary leaving grading d
  for (const auto& [d, elems] : basis) {
    int nb = basis.count(d - 1) ? static_cast<int>(basis[d - 1].size()) : 0;
    F2Span span;
    for (const auto& [g, m] : elems) span.insert(boundary(g, m, nb));
    rank_from[d] = nb == 0 ? 0 : span.rank();
  }
  std::map<int, int> dims;
  for (const auto& [d, elems] : basis) {
    int z = static_cast<int>(elems.size()) - rank_from[d];
    int b = basis.count(d + 1) ? rank_from[d + 1] : 0;
    dims[d] = z - b;
  }
  return dims;
}

std::vector<int> brute_force_vk_sequence(const FilteredComplex& c, int kmax) {
  if (kmax < 0) throw std::invalid_argument("brute_force_vk: negative k");
  if (c.rank() == 0) throw std::domain_error("not a knot-like complex (empty)");
  int gmax = std::max(c.max_alexander(), -c.min_alexander());
  int window = 2 * gmax + kmax + 4;
  Truncation tr(c, window);

  int max_maslov = 0;
  for (const auto& g : c.generators()) max_maslov = std::max(max_maslov, g.maslov);
  // gradings at or above this are unaffected by dropping out-of-window arrows
  int cert_floor = max_maslov + 2 * c.max_u_power() - 2 * window + 2;

  // tower hypothesis: H(C{i<=0}) one-dimensional in each even grading <= 0,
  // zero elsewhere, throughout the certified range
  int top = 0;
  for (const auto& g : c.generators()) top = std::max(top, g.maslov);
  for (int d = top; d >= cert_floor; --d) {
    int dim = tr.dim(d) - tr.rank_out(d) -
              (tr.dim(d + 1) > 0 ? tr.image_into(d).rank() : 0);
    int expect = (d <= 0 && d % 2 == 0) ? 1 : 0;
    if (dim != expect) throw std::domain_error("not a knot-like complex");
  }

  std::vector<int> out;
  for (int k = 0; k <= kmax; ++k) {
    int vk = -1;
    for (int d = 0; d >= cert_floor; d -= 2) {
      int nd = tr.dim(d);
      if (nd == 0) continue;
      const auto& elems = tr.basis.at(d);
      int nbelow = tr.dim(d - 1);
      // cycles of the subcomplex C{i<=0, j<=k} in grading d, via elimination
      // with identity augmentation over the subcomplex columns
      std::vector<int> sub_cols;
      for (size_t j = 0; j < elems.size(); ++j) {
        auto [g, m] = elems[j];
        if (m >= c.generators()[g].alexander - k) sub_cols.push_back((int)j);
      }
      F2Span echelon;
      std::vector<Row> kernel_in_cd;
      std::vector<Row> combo;  // tracks combinations alongside echelon rows
      for (int j : sub_cols) {
        auto [g, m] = elems[j];
        Row b = tr.boundary(g, m, nbelow);
        Row who = make_row(nd);
        row_set(who, j);
        // manual reduction so the combination row tracks the eliminations
        for (size_t i = 0; i < echelon.rows.size(); ++i) {
          int p = echelon.pivots[i];
          if (b[p / 64] & (uint64_t(1) << (p % 64))) {
            row_xor(b, echelon.rows[i]);
            row_xor(who, combo[i]);
          }
        }
        int p = row_pivot(b);
        if (p < 0) {
          kernel_in_cd.push_back(std::move(who));
        } else {
          echelon.rows.push_back(std::move(b));
          echelon.pivots.push_back(p);
          combo.push_back(std::move(who));
        }
      }
      if (kernel_in_cd.empty()) continue;
      const F2Span& boundaries = tr.image_into(d);
      bool hit = false;
      for (Row& z : kernel_in_cd) {
        if (boundaries.reduce(z) >= 0) {
          hit = true;
          break;
        }
      }
      if (hit) {
        vk = -d / 2;
        break;
      }
    }
    if (vk < 0) throw std::runtime_error("truncation insufficient");
    out.push_back(vk);
  }
  return out;
}

int brute_force_vk(const FilteredComplex& c, int k) {
  return brute_force_vk_sequence(c, k).back();
}

}  // namespace hfc
