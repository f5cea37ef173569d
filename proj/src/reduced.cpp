#include "hfc/reduced.hpp"

#include <stdexcept>

namespace hfc {

ReducedComplex::ReducedComplex(std::vector<int> prefix, int linear_from)
    : prefix_(std::move(prefix)), linear_from_(linear_from) {
  if (linear_from_ < 0 || prefix_.size() != static_cast<size_t>(linear_from_) + 1)
    throw std::invalid_argument("ReducedComplex: prefix/linear_from mismatch");
  if (prefix_[linear_from_] != -linear_from_)
    throw std::invalid_argument("ReducedComplex: tail must continue as -i");
}

int ReducedComplex::filt(int i) const {
  if (i < 0) throw std::invalid_argument("ReducedComplex::filt: i < 0");
  if (i >= linear_from_) return prefix_[linear_from_] - (i - linear_from_);
  return prefix_[i];
}

ReducedComplex reduce_staircase(const StaircaseList& list) {
  int n = list.size();
  std::vector<int> partial(n + 1, 0);
  for (int i = 0; i < n; ++i) partial[i + 1] = partial[i] + list.steps[i];
  int g = partial[n];
  std::vector<int> prefix(g + 1);
  for (int i = 0; i < n; ++i)
    for (int j = partial[i]; j < partial[i + 1]; ++j)
      prefix[j] = partial[n - i] - j;
  prefix[g] = -g;
  return ReducedComplex(std::move(prefix), g);
}

int family_filtration_2jn(int n, int i) {
  if (n < 1 || i < 0) throw std::invalid_argument("family_filtration_2jn: bad args");
  if (i <= 2 * n - 2) return 8 * n - 2 - 4 * i;
  if (i == 2 * n - 1) return 3;
  if (i == 2 * n) return 0;
  if (i == 2 * n + 1) return -1;
  if (i == 2 * n + 2) return -3;
  if (i == 2 * n + 3) return -4;
  if (i <= 8 * n - 2) {
    int num = i - 2 * n - 4;  // nonnegative here
    return 2 * n - i - 2 - num / 3;
  }
  return -i;
}

int MirrorTensorTower::filt(int i) const {
  if (i < 0) throw std::invalid_argument("MirrorTensorTower::filt: i < 0");
  // terms with a negative U-power would reference nonexistent elements and
  // are omitted; for i >= 0 all three indices are valid
  int best = -2 + r_.filt(i);
  best = std::max(best, r_.filt(i + 1));
  best = std::max(best, 2 + r_.filt(i + 2));
  return best;
}

namespace {
template <typename Tower>
int scan_vk(const Tower& t, int k) {
  if (k < 0) throw std::invalid_argument("fast_vk: k < 0");
  for (int i = 0;; ++i)
    if (t.filt(i) <= k) return i;
}
}  // namespace

int fast_vk(const ReducedComplex& r, int k) { return scan_vk(r, k); }
int fast_vk(const MirrorTensorTower& t, int k) { return scan_vk(t, k); }

}  // namespace hfc
