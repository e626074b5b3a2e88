#include "sumorder/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sumorder {

namespace {

// Backtracking core: takes the sorted candidate elements, marks partial
// sums in a per-call scratch vector, returns the first completion.
struct Search {
  uint32_t n;
  int need;
  const std::vector<uint32_t>& elems;
  std::vector<char> sum_used;
  uint32_t elem_used = 0;  // bitmask over elems indices
  std::vector<uint32_t> picked;

  Search(uint32_t n, int need, const std::vector<uint32_t>& elems)
      : n(n), need(need), elems(elems), sum_used(n, 0) {
    picked.reserve(need);
  }

  bool run(uint32_t sum) {
    if (static_cast<int>(picked.size()) == need) return true;
    for (size_t i = 0; i < elems.size(); ++i) {
      if (elem_used & (1u << i)) continue;
      uint32_t s = sum + elems[i];
      if (s >= n) s -= n;
      if (sum_used[s]) continue;
      elem_used |= 1u << i;
      sum_used[s] = 1;
      picked.push_back(elems[i]);
      if (run(s)) return true;
      picked.pop_back();
      sum_used[s] = 0;
      elem_used &= ~(1u << i);
    }
    return false;
  }
};

}  // namespace

SearchOutcome find_ordering(const SearchTask& task) {
  SearchOutcome out;
  if (task.n < 2) {
    out.reason = "modulus must be at least 2";
    return out;
  }
  if (task.n > (1u << 20)) {
    out.reason = "modulus too large for the brute-force oracle";
    return out;
  }
  std::vector<uint32_t> elems;
  elems.reserve(task.subset.size());
  for (uint32_t e : task.subset) elems.push_back(e % task.n);
  std::sort(elems.begin(), elems.end());
  if (!elems.empty() && elems.front() == 0) {
    out.reason = "subset entries must be nonzero";
    return out;
  }
  if (std::adjacent_find(elems.begin(), elems.end()) != elems.end()) {
    out.reason = "subset entries must be pairwise distinct";
    return out;
  }
  if (elems.size() > 18) {
    out.reason = "subset too large for the brute-force oracle (max 18)";
    return out;
  }
  int need = task.required_length < 0 ? static_cast<int>(elems.size())
                                      : task.required_length;
  if (need < 1 || need > static_cast<int>(elems.size())) {
    out.reason = "required length must be in [1, |subset|]";
    return out;
  }
  if (task.variant == Variant::Alspach &&
      need == static_cast<int>(elems.size())) {
    uint64_t total = std::accumulate(elems.begin(), elems.end(), uint64_t{0});
    if (total % task.n == 0) {
      out.reason = "total sum is zero, which the hypothesis forbids";
      return out;
    }
  }
  if (task.variant == Variant::Costa) {
    for (uint32_t e : elems)
      if (std::binary_search(elems.begin(), elems.end(), (task.n - e) % task.n)) {
        out.reason = "set contains both x and -x";
        return out;
      }
  }

  Search search(task.n, need, elems);
  if (task.variant == Variant::Alspach) search.sum_used[0] = 1;
  if (!search.run(0)) {
    out.status = SearchStatus::NotFound;
    return out;
  }
  out.status = SearchStatus::Found;
  out.seq = Sequence{task.n, std::move(search.picked)};
  return out;
}

VerifyReport verify_conjecture(uint32_t n, Variant variant) {
  if (n < 2 || n > 16)
    throw std::invalid_argument("verify_conjecture requires 2 <= n <= 16");
  VerifyReport report;
  report.n = n;
  report.variant = variant;
  const uint32_t masks = 1u << (n - 1);  // subsets of {1..n-1}
  uint64_t admissible = 0, checked = 0;
  double t0 = omp_get_wtime();

#pragma omp parallel for schedule(dynamic, 64) \
    reduction(+ : admissible, checked)
  for (uint32_t mask = 1; mask < masks; ++mask) {
    std::vector<uint32_t> subset;
    uint64_t total = 0;
    for (uint32_t b = 0; b < n - 1; ++b)
      if (mask & (1u << b)) {
        subset.push_back(b + 1);
        total += b + 1;
      }
    if (variant == Variant::Alspach && total % n == 0) continue;
    if (variant == Variant::Costa) {
      bool pair = false;
      for (uint32_t e : subset)
        if (std::binary_search(subset.begin(), subset.end(), n - e)) {
          pair = true;
          break;
        }
      if (pair) continue;
    }
    ++admissible;
    SearchTask task{n, subset, variant, -1};
    SearchOutcome outcome = find_ordering(task);
    ++checked;
    if (outcome.status != SearchStatus::Found) {
#pragma omp critical
      report.counterexamples.push_back(subset);
    }
  }
  report.admissible = admissible;
  report.checked = checked;
  std::sort(report.counterexamples.begin(), report.counterexamples.end());
  report.seconds = omp_get_wtime() - t0;
  return report;
}

std::string render_report(const VerifyReport& report) {
  std::ostringstream os;
  for (const auto& subset : report.counterexamples) {
    os << report.n << ' ' << variant_name(report.variant) << ' ';
    for (size_t i = 0; i < subset.size(); ++i)
      os << (i ? "," : "") << subset[i];
    os << '\n';
  }
  os << "summary n=" << report.n
     << " variant=" << variant_name(report.variant)
     << " admissible=" << report.admissible << " checked=" << report.checked
     << " counterexamples=" << report.counterexamples.size()
     << " seconds=" << report.seconds << '\n';
  return os.str();
}

int min_subset_order(uint32_t n, int k) {
  if (n < 3 || n > 16)
    throw std::invalid_argument("min_subset_order requires 3 <= n <= 16");
  if (k < 2 || k > static_cast<int>(n) - 1)
    throw std::invalid_argument("k must be in [2, n-1]");
  const int domain = static_cast<int>(n) - 1;  // elements 1..n-1
  for (int m = k; m <= domain; ++m) {
    bool all_pass = true;
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      std::vector<uint32_t> subset(m);
      for (int i = 0; i < m; ++i) subset[i] = idx[i] + 1;
      SearchTask task{n, subset, Variant::Archdeacon, k};
      if (find_ordering(task).status != SearchStatus::Found) {
        all_pass = false;
        break;
      }
      // next combination
      int i = m - 1;
      while (i >= 0 && idx[i] == domain - m + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int t = i + 1; t < m; ++t) idx[t] = idx[t - 1] + 1;
    }
    if (all_pass) return m;
  }
  return -1;
}

}  // namespace sumorder
