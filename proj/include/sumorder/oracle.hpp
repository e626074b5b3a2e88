#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumorder/group.hpp"

namespace sumorder {

// One brute-force search instance: find an ordering of `required_length`
// distinct elements of `subset` (a set of nonzero elements of Z_n) whose
// partial sums satisfy the variant's distinctness condition.
struct SearchTask {
  uint32_t n = 0;
  std::vector<uint32_t> subset;
  Variant variant = Variant::Alspach;
  int required_length = -1;  // -1: the whole subset
};

enum class SearchStatus { Found, NotFound, Rejected };

struct SearchOutcome {
  SearchStatus status = SearchStatus::Rejected;
  Sequence seq;        // populated when Found
  std::string reason;  // populated when Rejected
};

// Depth-first backtracking, candidates in ascending residue order, so the
// first ordering found is deterministic. Guards: |subset| <= 18 and
// n <= 2^20. Variant preconditions (total sum nonzero for a full Alspach
// ordering; no {x, -x} pair for Costa) are reported as Rejected.
SearchOutcome find_ordering(const SearchTask& task);

struct VerifyReport {
  uint32_t n = 0;
  Variant variant = Variant::Alspach;
  uint64_t admissible = 0;
  uint64_t checked = 0;
  std::vector<std::vector<uint32_t>> counterexamples;  // sorted subsets
  double seconds = 0.0;
};

// Exhausts every admissible nonempty subset of Z_n \ {0} (n <= 16) and
// records the ones admitting no valid full ordering. Parallelized over
// subsets with OpenMP.
VerifyReport verify_conjecture(uint32_t n, Variant variant);

// One line per counterexample ("<n> <variant> <subset>"), then a summary
// line with counts and wall time.
std::string render_report(const VerifyReport& report);

// Smallest m such that every m-subset of Z_n \ {0} contains k distinct
// elements orderable with distinct partial sums s_1..s_k; -1 if no m up to
// n-1 works. Exhaustive over subsets, ascending in m.
int min_subset_order(uint32_t n, int k);

}  // namespace sumorder
