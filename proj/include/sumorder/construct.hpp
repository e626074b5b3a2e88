#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumorder/group.hpp"

namespace sumorder {

// True iff `entries` is a permutation of {1..r} whose successive absolute
// differences are pairwise distinct (hence exactly {1..r-1}).
bool is_graceful(const std::vector<int>& entries);

class GracefulPermutation {
 public:
  explicit GracefulPermutation(std::vector<int> entries);  // validates

  const std::vector<int>& entries() const { return entries_; }
  int length() const { return static_cast<int>(entries_.size()); }
  int first_difference() const;  // |a_2 - a_1|, length >= 2
  std::vector<int> differences() const;

  GracefulPermutation complement() const;  // a_i -> r+1-a_i, flips diff signs
  GracefulPermutation reversed() const;

  bool operator==(const GracefulPermutation& o) const = default;

 private:
  std::vector<int> entries_;
};

// (1, r, 2, r-1, 3, ...): alternating low/high; differences r-1, r-2, ..., 1.
GracefulPermutation walecki(int r);  // r >= 1

// Walecki with successive 3-blocks reversed and a case-specific tail per
// r mod 6; starts (2, r, 1, ...) for r >= 5 and ends at a value within
// {(r-1)/2, r/2, (r+3)/2, (r+4)/2}. r >= 3.
GracefulPermutation three_twizzler(int r);

// Reverse of the first r-d+1 entries of Walecki, then a graceful
// permutation of the leftover middle interval; differences begin
// (d, d+1, ..., r-1, d-1, ...). Requires ceil(r/3) < d < r.
GracefulPermutation imperfect_twizzler(int d, int r);

// Length-3d graceful permutation with first difference d:
// (d+1; 1, 3d, 2, 3d-1, ..., d, 2d+1; d+2, 2d, d+3, 2d-1, ...). d >= 1.
GracefulPermutation graceful_length_3d(int d);

// First-found graceful permutation of {1..len} starting with e, by
// memoized backtracking; empty only if none exists.
std::optional<GracefulPermutation> graceful_with_first_element(int e, int len);

// Grows gamma (length l, last entry <= t) by 2t entries: finds an
// even-length-2t graceful permutation alpha with odd positions > t and
// alpha_1 = last(gamma) + t, then emits
//   (gamma_1 + t, ..., gamma_l + t,
//    alpha_1 + l, alpha_2, alpha_3 + l, alpha_4, ..., alpha_{2t-1} + l,
//    alpha_{2t}).
// The result is graceful of length l + 2t and its differences begin with
// gamma's differences in order.
GracefulPermutation extend_graceful(const GracefulPermutation& gamma, int t);

enum class GracefulBranch {
  ReversedWalecki,    // d = 1
  WaleckiCore,        // r-d odd, d < (r-4)/2: extend_graceful over Walecki
  TwizzlerCore,       // r-d even, 3 <= d <= (r-8)/2: extend over 3-twizzler
  ImperfectTwizzler,  // d >= ceil(r/3) + 1
  ThreeSegment,       // r = 3d
  ReversedTwizzler,   // the four pairs solved by reversing a 3-twizzler
  TableLookup,        // the 13 stored sporadic permutations
  SearchFallback,     // exhaustive backtracking
  Impossible,         // (2,4), (2,5), (2,8)
};

const char* graceful_branch_name(GracefulBranch b);

struct GracefulResult {
  GracefulBranch branch = GracefulBranch::Impossible;
  std::optional<GracefulPermutation> perm;
};

// Graceful permutation of {1..r} whose first absolute difference is d
// (1 <= d < r). Impossible exactly for (2,4), (2,5), (2,8). Every
// constructed permutation is re-validated; a validation failure throws.
GracefulResult graceful_with_first_diff(int d, int r);

// Complete backtracking search for the same object; used as the dispatcher
// fallback and to confirm the impossible pairs exhaustively.
std::optional<GracefulPermutation> graceful_search(int d, int r);

// The 13 sporadic (d, r) permutations stored verbatim.
const std::vector<std::pair<std::pair<int, int>, std::vector<int>>>&
sporadic_graceful_table();

// Arrangement (a_1..a_{n-1}) of the nonzero elements of Z_n.
struct RotationalTerrace {
  uint32_t n = 0;
  std::vector<uint32_t> entries;
};

// b_i = a_{i+1} - a_i, cyclically closed with b_{n-1} = a_1 - a_{n-1}; a
// terrace is characterized by its sequencing also covering Z_n \ {0}.
struct RotationalSequencing {
  uint32_t n = 0;
  std::vector<uint32_t> entries;
};

RotationalSequencing sequencing_of(const RotationalTerrace& terrace);
bool is_rotational_terrace(const RotationalTerrace& terrace);

// (a_1, ..., a_r, a_r + r, a_{r-1} + r, ..., a_1 + r) over Z_{2r+1}; its
// sequencing ends with b_{n-1} = r + 1.
RotationalTerrace terrace_from_graceful(const GracefulPermutation& alpha);

struct ConstructedOrdering {
  Sequence seq;
  std::string method;  // which path produced it
};

// Ordering of Z_n \ {0, x} with distinct partial sums (including s_0 = 0):
// rotate a rotational sequencing so x is the dropped final entry.
// Requires n odd >= 3 and x nonzero.
ConstructedOrdering ordering_n_minus_2(uint32_t n, uint32_t x);

// Ordering of Z_p \ {0, x, y} with distinct partial sums, p an odd prime,
// x, y distinct, nonzero, y != -x. Scales so x maps to r+1, builds the
// terrace of a graceful permutation with first difference min(y*nu, p-y*nu),
// drops the matching end pair, and scales back. Falls back to the
// brute-force search for the p = 17 pairs the construction cannot reach.
ConstructedOrdering ordering_n_minus_3(uint32_t p, uint32_t x, uint32_t y);

// Attempt-and-validate variant for odd composite n: requires at least one
// of x, y coprime to n, runs the same construction, and returns only a
// validated ordering (throws if the attempt fails validation).
ConstructedOrdering ordering_n_minus_3_any(uint32_t n, uint32_t x, uint32_t y);

}  // namespace sumorder
