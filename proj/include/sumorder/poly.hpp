#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sumorder/bigint.hpp"

namespace sumorder {

// The polynomial families whose coefficients certify distinct-partial-sum
// orderings, as products of linear forms over x_1..x_k:
//
//   F      all differences (x_j - x_i), i < j, and all window sums
//          (x_i + ... + x_j), i < j, except the full window (1, k);
//          degree k(k-1) - 1.
//   f      all differences, window sums with 2 <= i < j <= k;
//          degree (k-1)^2.
//   g      all differences and all window sums; degree k(k-1).
//   h      the layer of g involving x_k: (x_k - x_i)(x_i + ... + x_k)
//          for i < k; degree 2k - 2.
//   p, q   the difference / window halves of h; degree k - 1 each.
//   COSTA  f with the adjacent windows (j = i + 1) removed;
//          degree (k-1)^2 - (k-2).
enum class Family { F, f, g, h, p, q, COSTA };

const char* family_name(Family fam);
std::optional<Family> family_from_name(std::string_view name);

// A linear form sum_i coeffs[i] * x_{i+1} with small integer coefficients.
struct LinearForm {
  std::vector<int8_t> coeffs;
};

struct FactorList {
  Family family = Family::F;
  int k = 0;
  std::vector<LinearForm> factors;

  int degree() const { return static_cast<int>(factors.size()); }
};

// Builds the factor list for a family at a given k (k >= 2). F is built
// directly as the list above, never by dividing out the full window.
FactorList build_factors(Family fam, int k);

using ExponentVec = std::vector<int>;

struct ExponentVecHash {
  size_t operator()(const ExponentVec& v) const {
    size_t h = 1469598103934665603ull;
    for (int e : v) {
      h ^= static_cast<size_t>(e) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Exact sparse polynomial with bigint coefficients; zero terms are never
// stored.
class SparsePolynomial {
 public:
  using TermMap = std::unordered_map<ExponentVec, bigint, ExponentVecHash>;

  explicit SparsePolynomial(int vars) : vars_(vars) {}
  static SparsePolynomial one(int vars);

  int vars() const { return vars_; }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const ExponentVec& exps, const bigint& delta);
  const bigint& coefficient(const ExponentVec& exps) const;  // 0 if absent

  SparsePolynomial multiplied_by(const LinearForm& form) const;
  bool operator==(const SparsePolynomial& o) const;

  // Total degree when homogeneous; empty otherwise (or when zero).
  std::optional<int> homogeneous_degree() const;

  std::string to_string() const;  // sorted, for diagnostics

 private:
  int vars_;
  TermMap terms_;
};

// Full expansion of a factor list. Exponential in k; guarded to k <= 7.
SparsePolynomial expand(const FactorList& fl);

bigint coefficient_of(const SparsePolynomial& poly, const ExponentVec& target);

// Exact coefficient of x^target in the product of the factors, computed by
// factor-at-a-time multiplication where an intermediate monomial is dropped
// as soon as
//   (a) some exponent exceeds its target, or
//   (b) some exponent plus the number of remaining factors containing that
//       variable falls short of its target.
// Factors are processed grouped by their highest-index variable, ascending.
// Parallelized with OpenMP; pure and safe to call concurrently.
// Rejects k > 16 and target exponents > 63 (key packing bound), and a
// target whose total degree differs from the factor count.
bigint pruned_coefficient(const FactorList& fl, const ExponentVec& target);

// Simple single-threaded reference implementation of the same contract
// (unpacked keys, factors in the given order). Kept for tests and the
// kernel benchmark; no k/exponent bound beyond memory.
bigint pruned_coefficient_serial(const FactorList& fl,
                                 const ExponentVec& target);

// Persistent coefficient store. One record per line:
//   <family> <k> <e_1> ... <e_k> <decimal coefficient>
// Loaded at construction (last record wins), appended on store.
class CoefficientCache {
 public:
  explicit CoefficientCache(std::filesystem::path file);

  std::optional<bigint> lookup(Family fam, int k,
                               const ExponentVec& target) const;
  void store(Family fam, int k, const ExponentVec& target, const bigint& c);

  const std::filesystem::path& file() const { return file_; }
  size_t size() const;

 private:
  using MemKey = std::pair<std::pair<int, int>, ExponentVec>;
  std::filesystem::path file_;
  std::map<MemKey, bigint> mem_;
  mutable std::mutex mu_;
};

}  // namespace sumorder
