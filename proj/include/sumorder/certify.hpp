#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sumorder/bigint.hpp"
#include "sumorder/poly.hpp"

namespace sumorder {

// Target monomials used by the non-vanishing certificates.

// Exponent k-1 everywhere except k-2 at position j (1-based); the monomial
// behind column j of the coefficient table. Total degree k(k-1) - 1.
ExponentVec table_monomial(int k, int j);

// (k-1, 0, 2, 4, ..., 2k-4): leading exponent k-1, then an even ramp.
// Total degree (k-1)^2; extracted from family f.
ExponentVec ramp_monomial(int k);

// (0, 2, ..., 2k-2d+2) on the first k-d+2 positions, then 2k-d+1 on the
// last d-2. Total degree k(k-1); extracted from family g. Requires d >= 4
// and k >= d-1.
ExponentVec plateau_monomial(int k, int d);

// c_{k,j}: coefficient of table_monomial(k, j) in family F.
bigint compute_c(int k, int j, CoefficientCache* cache = nullptr);

enum class Verdict { Covered, NotCovered, ZeroCoefficient };
const char* verdict_name(Verdict v);

struct CoefficientEntry {
  int j = 0;
  ExponentVec target;
  bigint coefficient;
};

struct ModulusNote {
  bigint modulus;
  uint64_t condition_d_bound = 0;  // largest Condition-D subset size mod m
  bool discharged = false;         // bound < k: no size-k instance exists
};

// Aggregated non-vanishing certificate over the k table monomials.
// `excluded` is the set of primes (or moduli > 1) above k dividing every
// nonzero coefficient; rows with a zero coefficient impose no restriction.
struct Certificate {
  int k = 0;
  bool moduli = false;  // false: prime certificate, true: modulus certificate
  std::vector<CoefficientEntry> entries;  // j = 1..k
  std::vector<bigint> excluded;
  std::vector<ModulusNote> notes;  // moduli mode only, one per excluded value
  Verdict verdict = Verdict::NotCovered;
};

// Verdict is Covered iff no prime above k divides all nonzero c_{k,j}.
Certificate certify_primes(int k, CoefficientCache* cache = nullptr);

// Modulus variant: divisors above k surviving the intersection are listed,
// each annotated with its Condition-D size bound; Covered iff every
// survivor is discharged by that bound.
Certificate certify_moduli(int k, CoefficientCache* cache = nullptr);

struct AlphaSample {
  int k = 0;
  bigint alpha;
};

struct AlphaSeries {
  int d = 0;
  std::vector<AlphaSample> samples;
};

// Coefficient of plateau_monomial(k, d) in family g for k in
// [k_from, k_to]. Every k must satisfy both admissibility tests
// k > d-1 and k > d^2/8 (and d >= 4).
AlphaSeries alpha_series(int d, int k_from, int k_to,
                         CoefficientCache* cache = nullptr);

struct TableRow {
  int k = 0, j = 0;
  bigint c;
};

// Rows (k, j, c_{k,j}) for 2 <= k <= k_max and j <= ceil(k/2).
std::vector<TableRow> table1(int k_max, CoefficientCache* cache = nullptr);

// Exact factorization helpers on bigints: trial division by primes up to
// 10^6, then Miller-Rabin plus Pollard rho on the cofactor.
std::vector<std::pair<bigint, int>> factorize_big(bigint n);  // n >= 1
std::vector<bigint> prime_factors_big(const bigint& n);       // distinct
std::vector<bigint> divisors_above(const bigint& n, const bigint& floor);

}  // namespace sumorder
