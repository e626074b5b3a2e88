#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sumorder {

// Which distinct-partial-sums condition a sequence is checked against.
//
//   Alspach     all sums s_0..s_k pairwise distinct (s_0 = 0, so the total
//               sum may not vanish either);
//   Archdeacon  sums s_1..s_k pairwise distinct;
//   Costa       same check as Archdeacon, but the underlying set may not
//               contain both x and -x.
enum class Variant { Alspach, Archdeacon, Costa };

const char* variant_name(Variant v);
std::optional<Variant> variant_from_name(std::string_view name);

// An element of Z_n; the value is kept reduced into [0, n).
class CyclicElement {
 public:
  CyclicElement(uint32_t n, int64_t value);

  uint32_t value() const { return value_; }
  uint32_t modulus() const { return n_; }

  CyclicElement operator+(const CyclicElement& o) const;
  CyclicElement operator-(const CyclicElement& o) const;
  CyclicElement operator*(const CyclicElement& o) const;
  CyclicElement operator-() const;
  bool operator==(const CyclicElement& o) const = default;

  // Multiplicative inverse; empty unless gcd(value, n) = 1.
  std::optional<CyclicElement> inverse() const;

 private:
  uint32_t n_;
  uint32_t value_;
};

// A sequence of elements of Z_n, stored reduced.
struct Sequence {
  uint32_t n = 0;
  std::vector<uint32_t> entries;

  // Empty string when well formed; otherwise a description of the first
  // defect (modulus too small, zero entry, repeated entry).
  std::string defect() const;
};

// s_0 = 0 and s_i = s_{i-1} + a_i (mod n); returns s_0..s_k.
std::vector<uint32_t> partial_sums(const Sequence& seq);

struct OrderingReport {
  Sequence seq;
  Variant variant = Variant::Alspach;
  std::vector<uint32_t> sums;  // s_0..s_k
  bool valid = false;
  std::string reason;  // set when invalid
  // Index pairs (i, j), i < j, with s_i = s_j under the variant's range.
  std::vector<std::pair<int, int>> violations;
};

// Validates a candidate ordering. Never throws: malformed input or a
// violated variant precondition yields valid = false with a reason.
OrderingReport check_ordering(const Sequence& seq, Variant variant);

// True iff no two distinct elements of `subset` differ by a zero divisor
// of Z_n (a nonzero d with gcd(d, n) > 1). Entries are reduced mod n and
// de-duplicated first.
bool condition_d(const std::vector<uint32_t>& subset, uint32_t n);

// Largest size of a subset of Z_n all of whose pairwise differences are
// units: equal to the smallest prime factor of n (n >= 2).
uint32_t max_condition_d_size(uint32_t n);

// Small number-theory helpers shared by the certifier and constructions.
std::optional<uint32_t> mod_inverse(uint32_t a, uint32_t n);
bool is_prime_u64(uint64_t n);  // deterministic Miller-Rabin for 64 bits
uint64_t smallest_prime_factor_u64(uint64_t n);
std::vector<uint64_t> prime_factors_u64(uint64_t n);  // distinct, ascending

}  // namespace sumorder
