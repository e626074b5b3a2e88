#include "sumorder/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sumorder {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::Alspach: return "alspach";
    case Variant::Archdeacon: return "archdeacon";
    case Variant::Costa: return "costa";
  }
  return "?";
}

std::optional<Variant> variant_from_name(std::string_view name) {
  if (name == "alspach") return Variant::Alspach;
  if (name == "archdeacon") return Variant::Archdeacon;
  if (name == "costa") return Variant::Costa;
  return std::nullopt;
}

static uint32_t reduce(uint32_t n, int64_t v) {
  int64_t r = v % static_cast<int64_t>(n);
  if (r < 0) r += n;
  return static_cast<uint32_t>(r);
}

CyclicElement::CyclicElement(uint32_t n, int64_t value) : n_(n) {
  if (n < 1) throw std::invalid_argument("modulus must be positive");
  value_ = reduce(n, value);
}

CyclicElement CyclicElement::operator+(const CyclicElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("modulus mismatch");
  return CyclicElement(n_, static_cast<int64_t>(value_) + o.value_);
}

CyclicElement CyclicElement::operator-(const CyclicElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("modulus mismatch");
  return CyclicElement(n_, static_cast<int64_t>(value_) - o.value_);
}

CyclicElement CyclicElement::operator*(const CyclicElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("modulus mismatch");
  return CyclicElement(n_, static_cast<int64_t>(value_) * o.value_);
}

CyclicElement CyclicElement::operator-() const {
  return CyclicElement(n_, -static_cast<int64_t>(value_));
}

std::optional<CyclicElement> CyclicElement::inverse() const {
  auto inv = mod_inverse(value_, n_);
  if (!inv) return std::nullopt;
  return CyclicElement(n_, *inv);
}

std::string Sequence::defect() const {
  if (n < 2) return "modulus must be at least 2";
  std::vector<char> seen(n, 0);
  for (uint32_t e : entries) {
    uint32_t v = e % n;
    if (v == 0) return "entries must be nonzero";
    if (seen[v]) return "entries must be pairwise distinct";
    seen[v] = 1;
  }
  return "";
}

std::vector<uint32_t> partial_sums(const Sequence& seq) {
  std::vector<uint32_t> sums;
  sums.reserve(seq.entries.size() + 1);
  uint32_t s = 0;
  sums.push_back(0);
  for (uint32_t e : seq.entries) {
    s = (s + e % seq.n) % seq.n;
    sums.push_back(s);
  }
  return sums;
}

OrderingReport check_ordering(const Sequence& seq, Variant variant) {
  OrderingReport rep;
  rep.seq = seq;
  rep.variant = variant;
  std::string defect = seq.defect();
  if (!defect.empty()) {
    rep.reason = defect;
    return rep;
  }
  if (variant == Variant::Costa) {
    std::vector<char> in_set(seq.n, 0);
    for (uint32_t e : seq.entries) in_set[e % seq.n] = 1;
    for (uint32_t e : seq.entries) {
      uint32_t v = e % seq.n;
      if (in_set[(seq.n - v) % seq.n]) {
        rep.reason = "set contains both x and -x";
        return rep;
      }
    }
  }
  rep.sums = partial_sums(seq);
  const int k = static_cast<int>(seq.entries.size());
  const int lo = (variant == Variant::Alspach) ? 0 : 1;
  for (int i = lo; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      if (rep.sums[i] == rep.sums[j]) rep.violations.emplace_back(i, j);
  if (!rep.violations.empty()) {
    rep.reason = "partial sums collide";
    return rep;
  }
  rep.valid = true;
  return rep;
}

bool condition_d(const std::vector<uint32_t>& subset, uint32_t n) {
  if (n < 2) throw std::invalid_argument("modulus must be at least 2");
  std::vector<uint32_t> vals;
  vals.reserve(subset.size());
  for (uint32_t e : subset) vals.push_back(e % n);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  for (size_t i = 0; i < vals.size(); ++i)
    for (size_t j = i + 1; j < vals.size(); ++j) {
      uint32_t d = vals[j] - vals[i];
      if (std::gcd(d, n) > 1) return false;
    }
  return true;
}

uint32_t max_condition_d_size(uint32_t n) {
  if (n < 2) throw std::invalid_argument("modulus must be at least 2");
  return static_cast<uint32_t>(smallest_prime_factor_u64(n));
}

std::optional<uint32_t> mod_inverse(uint32_t a, uint32_t n) {
  // extended Euclid on (a, n)
  int64_t r0 = a % n, r1 = n, s0 = 1, s1 = 0;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  if (r0 != 1) return std::nullopt;
  return reduce(n, s0);
}

static uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

static uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // this base set is deterministic for all 64-bit inputs
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

static uint64_t pollard_rho(uint64_t n) {
  if ((n & 1) == 0) return 2;
  for (uint64_t c = 1;; ++c) {
    auto f = [&](uint64_t x) {
      return (mulmod_u64(x, x, n) + c) % n;
    };
    uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      uint64_t diff = x > y ? x - y : y - x;
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
  }
}

static void factor_into(uint64_t n, std::vector<uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

uint64_t smallest_prime_factor_u64(uint64_t n) {
  if (n < 2) throw std::invalid_argument("argument must be at least 2");
  for (uint64_t p = 2; p <= 1000000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) return p;
  }
  if (n <= 1000000ull * 1000000ull) return n;  // no factor found: prime
  std::vector<uint64_t> fs;
  factor_into(n, fs);
  return *std::min_element(fs.begin(), fs.end());
}

std::vector<uint64_t> prime_factors_u64(uint64_t n) {
  std::vector<uint64_t> fs;
  if (n < 2) return fs;
  for (uint64_t p = 2; p <= 1000000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      fs.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) {
    std::vector<uint64_t> rest;
    factor_into(n, rest);
    std::sort(rest.begin(), rest.end());
    rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
    fs.insert(fs.end(), rest.begin(), rest.end());
  }
  std::sort(fs.begin(), fs.end());
  return fs;
}

}  // namespace sumorder
