#include "sumorder/certify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sumorder/group.hpp"

namespace sumorder {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Covered: return "COVERED";
    case Verdict::NotCovered: return "NOT_COVERED";
    case Verdict::ZeroCoefficient: return "ZERO_COEFFICIENT";
  }
  return "?";
}

ExponentVec table_monomial(int k, int j) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (j < 1 || j > k) throw std::invalid_argument("j must be in [1, k]");
  ExponentVec e(k, k - 1);
  e[j - 1] = k - 2;
  return e;
}

ExponentVec ramp_monomial(int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  ExponentVec e(k, 0);
  e[0] = k - 1;
  for (int i = 2; i <= k; ++i) e[i - 1] = 2 * (i - 2);
  return e;
}

ExponentVec plateau_monomial(int k, int d) {
  if (d < 4) throw std::invalid_argument("d must be at least 4");
  if (k < d - 1) throw std::invalid_argument("k must be at least d-1");
  ExponentVec e(k, 0);
  for (int i = 1; i <= k - d + 2; ++i) e[i - 1] = 2 * (i - 1);
  for (int i = k - d + 3; i <= k; ++i) e[i - 1] = 2 * k - d + 1;
  return e;
}

static bigint extract(Family fam, int k, const ExponentVec& target,
                      CoefficientCache* cache) {
  if (cache) {
    if (auto hit = cache->lookup(fam, k, target)) return *hit;
  }
  bigint c = pruned_coefficient(build_factors(fam, k), target);
  if (cache) cache->store(fam, k, target, c);
  return c;
}

bigint compute_c(int k, int j, CoefficientCache* cache) {
  return extract(Family::F, k, table_monomial(k, j), cache);
}

static Certificate certify_common(int k, bool moduli, CoefficientCache* cache) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  Certificate cert;
  cert.k = k;
  cert.moduli = moduli;
  bigint g = 0;  // gcd of the nonzero coefficients
  for (int j = 1; j <= k; ++j) {
    CoefficientEntry entry;
    entry.j = j;
    entry.target = table_monomial(k, j);
    entry.coefficient = compute_c(k, j, cache);
    if (entry.coefficient != 0)
      g = boost::multiprecision::gcd(g, abs(entry.coefficient));
    cert.entries.push_back(std::move(entry));
  }
  if (g == 0) {
    // every coefficient vanished: nothing is excluded by divisibility, so
    // no verdict can be derived
    cert.verdict = Verdict::ZeroCoefficient;
    return cert;
  }
  if (!moduli) {
    for (const bigint& p : prime_factors_big(g))
      if (p > k) cert.excluded.push_back(p);
    cert.verdict = cert.excluded.empty() ? Verdict::Covered : Verdict::NotCovered;
    return cert;
  }
  cert.excluded = divisors_above(g, k);
  bool all_discharged = true;
  for (const bigint& m : cert.excluded) {
    ModulusNote note;
    note.modulus = m;
    if (m <= bigint(UINT64_MAX)) {
      note.condition_d_bound =
          smallest_prime_factor_u64(m.convert_to<uint64_t>());
    } else {
      note.condition_d_bound =
          prime_factors_big(m).front().convert_to<uint64_t>();
    }
    note.discharged = note.condition_d_bound < static_cast<uint64_t>(k);
    all_discharged = all_discharged && note.discharged;
    cert.notes.push_back(std::move(note));
  }
  cert.verdict = all_discharged ? Verdict::Covered : Verdict::NotCovered;
  return cert;
}

Certificate certify_primes(int k, CoefficientCache* cache) {
  return certify_common(k, false, cache);
}

Certificate certify_moduli(int k, CoefficientCache* cache) {
  return certify_common(k, true, cache);
}

AlphaSeries alpha_series(int d, int k_from, int k_to, CoefficientCache* cache) {
  if (d < 4) throw std::invalid_argument("d must be at least 4");
  if (k_from > k_to) throw std::invalid_argument("empty k range");
  AlphaSeries series;
  series.d = d;
  for (int k = k_from; k <= k_to; ++k) {
    if (!(k > d - 1))
      throw std::invalid_argument("admissibility requires k > d-1");
    if (!(8 * k > d * d))
      throw std::invalid_argument("admissibility requires k > d^2/8");
    AlphaSample s;
    s.k = k;
    s.alpha = extract(Family::g, k, plateau_monomial(k, d), cache);
    series.samples.push_back(std::move(s));
  }
  return series;
}

std::vector<TableRow> table1(int k_max, CoefficientCache* cache) {
  if (k_max < 2) throw std::invalid_argument("k_max must be at least 2");
  std::vector<TableRow> rows;
  for (int k = 2; k <= k_max; ++k)
    for (int j = 1; j <= (k + 1) / 2; ++j)
      rows.push_back(TableRow{k, j, compute_c(k, j, cache)});
  return rows;
}

// ---------------------------------------------------------------------------
// bigint factorization
// ---------------------------------------------------------------------------

static bool is_probable_prime_big(const bigint& n) {
  if (n < 2) return false;
  if (n <= bigint(UINT64_MAX)) return is_prime_u64(n.convert_to<uint64_t>());
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull})
    if (n % p == 0) return false;
  bigint d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // fixed bases; beyond 64 bits this is probabilistic with error < 4^-24
  uint64_t base = 0xda3e39cb94b95bdbull;
  for (int round = 0; round < 24; ++round) {
    base = base * 6364136223846793005ull + 1442695040888963407ull;
    bigint a = 2 + bigint(base) % (n - 3);
    bigint x = boost::multiprecision::powm(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

static bigint pollard_rho_big(const bigint& n) {
  if (n % 2 == 0) return 2;
  for (uint64_t c = 1;; ++c) {
    bigint x = 2, y = 2, d = 1;
    auto step = [&](bigint v) { return (v * v + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = boost::multiprecision::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

static void factor_big_into(bigint n, std::vector<bigint>& out) {
  if (n == 1) return;
  if (is_probable_prime_big(n)) {
    out.push_back(n);
    return;
  }
  if (n <= bigint(UINT64_MAX)) {
    for (uint64_t p : prime_factors_u64(n.convert_to<uint64_t>())) {
      bigint bp = p;
      while (n % bp == 0) {
        out.push_back(bp);
        n /= bp;
      }
    }
    return;
  }
  bigint d = pollard_rho_big(n);
  factor_big_into(d, out);
  factor_big_into(n / d, out);
}

std::vector<std::pair<bigint, int>> factorize_big(bigint n) {
  if (n < 1) throw std::invalid_argument("argument must be positive");
  std::vector<bigint> primes;
  for (uint64_t p = 2; p <= 1000000 && bigint(p) * p <= n;
       p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  if (n > 1) factor_big_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<bigint, int>> out;
  for (const bigint& p : primes) {
    if (!out.empty() && out.back().first == p) ++out.back().second;
    else out.emplace_back(p, 1);
  }
  return out;
}

std::vector<bigint> prime_factors_big(const bigint& n) {
  std::vector<bigint> out;
  for (const auto& [p, e] : factorize_big(n)) out.push_back(p);
  return out;
}

std::vector<bigint> divisors_above(const bigint& n, const bigint& floor) {
  std::vector<bigint> divisors{1};
  for (const auto& [p, e] : factorize_big(n)) {
    size_t base = divisors.size();
    bigint pe = 1;
    for (int i = 0; i < e; ++i) {
      pe *= p;
      for (size_t t = 0; t < base; ++t) divisors.push_back(divisors[t] * pe);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  std::vector<bigint> out;
  for (const bigint& d : divisors)
    if (d > floor) out.push_back(d);
  return out;
}

}  // namespace sumorder
