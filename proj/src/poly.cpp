#include "sumorder/poly.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sumorder {

const char* family_name(Family fam) {
  switch (fam) {
    case Family::F: return "F";
    case Family::f: return "f";
    case Family::g: return "g";
    case Family::h: return "h";
    case Family::p: return "p";
    case Family::q: return "q";
    case Family::COSTA: return "COSTA";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "F") return Family::F;
  if (name == "f") return Family::f;
  if (name == "g") return Family::g;
  if (name == "h") return Family::h;
  if (name == "p") return Family::p;
  if (name == "q") return Family::q;
  if (name == "COSTA" || name == "costa") return Family::COSTA;
  return std::nullopt;
}

static LinearForm difference(int k, int i, int j) {  // x_j - x_i, 1-based
  LinearForm lf;
  lf.coeffs.assign(k, 0);
  lf.coeffs[j - 1] = 1;
  lf.coeffs[i - 1] = -1;
  return lf;
}

static LinearForm window(int k, int i, int j) {  // x_i + ... + x_j, 1-based
  LinearForm lf;
  lf.coeffs.assign(k, 0);
  for (int v = i; v <= j; ++v) lf.coeffs[v - 1] = 1;
  return lf;
}

FactorList build_factors(Family fam, int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  FactorList fl;
  fl.family = fam;
  fl.k = k;
  auto all_differences = [&] {
    for (int i = 1; i < k; ++i)
      for (int j = i + 1; j <= k; ++j) fl.factors.push_back(difference(k, i, j));
  };
  switch (fam) {
    case Family::F:
      all_differences();
      for (int i = 1; i < k; ++i)
        for (int j = i + 1; j <= k; ++j)
          if (!(i == 1 && j == k)) fl.factors.push_back(window(k, i, j));
      break;
    case Family::f:
      all_differences();
      for (int i = 2; i < k; ++i)
        for (int j = i + 1; j <= k; ++j) fl.factors.push_back(window(k, i, j));
      break;
    case Family::g:
      all_differences();
      for (int i = 1; i < k; ++i)
        for (int j = i + 1; j <= k; ++j) fl.factors.push_back(window(k, i, j));
      break;
    case Family::h:
      for (int i = 1; i < k; ++i) fl.factors.push_back(difference(k, i, k));
      for (int i = 1; i < k; ++i) fl.factors.push_back(window(k, i, k));
      break;
    case Family::p:
      for (int i = 1; i < k; ++i) fl.factors.push_back(difference(k, i, k));
      break;
    case Family::q:
      for (int i = 1; i < k; ++i) fl.factors.push_back(window(k, i, k));
      break;
    case Family::COSTA:
      all_differences();
      for (int i = 2; i < k; ++i)
        for (int j = i + 2; j <= k; ++j) fl.factors.push_back(window(k, i, j));
      break;
  }
  return fl;
}

SparsePolynomial SparsePolynomial::one(int vars) {
  SparsePolynomial p(vars);
  p.terms_[ExponentVec(vars, 0)] = 1;
  return p;
}

void SparsePolynomial::add_term(const ExponentVec& exps, const bigint& delta) {
  if (static_cast<int>(exps.size()) != vars_)
    throw std::invalid_argument("exponent vector length mismatch");
  if (delta == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, delta);
    return;
  }
  it->second += delta;
  if (it->second == 0) terms_.erase(it);
}

const bigint& SparsePolynomial::coefficient(const ExponentVec& exps) const {
  static const bigint zero = 0;
  auto it = terms_.find(exps);
  return it == terms_.end() ? zero : it->second;
}

SparsePolynomial SparsePolynomial::multiplied_by(const LinearForm& form) const {
  if (static_cast<int>(form.coeffs.size()) != vars_)
    throw std::invalid_argument("linear form arity mismatch");
  SparsePolynomial out(vars_);
  ExponentVec e;
  for (const auto& [exps, coef] : terms_) {
    for (int v = 0; v < vars_; ++v) {
      if (form.coeffs[v] == 0) continue;
      e = exps;
      ++e[v];
      out.add_term(e, coef * form.coeffs[v]);
    }
  }
  return out;
}

bool SparsePolynomial::operator==(const SparsePolynomial& o) const {
  if (vars_ != o.vars_ || terms_.size() != o.terms_.size()) return false;
  for (const auto& [exps, coef] : terms_) {
    auto it = o.terms_.find(exps);
    if (it == o.terms_.end() || it->second != coef) return false;
  }
  return true;
}

std::optional<int> SparsePolynomial::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [exps, coef] : terms_) {
    int d = std::accumulate(exps.begin(), exps.end(), 0);
    if (!deg) deg = d;
    else if (*deg != d) return std::nullopt;
  }
  return deg;
}

std::string SparsePolynomial::to_string() const {
  std::vector<std::pair<ExponentVec, bigint>> sorted(terms_.begin(),
                                                     terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, coef] : sorted) {
    if (!first) os << " + ";
    first = false;
    os << coef.str();
    for (size_t v = 0; v < exps.size(); ++v)
      if (exps[v] != 0) os << "*x" << v + 1 << "^" << exps[v];
  }
  if (first) os << "0";
  return os.str();
}

SparsePolynomial expand(const FactorList& fl) {
  if (fl.k > 7)
    throw std::invalid_argument("expand() is limited to k <= 7");
  SparsePolynomial poly = SparsePolynomial::one(fl.k);
  for (const LinearForm& form : fl.factors) poly = poly.multiplied_by(form);
  return poly;
}

bigint coefficient_of(const SparsePolynomial& poly, const ExponentVec& target) {
  return poly.coefficient(target);
}

static void check_target(const FactorList& fl, const ExponentVec& target) {
  if (static_cast<int>(target.size()) != fl.k)
    throw std::invalid_argument("target length must equal k");
  long total = 0;
  for (int e : target) {
    if (e < 0) throw std::invalid_argument("target exponents must be >= 0");
    total += e;
  }
  if (total != fl.degree())
    throw std::invalid_argument(
        "target total degree must equal the factor count");
}

// ---------------------------------------------------------------------------
// Serial reference extractor: same pruning rules, plain exponent-vector keys,
// factors taken in the order given.
// ---------------------------------------------------------------------------

bigint pruned_coefficient_serial(const FactorList& fl,
                                 const ExponentVec& target) {
  check_target(fl, target);
  const int k = fl.k;
  const int m = fl.degree();
  // suffix counts: remain[i][v] = #factors with index >= i containing x_{v+1}
  std::vector<std::vector<int>> remain(m + 1, std::vector<int>(k, 0));
  for (int i = m - 1; i >= 0; --i) {
    remain[i] = remain[i + 1];
    for (int v = 0; v < k; ++v)
      if (fl.factors[i].coeffs[v] != 0) ++remain[i][v];
  }
  for (int v = 0; v < k; ++v)
    if (target[v] > remain[0][v]) return 0;

  using Map = std::unordered_map<ExponentVec, bigint, ExponentVecHash>;
  Map cur;
  cur.emplace(ExponentVec(k, 0), 1);
  ExponentVec cand;
  for (int i = 0; i < m; ++i) {
    Map next;
    const LinearForm& form = fl.factors[i];
    for (const auto& [exps, coef] : cur) {
      for (int v = 0; v < k; ++v) {
        if (form.coeffs[v] == 0) continue;
        if (exps[v] + 1 > target[v]) continue;  // rule (a)
        cand = exps;
        ++cand[v];
        bool reachable = true;  // rule (b)
        for (int w = 0; w < k; ++w) {
          if (cand[w] + remain[i + 1][w] < target[w]) {
            reachable = false;
            break;
          }
        }
        if (!reachable) continue;
        bigint delta = coef * form.coeffs[v];
        auto it = next.find(cand);
        if (it == next.end()) next.emplace(cand, std::move(delta));
        else it->second += delta;
      }
    }
    cur = std::move(next);
    if (cur.empty()) return 0;
  }
  auto it = cur.find(target);
  return it == cur.end() ? bigint(0) : it->second;
}

// ---------------------------------------------------------------------------
// Production kernel. Exponent vectors are packed into one machine word with
// one spare guard bit per variable so the lower-bound test (rule b) is a
// single subtract-and-mask; intermediate terms live in open-addressing
// tables bucketed by key hash, and each factor application is a two-phase
// (generate, then merge per destination bucket) OpenMP pass.
// ---------------------------------------------------------------------------

namespace {

inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline uint64_t key_hash(uint64_t k) { return mix64(k); }
inline uint64_t key_hash(unsigned __int128 k) {
  return mix64(static_cast<uint64_t>(k) ^ mix64(static_cast<uint64_t>(k >> 64)));
}

template <class Key>
class AccumTable {
 public:
  static constexpr Key kEmpty = ~Key(0);

  void reset(size_t expected) {
    size_t cap = 16;
    while (cap * 3 < expected * 4) cap <<= 1;  // keep load below 3/4
    slots_.assign(cap, Slot{});
    mask_ = cap - 1;
    count_ = 0;
  }

  void add(Key key, const bigint& delta, int sign) {
    size_t idx = key_hash(key) & mask_;
    for (;;) {
      Slot& s = slots_[idx];
      if (s.key == kEmpty) {
        if ((count_ + 1) * 4 > slots_.size() * 3) {
          grow();
          add(key, delta, sign);
          return;
        }
        s.key = key;
        s.val = sign > 0 ? delta : -delta;
        ++count_;
        return;
      }
      if (s.key == key) {
        if (sign > 0) s.val += delta;
        else s.val -= delta;
        return;
      }
      idx = (idx + 1) & mask_;
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (const Slot& s : slots_) {
      if (s.key != kEmpty && s.val != 0) f(s.key, s.val);
    }
  }

  const bigint* find(Key key) const {
    if (slots_.empty()) return nullptr;
    size_t idx = key_hash(key) & mask_;
    for (;;) {
      const Slot& s = slots_[idx];
      if (s.key == kEmpty) return nullptr;
      if (s.key == key) return &s.val;
      idx = (idx + 1) & mask_;
    }
  }

  size_t size() const { return count_; }
  void clear() {
    slots_.clear();
    slots_.shrink_to_fit();
    mask_ = 0;
    count_ = 0;
  }

 private:
  struct Slot {
    Key key = kEmpty;
    bigint val;
  };
  std::vector<Slot> slots_;
  size_t mask_ = 0;
  size_t count_ = 0;

  void grow() {
    std::vector<Slot> old = std::move(slots_);
    slots_.assign(old.size() * 2, Slot{});
    mask_ = slots_.size() - 1;
    count_ = 0;
    for (Slot& s : old) {
      if (s.key == kEmpty) continue;
      size_t idx = key_hash(s.key) & mask_;
      while (slots_[idx].key != kEmpty) idx = (idx + 1) & mask_;
      slots_[idx].key = s.key;
      slots_[idx].val = std::move(s.val);
      ++count_;
    }
  }
};

template <class Key>
struct Packing {
  int k = 0;
  std::array<int, 16> offset{};
  std::array<int, 16> width{};  // value bits + 1 guard bit; 0 if target 0
  Key guard_mask = 0;           // the guard bit of every active field

  static int value_bits(int t) { return t == 0 ? 0 : std::bit_width(unsigned(t)); }

  bool fits(const ExponentVec& target) {
    k = static_cast<int>(target.size());
    int pos = 0;
    guard_mask = 0;
    for (int v = 0; v < k; ++v) {
      int vb = value_bits(target[v]);
      width[v] = vb == 0 ? 0 : vb + 1;
      offset[v] = pos;
      pos += width[v];
      if (width[v] > 0 && pos <= int(sizeof(Key) * 8))
        guard_mask |= Key(1) << (pos - 1);
    }
    return pos <= int(sizeof(Key) * 8);
  }

  Key pack(const ExponentVec& e) const {
    Key key = 0;
    for (int v = 0; v < k; ++v)
      if (width[v] > 0) key |= Key(e[v]) << offset[v];
    return key;
  }
};

struct KernelStats {
  size_t peak_terms = 0;
};

template <class Key>
bigint packed_kernel(const FactorList& fl, const ExponentVec& target,
                     Packing<Key>& pk, KernelStats* stats) {
  const int k = fl.k;
  // group by highest-index variable, ascending, so early layers close in
  // order and the lower bound starts biting sooner
  std::vector<LinearForm> factors = fl.factors;
  auto top_var = [&](const LinearForm& f) {
    for (int v = k - 1; v >= 0; --v)
      if (f.coeffs[v] != 0) return v;
    return -1;
  };
  std::stable_sort(factors.begin(), factors.end(),
                   [&](const LinearForm& a, const LinearForm& b) {
                     return top_var(a) < top_var(b);
                   });
  const int m = static_cast<int>(factors.size());

  std::vector<std::array<int, 16>> remain(m + 1);
  remain[m].fill(0);
  for (int i = m - 1; i >= 0; --i) {
    remain[i] = remain[i + 1];
    for (int v = 0; v < k; ++v)
      if (factors[i].coeffs[v] != 0) ++remain[i][v];
  }
  for (int v = 0; v < k; ++v)
    if (target[v] > remain[0][v]) return 0;

  // per-step packed lower bounds (state after factor i must satisfy >= low)
  std::vector<Key> low_key(m);
  for (int i = 0; i < m; ++i) {
    Key L = 0;
    for (int v = 0; v < k; ++v) {
      int low = target[v] - remain[i + 1][v];
      if (low > 0) L |= Key(low) << pk.offset[v];
    }
    low_key[i] = L;
  }

  struct FVar {
    Key shift, full_mask, full_value;
    int sign;
  };
  std::vector<std::vector<FVar>> fvars(m);
  for (int i = 0; i < m; ++i) {
    for (int v = 0; v < k; ++v) {
      int c = factors[i].coeffs[v];
      if (c == 0) continue;
      if (target[v] == 0) continue;  // rule (a) would always fire
      FVar fv;
      fv.shift = Key(1) << pk.offset[v];
      fv.full_mask = ((Key(1) << pk.width[v]) - 1) << pk.offset[v];
      fv.full_value = Key(target[v]) << pk.offset[v];
      fv.sign = c;
      fvars[i].push_back(fv);
    }
  }

  const Key H = pk.guard_mask;
  const int max_threads = omp_get_max_threads();
  int nbuckets = 1;
  while (nbuckets < 4 * max_threads) nbuckets <<= 1;
  const int bshift = 64 - std::countr_zero(unsigned(nbuckets));

  std::vector<AccumTable<Key>> cur(nbuckets), nxt(nbuckets);
  cur[0].reset(16);
  cur[0].add(0, bigint(1), 1);

  struct Stage {
    Key key;
    const bigint* src;
    int sign;
  };
  std::vector<std::vector<std::vector<Stage>>> stage(
      max_threads, std::vector<std::vector<Stage>>(nbuckets));

  for (int i = 0; i < m; ++i) {
    size_t total = 0;
    for (const auto& b : cur) total += b.size();
    if (stats) stats->peak_terms = std::max(stats->peak_terms, total);
    const Key L = low_key[i];
    const auto& vars = fvars[i];
    const bool par = total > 4096;

#pragma omp parallel if (par)
    {
      const int tid = omp_get_thread_num();
      auto& my_stage = stage[tid];
#pragma omp for schedule(static)
      for (int b = 0; b < nbuckets; ++b) {
        cur[b].for_each([&](Key key, const bigint& val) {
          for (const FVar& fv : vars) {
            if ((key & fv.full_mask) == fv.full_value) continue;  // rule (a)
            Key key2 = key + fv.shift;
            if ((((key2 | H) - L) & H) != H) continue;  // rule (b)
            int dest = static_cast<int>(key_hash(key2) >> bshift);
            my_stage[dest].push_back(Stage{key2, &val, fv.sign});
          }
        });
      }
#pragma omp for schedule(dynamic, 1)
      for (int b = 0; b < nbuckets; ++b) {
        size_t incoming = 0;
        for (int t = 0; t < max_threads; ++t) incoming += stage[t][b].size();
        nxt[b].reset(incoming);
        for (int t = 0; t < max_threads; ++t) {
          for (const Stage& s : stage[t][b]) nxt[b].add(s.key, *s.src, s.sign);
          stage[t][b].clear();
        }
      }
    }
    for (int b = 0; b < nbuckets; ++b) {
      cur[b] = std::move(nxt[b]);
      nxt[b].clear();
    }
  }

  const Key want = pk.pack(target);
  const int dest = static_cast<int>(key_hash(want) >> bshift);
  const bigint* hit = cur[dest].find(want);
  return hit ? *hit : bigint(0);
}

}  // namespace

bigint pruned_coefficient(const FactorList& fl, const ExponentVec& target) {
  check_target(fl, target);
  if (fl.k > 16)
    throw std::invalid_argument("pruned_coefficient is limited to k <= 16");
  for (int e : target)
    if (e > 63)
      throw std::invalid_argument("target exponents are limited to 63");
  if (fl.degree() == 0) return 1;  // empty product, all-zero target

  Packing<uint64_t> p64;
  if (p64.fits(target)) return packed_kernel(fl, target, p64, nullptr);
  Packing<unsigned __int128> p128;
  if (p128.fits(target)) return packed_kernel(fl, target, p128, nullptr);
  return pruned_coefficient_serial(fl, target);  // unreachable for k <= 16
}

// ---------------------------------------------------------------------------
// Coefficient cache
// ---------------------------------------------------------------------------

CoefficientCache::CoefficientCache(std::filesystem::path file)
    : file_(std::move(file)) {
  if (file_.empty()) return;
  std::ifstream in(file_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string fam_token;
    int k = 0;
    if (!(ls >> fam_token >> k)) continue;
    auto fam = family_from_name(fam_token);
    if (!fam || k < 1) continue;
    ExponentVec target(k);
    bool ok = true;
    for (int v = 0; v < k; ++v)
      if (!(ls >> target[v])) {
        ok = false;
        break;
      }
    std::string coeff;
    if (!ok || !(ls >> coeff)) continue;
    try {
      mem_[{{static_cast<int>(*fam), k}, target}] = parse_decimal(coeff);
    } catch (const std::exception&) {
      // malformed coefficient: skip the record
    }
  }
}

std::optional<bigint> CoefficientCache::lookup(Family fam, int k,
                                               const ExponentVec& target) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = mem_.find({{static_cast<int>(fam), k}, target});
  if (it == mem_.end()) return std::nullopt;
  return it->second;
}

void CoefficientCache::store(Family fam, int k, const ExponentVec& target,
                             const bigint& c) {
  std::lock_guard<std::mutex> lock(mu_);
  mem_[{{static_cast<int>(fam), k}, target}] = c;
  if (file_.empty()) return;
  std::ostringstream line;
  line << family_name(fam) << ' ' << k;
  for (int e : target) line << ' ' << e;
  line << ' ' << to_decimal(c) << '\n';
  std::ofstream out(file_, std::ios::app);
  out << line.str() << std::flush;
}

size_t CoefficientCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return mem_.size();
}

}  // namespace sumorder
