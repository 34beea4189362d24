#include "gk/factored.hpp"

#include <algorithm>
#include <mutex>

namespace gk {

namespace {

constexpr uint32_t kTrialLimit = 1u << 20;

const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    std::vector<bool> comp(kTrialLimit, false);
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i < kTrialLimit; ++i) {
      if (comp[i]) continue;
      out.push_back(i);
      for (uint64_t j = uint64_t(i) * i; j < kTrialLimit; j += i)
        comp[j] = true;
    }
    return out;
  }();
  return primes;
}

// Products of blocks of small primes; gcd against these locates the blocks
// that actually divide n, so trial division touches few candidates.
const std::vector<std::pair<Int, std::pair<size_t, size_t>>>& prime_blocks() {
  static const auto blocks = [] {
    std::vector<std::pair<Int, std::pair<size_t, size_t>>> out;
    const auto& ps = small_primes();
    const size_t kBlock = 2048;
    for (size_t lo = 0; lo < ps.size(); lo += kBlock) {
      size_t hi = std::min(ps.size(), lo + kBlock);
      Int prod = 1;
      for (size_t k = lo; k < hi; ++k) prod *= ps[k];
      out.emplace_back(prod, std::make_pair(lo, hi));
    }
    return out;
  }();
  return blocks;
}

Int brent_rho(const Int& n) {
  // Deterministic parameter schedule; n odd composite, not a small prime.
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1, q = 1, ys = 0;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](Int& v) {
      v = (v * v + c) % n;
    };
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && d == 1) {
        ys = y;
        unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          step(y);
          q = q * abs(x - y) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
      if (r > (1ul << 28)) break;
    }
    if (d == n) {
      // Backtrack one step at a time.
      do {
        step(ys);
        Int diff = abs(x - ys);
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (d == 1);
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(Int n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += 1;
    return;
  }
  unsigned long p2 = mpz_perfect_power_p(n.get_mpz_t());
  if (p2) {
    // Find the largest exponent e with an exact e-th root.
    for (unsigned long e = mpz_sizeinbase(n.get_mpz_t(), 2); e >= 2; --e) {
      Int root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e)) {
        std::map<Int, unsigned> base;
        factor_into(root, base);
        for (auto& [p, k] : base) out[p] += k * unsigned(e);
        return;
      }
    }
  }
  Int d = brent_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

std::map<Int, unsigned> factorize(const Int& n) {
  if (sgn(n) == 0) throw std::domain_error("factorize: zero has no factorization");
  Int m = abs(n);
  std::map<Int, unsigned> out;
  if (m == 1) return out;
  const auto& ps = small_primes();
  for (const auto& [prod, range] : prime_blocks()) {
    Int g;
    mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), prod.get_mpz_t());
    if (g == 1) continue;
    for (size_t k = range.first; k < range.second; ++k) {
      uint32_t p = ps[k];
      if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
      unsigned e = 0;
      do {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
      out[Int(p)] = e;
    }
    if (m == 1) break;
  }
  if (m > 1) factor_into(m, out);

  // Verify by re-multiplication.
  Int prod = 1;
  for (auto& [p, e] : out) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    prod *= pe;
  }
  if (prod != abs(n))
    throw std::logic_error("factorize: verification by re-multiplication failed");
  return out;
}

FactoredInteger FactoredInteger::of(const Int& v) {
  return {v, factorize(v)};
}

Int FactoredInteger::abs_value() const { return abs(value); }

std::vector<Int> FactoredInteger::prime_support() const {
  std::vector<Int> out;
  out.reserve(factors.size());
  for (auto& [p, e] : factors) out.push_back(p);
  return out;
}

unsigned FactoredInteger::exponent_of(const Int& p) const {
  auto it = factors.find(p);
  return it == factors.end() ? 0 : it->second;
}

FactoredInteger FactoredInteger::times(const FactoredInteger& o) const {
  FactoredInteger r{value * o.value, factors};
  for (auto& [p, e] : o.factors) r.factors[p] += e;
  return r;
}

FactoredInteger FactoredInteger::divide_exact(const FactoredInteger& o) const {
  if (sgn(o.value) == 0 || !mpz_divisible_p(value.get_mpz_t(), o.value.get_mpz_t()))
    throw std::domain_error("FactoredInteger: inexact division");
  FactoredInteger r{value / o.value, factors};
  for (auto& [p, e] : o.factors) {
    auto it = r.factors.find(p);
    if (it == r.factors.end() || it->second < e)
      throw std::domain_error("FactoredInteger: divisor exponent exceeds dividend");
    it->second -= e;
    if (it->second == 0) r.factors.erase(it);
  }
  return r;
}

void FactoredInteger::check() const {
  Int prod = 1;
  for (auto& [p, e] : factors) {
    if (e == 0) throw std::logic_error("FactoredInteger: zero exponent");
    if (!is_probable_prime(p)) throw std::logic_error("FactoredInteger: composite key");
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    prod *= pe;
  }
  if (prod != abs(value)) throw std::logic_error("FactoredInteger: product mismatch");
}

FactoredInteger pi_part(const FactoredInteger& n, const std::vector<Int>& pi) {
  FactoredInteger r = FactoredInteger::unit();
  for (auto& [p, e] : n.factors) {
    if (std::find(pi.begin(), pi.end(), p) == pi.end()) continue;
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    r.value *= pe;
    r.factors[p] = e;
  }
  return r;
}

FactoredInteger pi_prime_part(const FactoredInteger& n, const std::vector<Int>& pi) {
  FactoredInteger r = FactoredInteger::unit();
  for (auto& [p, e] : n.factors) {
    if (std::find(pi.begin(), pi.end(), p) != pi.end()) continue;
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    r.value *= pe;
    r.factors[p] = e;
  }
  return r;
}

Int r_part(const Int& n, const Int& r) {
  Int m = abs(n), out = 1;
  while (mpz_divisible_p(m.get_mpz_t(), r.get_mpz_t())) {
    m /= r;
    out *= r;
  }
  return out;
}

unsigned r_valuation(const Int& n, const Int& r) {
  Int m = abs(n);
  unsigned v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), r.get_mpz_t())) {
    m /= r;
    ++v;
  }
  return v;
}

std::vector<uint32_t> primes_below(uint32_t limit) {
  std::vector<bool> comp(limit, false);
  std::vector<uint32_t> out;
  for (uint32_t i = 2; i < limit; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (uint64_t j = uint64_t(i) * i; j < limit; j += i) comp[j] = true;
  }
  return out;
}

}  // namespace gk
