#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace gk {

using Int = mpz_class;

// Thrown when a verified numeric inequality or identity from the source
// material fails on concrete inputs.  Must never fire on the tested ranges.
struct lemma_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An arbitrary-precision integer carrying the full prime factorization of its
// absolute value.  Invariant: prod p^e over factors == |value|, every key
// prime, every exponent >= 1.
struct FactoredInteger {
  Int value;
  std::map<Int, unsigned> factors;

  static FactoredInteger of(const Int& v);
  static FactoredInteger unit() { return {1, {}}; }

  Int abs_value() const;
  bool is_unit() const { return sgn(value) != 0 && cmp(abs(value), 1) == 0; }
  std::vector<Int> prime_support() const;
  unsigned exponent_of(const Int& p) const;

  FactoredInteger times(const FactoredInteger& o) const;
  // Exact division; throws std::domain_error if o does not divide *this.
  FactoredInteger divide_exact(const FactoredInteger& o) const;

  // Re-multiplies the factorization and checks primality of every key.
  void check() const;
};

// n_pi and n_{pi'}: largest divisor of n supported inside / outside pi.
FactoredInteger pi_part(const FactoredInteger& n, const std::vector<Int>& pi);
FactoredInteger pi_prime_part(const FactoredInteger& n,
                              const std::vector<Int>& pi);

// r-part of |n| for a single prime r.
Int r_part(const Int& n, const Int& r);
unsigned r_valuation(const Int& n, const Int& r);

bool is_probable_prime(const Int& n);

// Trial division to 1e6, then probabilistic primality testing plus Brent-rho
// splitting.  The returned factorization is verified by re-multiplication.
std::map<Int, unsigned> factorize(const Int& n);

// Primes below `limit` (simple cached sieve, thread-safe).
std::vector<uint32_t> primes_below(uint32_t limit);

}  // namespace gk
