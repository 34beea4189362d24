#pragma once

#include <optional>

#include "gk/factored.hpp"

namespace gk {

enum class Sign { Plus, Minus };

inline int sign_unit(Sign s) { return s == Sign::Plus ? 1 : -1; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

// A signed base a or -a with |a| > 1.  The linear/unitary calculus
// substitutes eps*q uniformly, so the sign is first-class.
class SignedBase {
 public:
  SignedBase(Int magnitude, Sign sign) : mag_(std::move(magnitude)), sign_(sign) {
    if (mag_ <= 1) throw std::domain_error("SignedBase: magnitude must exceed 1");
  }
  static SignedBase plus(Int m) { return SignedBase(std::move(m), Sign::Plus); }
  static SignedBase minus(Int m) { return SignedBase(std::move(m), Sign::Minus); }
  static SignedBase from_value(const Int& v) {
    return SignedBase(abs(v), sgn(v) > 0 ? Sign::Plus : Sign::Minus);
  }

  const Int& magnitude() const { return mag_; }
  Sign sign() const { return sign_; }
  bool negative() const { return sign_ == Sign::Minus; }
  Int value() const { return negative() ? Int(-mag_) : mag_; }
  SignedBase negated() const {
    return SignedBase(mag_, negative() ? Sign::Plus : Sign::Minus);
  }
  // (+-a)^e as a signed base.
  SignedBase pow(unsigned e) const;

 private:
  Int mag_;
  Sign sign_;
};

// e(r,a) for an odd prime r coprime to a, via the factorization of r-1.
unsigned mult_order(const Int& r, const SignedBase& a);
// e(2,n) for odd n: 1 if n = 1 mod 4, else 2.
unsigned mult_order_two(const Int& n);
// e(r,a) for any prime r (applies the r = 2 convention).
unsigned order_index(const Int& r, const SignedBase& a);

// Exact value of the i-th cyclotomic polynomial at the signed base.
Int cyclotomic_eval(unsigned i, const SignedBase& a);
Int cyclotomic_eval(unsigned i, const Int& a);

// Greatest primitive divisor k_i(a).
Int greatest_primitive_divisor_value(unsigned i, const SignedBase& a);
FactoredInteger greatest_primitive_divisor(unsigned i, const SignedBase& a);

// R_i(a): all primes r with e(r,a) = i.
std::vector<Int> primitive_prime_divisors(unsigned i, const SignedBase& a);

// True exactly when (a, i) is one of the six pairs of Zsigmondy's theorem
// with R_i(a) empty.
bool zsigmondy_exception(const Int& a_value, unsigned i);

long eta(long k);
long nu(long k);
long nu_eps(long k, Sign eps);

// The r-part of (eps*q)^m - 1 by the closed form m_r * (eps*q - 1)_r,
// cross-checked against direct computation.  Requires r odd dividing
// eps*q - 1, or r = 2 with 4 | eps*q - 1.
FactoredInteger lifted_r_part(Sign eps, const Int& q, unsigned m, const Int& r);

// |{ i : b - a < eta(i) <= b }|, asserted equal to the closed form
// [3a/2] (b even) resp. [(3a+1)/2] (b odd).
long count_eta_interval(long a, long b);

enum class IntervalMode { FiveSixths, EightNinths };

// A witness prime in the open interval (5n/6, n) or (8n/9, n).
long prime_in_interval(long n, IntervalMode mode);

std::vector<unsigned> divisors_of(unsigned n);
// Largest prime factor of n > 1.
unsigned largest_prime_factor(unsigned n);

}  // namespace gk
