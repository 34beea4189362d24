#include "gk/arith.hpp"

#include <algorithm>

namespace gk {

SignedBase SignedBase::pow(unsigned e) const {
  if (e == 0) throw std::domain_error("SignedBase::pow: exponent must be positive");
  Int m;
  mpz_pow_ui(m.get_mpz_t(), mag_.get_mpz_t(), e);
  Sign s = (negative() && (e % 2 == 1)) ? Sign::Minus : Sign::Plus;
  return SignedBase(std::move(m), s);
}

std::vector<unsigned> divisors_of(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned largest_prime_factor(unsigned n) {
  if (n < 2) throw std::domain_error("largest_prime_factor: n must exceed 1");
  unsigned best = 0;
  for (unsigned p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      best = p;
      n /= p;
    }
  }
  return n > 1 ? n : best;
}

unsigned mult_order(const Int& r, const SignedBase& a) {
  if (r == 2 || !is_probable_prime(r))
    throw std::domain_error("mult_order: r must be an odd prime");
  Int av = a.value();
  Int g;
  mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), av.get_mpz_t());
  if (g != 1) throw std::domain_error("mult_order: r divides a");

  Int order = r - 1;
  for (auto& [p, e] : factorize(r - 1)) {
    for (unsigned k = 0; k < e; ++k) {
      Int cand = order / p;
      Int pw;
      mpz_powm(pw.get_mpz_t(), av.get_mpz_t(), cand.get_mpz_t(), r.get_mpz_t());
      if (pw == 1)
        order = cand;
      else
        break;
    }
  }
  return unsigned(order.get_ui());
}

unsigned mult_order_two(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) throw std::domain_error("mult_order_two: n must be odd");
  Int rem;
  mpz_fdiv_r_ui(rem.get_mpz_t(), n.get_mpz_t(), 4);
  return rem == 1 ? 1 : 2;
}

unsigned order_index(const Int& r, const SignedBase& a) {
  if (r == 2) return mult_order_two(a.value());
  return mult_order(r, a);
}

Int cyclotomic_eval(unsigned i, const Int& a) {
  if (i == 0) throw std::domain_error("cyclotomic_eval: i must be positive");
  // Phi_d(a) for all divisors d of i, in increasing order.
  auto divs = divisors_of(i);
  std::vector<Int> phi(divs.size());
  for (size_t k = 0; k < divs.size(); ++k) {
    unsigned d = divs[k];
    Int num;
    mpz_pow_ui(num.get_mpz_t(), a.get_mpz_t(), d);
    num -= 1;
    for (size_t j = 0; j < k; ++j) {
      if (d % divs[j]) continue;
      Int q, rem;
      mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), phi[j].get_mpz_t());
      if (rem != 0)
        throw std::logic_error("cyclotomic_eval: inexact division");
      num = q;
    }
    phi[k] = num;
  }
  return phi.back();
}

Int cyclotomic_eval(unsigned i, const SignedBase& a) {
  return cyclotomic_eval(i, a.value());
}

namespace {

// k_1(a) = |a-1|, halved when a = 3 mod 4.
Int k1_value(const Int& a) {
  Int v = abs(a - 1);
  Int rem;
  mpz_fdiv_r_ui(rem.get_mpz_t(), a.get_mpz_t(), 4);
  if (rem == 3) v /= 2;
  return v;
}

}  // namespace

Int greatest_primitive_divisor_value(unsigned i, const SignedBase& a) {
  if (i == 0) throw std::domain_error("greatest_primitive_divisor: i must be positive");
  Int av = a.value();
  if (i == 1) return k1_value(av);
  if (i == 2) return k1_value(-av);
  Int phi = abs(cyclotomic_eval(i, av));
  unsigned r = largest_prime_factor(i);
  unsigned icore = i;
  while (icore % r == 0) icore /= r;
  Int g;
  Int phicore = cyclotomic_eval(icore, av);
  Int rr = r;
  mpz_gcd(g.get_mpz_t(), rr.get_mpz_t(), phicore.get_mpz_t());
  Int q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), phi.get_mpz_t(), g.get_mpz_t());
  if (rem != 0) throw std::logic_error("greatest_primitive_divisor: inexact division");
  return q;
}

FactoredInteger greatest_primitive_divisor(unsigned i, const SignedBase& a) {
  return FactoredInteger::of(greatest_primitive_divisor_value(i, a));
}

std::vector<Int> primitive_prime_divisors(unsigned i, const SignedBase& a) {
  Int k = greatest_primitive_divisor_value(i, a);
  if (k == 1) return {};
  auto f = factorize(k);
  std::vector<Int> out;
  out.reserve(f.size());
  for (auto& [p, e] : f) out.push_back(p);
  return out;
}

bool zsigmondy_exception(const Int& a_value, unsigned i) {
  static const std::pair<long, unsigned> exc[] = {
      {2, 1}, {2, 6}, {-2, 2}, {-2, 3}, {3, 1}, {-3, 2}};
  for (auto& [a, j] : exc)
    if (a_value == a && i == j) return true;
  return false;
}

long eta(long k) {
  if (k < 1) throw std::domain_error("eta: k must be positive");
  return k % 2 ? k : k / 2;
}

long nu(long k) {
  if (k < 1) throw std::domain_error("nu: k must be positive");
  if (k % 4 == 0) return k;
  if (k % 2 == 0) return k / 2;
  return 2 * k;
}

long nu_eps(long k, Sign eps) { return eps == Sign::Plus ? k : nu(k); }

FactoredInteger lifted_r_part(Sign eps, const Int& q, unsigned m, const Int& r) {
  if (q <= 1 || m == 0) throw std::domain_error("lifted_r_part: need q > 1, m > 0");
  Int base = sign_unit(eps) * q;
  Int b1 = base - 1;
  bool hyp_odd = r != 2 && is_probable_prime(r) && mpz_divisible_p(b1.get_mpz_t(), r.get_mpz_t());
  bool hyp_two = r == 2 && mpz_divisible_ui_p(b1.get_mpz_t(), 4);
  if (!hyp_odd && !hyp_two)
    throw std::domain_error("lifted_r_part: hypothesis on r and eps*q - 1 violated");

  Int closed = r_part(Int(m), r) * r_part(b1, r);
  Int direct;
  mpz_pow_ui(direct.get_mpz_t(), base.get_mpz_t(), m);
  direct -= 1;
  if (r_part(direct, r) != closed)
    throw lemma_violation("lifted_r_part: closed form disagrees with direct computation");
  return FactoredInteger{closed, {{r, r_valuation(closed, r)}}};
}

long count_eta_interval(long a, long b) {
  if (!(b > a && a >= 1)) throw std::domain_error("count_eta_interval: need b > a >= 1");
  long count = 0;
  for (long i = 1; i <= 2 * b; ++i)
    if (b - a < eta(i) && eta(i) <= b) ++count;
  long closed = (b % 2 == 0) ? (3 * a) / 2 : (3 * a + 1) / 2;
  if (count != closed)
    throw lemma_violation("count_eta_interval: closed form disagrees with enumeration");
  return count;
}

long prime_in_interval(long n, IntervalMode mode) {
  if (n < 30) throw std::domain_error("prime_in_interval: n must be at least 30");
  if (mode == IntervalMode::EightNinths && (n == 35 || n == 36 || n == 37 || n == 53))
    throw std::domain_error("prime_in_interval: n is an excluded value for the 8/9 interval");
  // Open interval (c*n/d, n): smallest witness.
  long num = mode == IntervalMode::FiveSixths ? 5 : 8;
  long den = mode == IntervalMode::FiveSixths ? 6 : 9;
  for (long p = num * n / den + 1; p < n; ++p) {
    if (den * p <= num * n) continue;  // still at or below the open endpoint
    Int pp = p;
    if (is_probable_prime(pp)) return p;
  }
  throw lemma_violation("prime_in_interval: no prime found in interval");
}

}  // namespace gk
