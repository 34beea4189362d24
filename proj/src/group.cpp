#include "gk/group.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace gk {

namespace {

std::pair<long, int> prime_power_split(long q) {
  if (q < 2) throw std::domain_error("descriptor: q must be a prime power > 1");
  long p = 0, m = q;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {q, 1};
  int f = 0;
  while (m % p == 0) {
    m /= p;
    ++f;
  }
  if (m != 1) throw std::domain_error("descriptor: q is not a prime power");
  return {p, f};
}

}  // namespace

GroupDescriptor GroupDescriptor::make(Family fam, Sign sign, int n, long q) {
  GroupDescriptor L;
  L.family = fam;
  L.sign = (fam == Family::Symplectic || fam == Family::OddOrthogonal) ? Sign::Plus : sign;
  L.n = n;
  L.q = q;
  auto [p, f] = prime_power_split(q);
  L.p = p;
  L.f = f;
  int floor = fam == Family::EvenOrthogonal ? 4 : 2;
  if (n < floor) throw std::domain_error("descriptor: rank below simplicity floor");
  return L;
}

std::string GroupDescriptor::name() const {
  std::ostringstream os;
  switch (family) {
    case Family::LinearUnitary:
      os << 'L' << n << sign_char(sign) << "(q=" << q << ')';
      break;
    case Family::Symplectic:
      os << "S(n=" << n << ",q=" << q << ')';
      break;
    case Family::OddOrthogonal:
      os << "O(n=" << n << ",q=" << q << ')';
      break;
    case Family::EvenOrthogonal:
      os << 'O' << sign_char(sign) << "(n=" << n << ",q=" << q << ')';
      break;
  }
  return os.str();
}

GroupDescriptor parse_descriptor(const std::string& text) {
  auto fail = [&](const std::string& why) -> GroupDescriptor {
    throw std::domain_error("cannot parse descriptor '" + text + "': " + why +
                            "; expected L45+(q=9), S(n=28,q=3), O-(n=30,q=4) or O(n=28,q=5)");
  };
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size()) return fail("empty");
  char fam = text[pos++];
  Family family;
  if (fam == 'L' || fam == 'l')
    family = Family::LinearUnitary;
  else if (fam == 'S' || fam == 's')
    family = Family::Symplectic;
  else if (fam == 'O' || fam == 'o')
    family = Family::EvenOrthogonal;  // refined below: plain O(...) is odd orthogonal
  else
    return fail("unknown family letter");

  long inline_n = -1;
  if (family == Family::LinearUnitary) {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) return fail("L needs a dimension, e.g. L45+");
    inline_n = std::stol(text.substr(start, pos - start));
  }
  Sign sign = Sign::Plus;
  bool saw_sign = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    sign = text[pos] == '+' ? Sign::Plus : Sign::Minus;
    saw_sign = true;
    ++pos;
  }
  if (fam == 'O' || fam == 'o') {
    if (!saw_sign) family = Family::OddOrthogonal;
  }
  skip_ws();
  if (pos >= text.size() || text[pos] != '(') return fail("missing '('");
  ++pos;
  long n = inline_n, q = -1;
  while (true) {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string key = text.substr(start, pos - start);
    skip_ws();
    if (pos >= text.size() || text[pos] != '=') return fail("missing '=' after key");
    ++pos;
    skip_ws();
    start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) return fail("missing value for key " + key);
    long val = std::stol(text.substr(start, pos - start));
    if (key == "n")
      n = val;
    else if (key == "q" || key == "u")
      q = val;
    else
      return fail("unknown key " + key);
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (pos >= text.size() || text[pos] != ')') return fail("missing ')'");
  ++pos;
  skip_ws();
  if (pos != text.size()) return fail("trailing characters");
  if (n <= 0) return fail("missing n");
  if (q <= 1) return fail("missing q");
  return GroupDescriptor::make(family, sign, int(n), q);
}

bool in_theorem_range(const GroupDescriptor& L) {
  switch (L.family) {
    case Family::LinearUnitary: return L.n >= 45;
    case Family::Symplectic:
    case Family::OddOrthogonal: return L.n >= 28;
    case Family::EvenOrthogonal:
      return L.sign == Sign::Plus ? L.n >= 31 : L.n >= 30;
  }
  return false;
}

namespace {

Int q_pow(long q, unsigned e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), e);
  return r;
}

}  // namespace

Int order_value(const GroupDescriptor& L) {
  long q = L.q;
  int n = L.n;
  Int order;
  switch (L.family) {
    case Family::LinearUnitary: {
      int e = sign_unit(L.sign);
      order = q_pow(q, unsigned(n) * (n - 1) / 2);
      for (int i = 2; i <= n; ++i) {
        Int term = q_pow(q, i) - (i % 2 == 0 ? 1 : e);
        order *= term;
      }
      Int d;
      Int qe = Int(q) - e;
      mpz_gcd(d.get_mpz_t(), Int(n).get_mpz_t(), qe.get_mpz_t());
      order /= d;
      break;
    }
    case Family::Symplectic:
    case Family::OddOrthogonal: {
      order = q_pow(q, unsigned(n) * n);
      for (int i = 1; i <= n; ++i) order *= q_pow(q, 2 * i) - 1;
      order /= (q % 2 == 0 ? 1 : 2);
      break;
    }
    case Family::EvenOrthogonal: {
      int e = sign_unit(L.sign);
      order = q_pow(q, unsigned(n) * (n - 1));
      Int qn = q_pow(q, n) - e;
      order *= qn;
      for (int i = 1; i <= n - 1; ++i) order *= q_pow(q, 2 * i) - 1;
      Int d;
      Int four = 4;
      mpz_gcd(d.get_mpz_t(), four.get_mpz_t(), qn.get_mpz_t());
      order /= d;
      break;
    }
  }
  return order;
}

FactoredInteger factored_q_power_pm1(long q, unsigned i, Sign sign) {
  // Split along cyclotomic values and cache their factorizations.
  static std::map<std::pair<long, unsigned>, std::map<Int, unsigned>> cache;
  static std::mutex mu;
  auto phi_factors = [&](unsigned d) {
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = cache.find({q, d});
      if (it != cache.end()) return it->second;
    }
    auto f = factorize(cyclotomic_eval(d, Int(q)));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_pair(q, d), std::move(f)).first->second;
  };

  FactoredInteger out = FactoredInteger::unit();
  Int target;
  if (sign == Sign::Plus) {
    target = q_pow(q, i) - 1;
    for (unsigned d : divisors_of(i))
      for (auto& [p, e] : phi_factors(d)) out.factors[p] += e;
  } else {
    target = q_pow(q, i) + 1;
    for (unsigned d : divisors_of(2 * i))
      if (i % d != 0)
        for (auto& [p, e] : phi_factors(d)) out.factors[p] += e;
  }
  out.value = target;
  Int prod = 1;
  for (auto& [p, e] : out.factors) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    prod *= pe;
  }
  if (prod != target) throw std::logic_error("factored_q_power_pm1: split mismatch");
  return out;
}

FactoredInteger order_of(const GroupDescriptor& L) {
  long q = L.q;
  int n = L.n;
  FactoredInteger order = FactoredInteger::unit();
  auto mul_qpart = [&](unsigned e) {
    Int pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(L.p), e * unsigned(L.f));
    order.value *= pe;
    order.factors[Int(L.p)] += e * unsigned(L.f);
  };
  switch (L.family) {
    case Family::LinearUnitary: {
      mul_qpart(unsigned(n) * (n - 1) / 2);
      for (int i = 2; i <= n; ++i) {
        Sign s = (i % 2 == 0 || L.sign == Sign::Plus) ? Sign::Plus : Sign::Minus;
        order = order.times(factored_q_power_pm1(q, unsigned(i), s));
      }
      Int d, qe = Int(q) - sign_unit(L.sign);
      mpz_gcd(d.get_mpz_t(), Int(n).get_mpz_t(), qe.get_mpz_t());
      order = order.divide_exact(FactoredInteger::of(d));
      break;
    }
    case Family::Symplectic:
    case Family::OddOrthogonal: {
      mul_qpart(unsigned(n) * n);
      for (int i = 1; i <= n; ++i)
        order = order.times(factored_q_power_pm1(q, unsigned(2 * i), Sign::Plus));
      if (q % 2) order = order.divide_exact(FactoredInteger::of(2));
      break;
    }
    case Family::EvenOrthogonal: {
      mul_qpart(unsigned(n) * (n - 1));
      order = order.times(factored_q_power_pm1(q, unsigned(n), L.sign));
      for (int i = 1; i <= n - 1; ++i)
        order = order.times(factored_q_power_pm1(q, unsigned(2 * i), Sign::Plus));
      Int d, qn = q_pow(q, n) - sign_unit(L.sign), four = 4;
      mpz_gcd(d.get_mpz_t(), four.get_mpz_t(), qn.get_mpz_t());
      order = order.divide_exact(FactoredInteger::of(d));
      break;
    }
  }
  if (order.value != order_value(L)) throw std::logic_error("order_of: value mismatch");
  return order;
}

int dim_of(const GroupDescriptor& L) {
  switch (L.family) {
    case Family::LinearUnitary: return L.n;
    case Family::Symplectic:
    case Family::EvenOrthogonal: return 2 * L.n;
    case Family::OddOrthogonal: return 2 * L.n + 1;
  }
  return 0;
}

int prk_of(const GroupDescriptor& L) { return L.n; }

std::vector<Int> delta_of(const GroupDescriptor& L) {
  if (L.linear_unitary()) {
    Int v = sign_unit(L.sign) * Int(L.q) - 1;
    std::vector<Int> out;
    for (auto& [p, e] : factorize(v)) out.push_back(p);
    return out;
  }
  if (L.q % 2) return {Int(2)};
  return {};
}

long phi_of_index(long i, const GroupDescriptor& L) {
  if (i < 1) throw std::domain_error("phi_of_index: i must be positive");
  return L.linear_unitary() ? nu_eps(i, L.sign) : eta(i);
}

IndexClass index_of_phi(long phi, bool e_even, const GroupDescriptor& L) {
  if (phi < 1) throw std::domain_error("index_of_phi: phi must be positive");
  if (L.linear_unitary()) {
    long i = nu_eps(phi, L.sign);
    if ((i % 2 == 0) != e_even)
      throw std::domain_error("index_of_phi: parity data inconsistent with phi");
    return {i, phi};
  }
  if (e_even) return {2 * phi, phi};
  if (phi % 2 == 0)
    throw std::domain_error("index_of_phi: no odd index has even eta");
  return {phi, phi};
}

bool is_valid_index(long i, const GroupDescriptor& L) {
  if (i < 1) return false;
  switch (L.family) {
    case Family::LinearUnitary: return nu_eps(i, L.sign) <= L.n;
    case Family::Symplectic:
    case Family::OddOrthogonal: return eta(i) <= L.n;
    case Family::EvenOrthogonal:
      if (i == (L.sign == Sign::Plus ? L.n : 2 * L.n)) return true;
      return eta(i) <= L.n - 1;
  }
  return false;
}

std::set<int> valid_indices(const GroupDescriptor& L) {
  std::set<int> out;
  for (int i = 1; i <= 2 * L.n; ++i)
    if (is_valid_index(i, L)) out.insert(i);
  return out;
}

int max_root_height(const GroupDescriptor& L) {
  switch (L.family) {
    case Family::LinearUnitary: return L.n - 1;
    case Family::Symplectic:
    case Family::OddOrthogonal: return 2 * L.n - 1;
    case Family::EvenOrthogonal: return 2 * L.n - 3;
  }
  return 0;
}

Int p_exponent(const GroupDescriptor& L) {
  Int pe = 1;
  int h = max_root_height(L);
  while (pe <= h) pe *= L.p;
  return pe;
}

}  // namespace gk
