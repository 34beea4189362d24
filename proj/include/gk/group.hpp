#pragma once

#include <set>
#include <string>

#include "gk/arith.hpp"

namespace gk {

enum class Family { LinearUnitary, Symplectic, OddOrthogonal, EvenOrthogonal };

// A finite simple classical group: family, rank n (= prk: dimension for
// linear/unitary, Lie rank otherwise), field size q = p^f, sign eps.
struct GroupDescriptor {
  Family family = Family::LinearUnitary;
  Sign sign = Sign::Plus;  // meaningful for LinearUnitary / EvenOrthogonal
  int n = 0;
  long q = 0;
  long p = 0;
  int f = 0;

  static GroupDescriptor make(Family fam, Sign sign, int n, long q);

  bool linear_unitary() const { return family == Family::LinearUnitary; }
  bool even_orthogonal() const { return family == Family::EvenOrthogonal; }
  // Symplectic and odd orthogonal share every index-level invariant.
  bool symplectic_like() const {
    return family == Family::Symplectic || family == Family::OddOrthogonal;
  }
  std::string name() const;

  auto key() const { return std::tuple(family, sign, n, q); }
  bool operator==(const GroupDescriptor& o) const { return key() == o.key(); }
  bool operator<(const GroupDescriptor& o) const { return key() < o.key(); }
};

// Descriptor text syntax: L45+(q=9), S(n=28,q=3), O-(n=30,q=4), O(n=28,q=5).
// Field size may be given as q= or u=.
GroupDescriptor parse_descriptor(const std::string& text);

// Theorem-range floor (n >= 45 / 28 / 31 / 30); soft flag, never an error.
bool in_theorem_range(const GroupDescriptor& L);

Int order_value(const GroupDescriptor& L);
FactoredInteger order_of(const GroupDescriptor& L);

int dim_of(const GroupDescriptor& L);
int prk_of(const GroupDescriptor& L);

std::vector<Int> delta_of(const GroupDescriptor& L);

// phi(r, L) as a function of the index class i = e(r, q).
long phi_of_index(long i, const GroupDescriptor& L);

struct IndexClass {
  long i;
  long phi;
};

// Inverse of phi_of_index; for symplectic/orthogonal the parity of e(r,q)
// disambiguates the two eta-preimages.
IndexClass index_of_phi(long phi, bool e_even, const GroupDescriptor& L);

// All i such that some primitive prime divisor r_i(q) divides |L|.
std::set<int> valid_indices(const GroupDescriptor& L);
bool is_valid_index(long i, const GroupDescriptor& L);

// q^i - 1 (sign +) resp. q^i + 1 (sign -) as a factored integer, split along
// cyclotomic values so that large cofactors stay factorable.
FactoredInteger factored_q_power_pm1(long q, unsigned i, Sign sign);

// Exponent of a Sylow p-subgroup: least power of p exceeding the maximal
// root height h(L).
Int p_exponent(const GroupDescriptor& L);
int max_root_height(const GroupDescriptor& L);

}  // namespace gk
