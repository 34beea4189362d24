#pragma once

#include "gk/graph.hpp"

namespace gk {

// A witness that a product of greatest primitive divisors lies in the
// spectrum: torus factors q^rank -+ 1 covering every index class, with total
// rank within the group's budget.
struct CoverPart {
  int rank = 0;
  bool minus = false;           // factor q^rank + 1 (always false for LU parts)
  int representative = 0;       // member of maximal phi
  std::vector<int> members;
};

struct IndexCover {
  GroupDescriptor group;
  std::vector<CoverPart> parts;
  int budget_used = 0;
};

// Existence of a cover witnessing k_{i_1}(q)...k_{i_l}(q) in omega(L).
// Indices pairwise distinct, each valid, each > 2.  For l = 2 the answer is
// asserted equal to the adjacency predicate.
std::optional<IndexCover> semisimple_member(const std::vector<int>& indices,
                                            const GroupDescriptor& L);

// Same search, additionally accepting classes 1 and 2 (used by the
// eliminator to carry the characteristic p with e(p,u) <= 2 through covers).
std::optional<IndexCover> semisimple_member_small_ok(const std::vector<int>& indices,
                                                     const GroupDescriptor& L);

// Cyclic Hall subgroup of order k_i(q): present iff n/2 < phi(i, L) <= n.
bool has_cyclic_hall(int i, const GroupDescriptor& L);

// A spectral element of witnessed magnitude (Lemma on big elements of
// omega(L)): k >= q^{4t/3} for linear/unitary, k >= q^{10t/9} otherwise.
struct BigElement {
  Int value;
  int witness_j = 0;            // prime witness, or 32 in the power-of-two fallback
  bool power_of_two_fallback = false;
};
BigElement big_spectral_element(const GroupDescriptor& L);

// Upper bound q^{m+1}/(q-1) (m the untwisted Lie rank) on omega(L), floor'd;
// asserts it is at most q^{2 t(L)}.
Int max_spectral_bound(const GroupDescriptor& L);

}  // namespace gk
