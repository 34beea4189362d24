#pragma once

#include <variant>

#include "gk/spectra.hpp"

namespace gk {

// Partition of the in-scope groups by the behaviour of zeta: X classes have
// injective zeta, Y_i is characterized by t - i not lying in T.
enum class ClassLabel { X1, X2, Y1, Y2, Y3 };

const char* class_label_name(ClassLabel c);
ClassLabel classify(const GroupDescriptor& L);

// Table of admissible e(p,u) values per t(p,L) = l in {2,3,4}; an empty set
// eliminates the candidate outright.
std::set<int> k_candidates(int l, const GroupDescriptor& S);

// True when j violates the divisibility conclusion (a contradiction is
// established): nu_eps(k) | nu_eps(j) for linear/unitary S, j = k mod 2k for
// symplectic/orthogonal S.
bool congruence_obstruction(long j, long k, const GroupDescriptor& S);

// Precomputed exact data for one group.
struct GroupData {
  GroupDescriptor d;
  IndexGraph g;
  ZetaTable zt;
  Table1Row t1;
  int t_p = 0;  // exact anchored independence number at the characteristic
};
GroupData make_group_data(const GroupDescriptor& d);

struct RsnotprsWitness {
  int i = 0;
  std::optional<int> i_prime;
};
// Witness indices of the lemma giving, for j in M n N, a large class i
// adjacent to j (and i' when the extra hypothesis holds) with every
// graph-checkable claim re-verified.
RsnotprsWitness rsnotprs_witnesses(int j, const GroupData& L);

struct NarrativeFact {
  std::string fact;
  std::string source;
  bool assumed = false;  // proof-imported premise, not re-checkable here
};

struct ContradictionReport {
  GroupDescriptor L, S;
  std::string pattern;  // LnotinX, SisnotX1, tpLneq3, tplneq2, tplneq4,
                        // class-mismatch, t-mismatch
  std::map<std::string, std::string> witnesses;
  std::vector<NarrativeFact> narrative;
  bool verified = false;
};

struct NotEliminated {
  std::string reason;
};

using EliminationOutcome = std::variant<ContradictionReport, NotEliminated>;

EliminationOutcome eliminate(const GroupData& L, const GroupData& S);
EliminationOutcome eliminate(const GroupDescriptor& L, const GroupDescriptor& S);

// Cross-characteristic classical candidates S with t(S) = t(L):
// all four families, both signs, v in {2,3,5,7} \ {p}, u = v^g <= q^2.
std::vector<GroupDescriptor> scan_candidates(const GroupDescriptor& L);

}  // namespace gk
