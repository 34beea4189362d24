#pragma once

#include <bitset>
#include <map>
#include <optional>
#include <set>

#include "gk/group.hpp"

namespace gk {

// The index-level prime graph: vertices are index classes i > 2 whose
// primitive-divisor set R_i(q) is nonempty, plus the defining characteristic.
struct IndexGraph {
  GroupDescriptor group;
  std::vector<int> verts;        // index values, sorted; char vertex is id = verts.size()
  std::vector<std::bitset<256>> adj;  // adjacency (rs in omega), char included
  std::map<int, int> id_of;

  int char_id() const { return int(verts.size()); }
  int vertex_count() const { return int(verts.size()) + 1; }
  bool has_index(int i) const { return id_of.count(i) != 0; }
};

IndexGraph build_index_graph(const GroupDescriptor& L);

// Index-level adjacency for classes i != j, both > 2, both valid, non-char.
bool pair_adjacent(int i, int j, const GroupDescriptor& L);
bool nonadjacent(int i, int j, const GroupDescriptor& L);

// Membership of i in J(p, L) (Table 2): true iff r_i(q) is nonadjacent to p.
bool char_nonadjacent(int i, const GroupDescriptor& L);

// One-sided J-set of the section-7 proofs (J3 u J1 \ J2), defined for
// arbitrary vertices; quoted displays hold on M u N where the proofs use
// them.  Used by the zeta verification as a cross-check of the predicate.
bool one_sided_nonadjacent(int i, int j, const GroupDescriptor& L);

struct CocliqueReport {
  std::vector<int> indices;  // index values; characteristic reported as 0
  int size = 0;
  bool includes_char = false;
  enum class Source { TableFormula, ExactSearch } source = Source::ExactSearch;
};

inline constexpr int kCharVertex = 0;  // anchor value naming the characteristic

// Maximum coclique, optionally through a fixed vertex (kCharVertex anchors
// at the characteristic).  Exact branch-and-bound.
CocliqueReport max_coclique_exact(const IndexGraph& g,
                                  std::optional<int> anchor = std::nullopt);

// All maximum (anchored) cocliques: size, intersection and union of their
// index sets (anchor excluded from both sets).
struct MaxCocliqueSets {
  int size = 0;
  long count = 0;
  std::set<int> common;
  std::set<int> united;
};
MaxCocliqueSets enumerate_max_cocliques(const IndexGraph& g,
                                        std::optional<int> anchor = std::nullopt);

// Closed forms transcribed from Tables 1-3.
struct Table1Row {
  int t;
  std::set<int> E;
  std::set<int> JmE;
};
Table1Row table1_formulas(const GroupDescriptor& L);  // n >= 13

struct Table2Row {
  int t_p;
  std::set<int> J_p;
};
Table2Row table2_formulas(const GroupDescriptor& L);

struct Table3Row {
  int t_r;
  std::set<int> J_r;
};
// Row for e = e(r,q); std::nullopt when t(r,L) > 4 under the given
// congruences.  Rows conditioned on a specific prime need r.
std::optional<Table3Row> table3_row(const GroupDescriptor& L, int e,
                                    const std::optional<Int>& r = std::nullopt);

// Section-7 invariants, computed exactly from anchored searches.
struct ZetaTable {
  GroupDescriptor group;
  int t = 0;
  std::map<int, int> zeta;  // anchored independence number t(r_i, L), all vertices
  std::set<int> M, N;
  std::set<int> T;          // zeta(M n N)

  bool in_MN(int i) const { return M.count(i) && N.count(i); }
  std::vector<int> preimages_in_N(int value) const;
};
ZetaTable zeta_table(const IndexGraph& g);

// Closed-form zeta of Lemmas on M(L) (proof-side case split for O-).
int closed_zeta(const GroupDescriptor& L, int i);

// Large = lies in some maximum coclique; decided by exact anchored search,
// with the phi >= n/2 sufficient and phi >= n/2 - 1 necessary bounds asserted.
bool classify_large(int i, const IndexGraph& g, const ZetaTable& zt);

}  // namespace gk
