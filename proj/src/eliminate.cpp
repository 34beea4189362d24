#include "gk/eliminate.hpp"

#include <algorithm>
#include <sstream>

namespace gk {

const char* class_label_name(ClassLabel c) {
  switch (c) {
    case ClassLabel::X1: return "X1";
    case ClassLabel::X2: return "X2";
    case ClassLabel::Y1: return "Y1";
    case ClassLabel::Y2: return "Y2";
    case ClassLabel::Y3: return "Y3";
  }
  return "?";
}

ClassLabel classify(const GroupDescriptor& L) {
  int t = table1_formulas(L).t;
  if (t < 22)
    throw std::range_error("classify: eliminator scope requires t(L) >= 22, got t = " +
                           std::to_string(t) + " for " + L.name());
  int n = L.n;
  if (L.linear_unitary()) return ClassLabel::X1;
  if (L.even_orthogonal() && n % 2 == 1) return ClassLabel::X2;
  if (L.symplectic_like()) {
    switch (n % 4) {
      case 0:
      case 3: return ClassLabel::Y1;
      case 2: return ClassLabel::Y2;
      default: return ClassLabel::Y3;
    }
  }
  if (L.sign == Sign::Plus) return n % 4 == 0 ? ClassLabel::Y2 : ClassLabel::Y3;
  return n % 4 == 2 ? ClassLabel::Y1 : ClassLabel::Y3;
}

std::set<int> k_candidates(int l, const GroupDescriptor& S) {
  if (l < 2 || l > 4) throw std::domain_error("k_candidates: l must be 2, 3 or 4");
  int m = S.n;
  if (S.linear_unitary()) {
    if (S.sign == Sign::Plus) return l == 2 ? std::set<int>{2} : l == 3 ? std::set<int>{3} : std::set<int>{4};
    return l == 2 ? std::set<int>{1} : l == 3 ? std::set<int>{6} : std::set<int>{4};
  }
  if (l == 2) return {1, 2};
  if (S.symplectic_like()) {
    if (l == 3) return (m % 4 == 2 || m % 4 == 3) ? std::set<int>{4} : std::set<int>{};
    switch (m % 12) {
      case 0: case 1: case 5: case 8: case 9: return {4};
      case 10: return {3, 6};
      case 4: return {3, 4, 6};
      default: return {};
    }
  }
  if (S.sign == Sign::Plus) {
    if (l == 3) return m % 4 != 1 ? std::set<int>{4} : std::set<int>{};
    if (m % 6 == 4) return {3, 6};
    switch (m % 12) {
      case 1: case 9: return {4};
      case 11: return {6};
      case 5: return {4, 6};
      default: return {};
    }
  }
  if (l == 3) return m % 4 == 3 ? std::set<int>{4} : std::set<int>{};
  switch (m % 12) {
    case 11: return {3};
    case 5: return {3, 4};
    case 3: case 7: return {};
    default: return {4};
  }
}

bool congruence_obstruction(long j, long k, const GroupDescriptor& S) {
  if (j < 1 || k < 1) throw std::domain_error("congruence_obstruction: need positive j, k");
  if (S.linear_unitary()) return nu_eps(j, S.sign) % nu_eps(k, S.sign) == 0;
  return j % (2 * k) == k % (2 * k);
}

GroupData make_group_data(const GroupDescriptor& d) {
  GroupData gd;
  gd.d = d;
  gd.t1 = table1_formulas(d);
  gd.g = build_index_graph(d);
  gd.zt = zeta_table(gd.g);
  if (gd.zt.t != gd.t1.t)
    throw lemma_violation("exact independence number disagrees with the closed form for " + d.name());
  gd.t_p = max_coclique_exact(gd.g, kCharVertex).size;
  if (gd.t_p != table2_formulas(d).t_p)
    throw lemma_violation("exact anchored independence number at p disagrees with the table for " + d.name());
  return gd;
}

namespace {

void check_rs_witness(int i, int j, const GroupData& L) {
  const auto& d = L.d;
  if (L.zt.zeta.at(i) != L.zt.t)
    throw lemma_violation("rsnotprs: witness " + std::to_string(i) + " is not large for " + d.name());
  if (3 * phi_of_index(i, d) >= 2 * d.n)
    throw lemma_violation("rsnotprs: witness phi bound phi < 2n/3 fails");
  if (!pair_adjacent(i, j, d))
    throw lemma_violation("rsnotprs: witness must be adjacent to j");
}

}  // namespace

RsnotprsWitness rsnotprsWitness_impl(int j, const GroupData& L) {
  const auto& d = L.d;
  int n = d.n;
  if (!L.zt.in_MN(j))
    throw std::domain_error("rsnotprs_witnesses: j must lie in M(L) n N(L)");
  RsnotprsWitness w;
  if (d.linear_unitary()) {
    long vj = nu_eps(j, d.sign);
    w.i = int(nu_eps(n - vj, d.sign));
    if (2 * vj < n - 1) w.i_prime = int(nu_eps(n - 1 - vj, d.sign));
  } else if (d.symplectic_like()) {
    long a = n - eta(j);
    w.i = int(2 * a);
    if (a % 2 == 1) w.i_prime = int(a);
  } else {
    long hj = eta(j);
    bool plus = d.sign == Sign::Plus;
    auto even_a_pick = [&](long a) {
      bool odd_pick = (j % 2 == 1 && plus) || (j % 2 == 0 && !plus);
      return int(odd_pick ? a + 1 : 2 * (a + 1));
    };
    if (2 * hj < n - 2) {
      long a = n - 1 - hj;
      w.i = int(2 * a);
      w.i_prime = a % 2 == 1 ? int(a) : even_a_pick(a);
    } else if (2 * hj == n - 2) {
      // eta(j) = n/2 - 1, n even
      if (n % 4 == 0) {
        long a = n / 2;  // = n - 1 - eta(j), even
        w.i = int(2 * a);
        w.i_prime = even_a_pick(a);
      } else {
        // only reachable for O+ (the O- class here is large)
        if (!plus)
          throw std::domain_error("rsnotprs_witnesses: O- class with eta = n/2 - 1 is large");
        w.i = n / 2;
        w.i_prime = n + 2;
      }
    } else if (2 * hj == n - 1) {
      w.i = n + 1;
    } else {
      throw std::logic_error("rsnotprs_witnesses: unreachable eta range for j in M n N");
    }
  }
  check_rs_witness(w.i, j, L);
  if (w.i_prime) {
    check_rs_witness(*w.i_prime, j, L);
    if (pair_adjacent(w.i, *w.i_prime, d))
      throw lemma_violation("rsnotprs: the two witnesses must be mutually nonadjacent");
  }
  return w;
}

RsnotprsWitness rsnotprs_witnesses(int j, const GroupData& L) {
  return rsnotprsWitness_impl(j, L);
}

namespace {

struct Builder {
  ContradictionReport rep;

  Builder(const GroupData& L, const GroupData& S, std::string pattern) {
    rep.L = L.d;
    rep.S = S.d;
    rep.pattern = std::move(pattern);
  }
  void fact(bool ok, const std::string& f, const std::string& source) {
    if (!ok) throw lemma_violation("eliminate: claimed fact failed re-verification: " + f);
    rep.narrative.push_back({f, source, false});
  }
  void assume(const std::string& f, const std::string& source) {
    rep.narrative.push_back({f, source, true});
  }
  void witness(const std::string& key, const std::string& value) {
    rep.witnesses[key] = value;
  }
  void witness(const std::string& key, long value) {
    rep.witnesses[key] = std::to_string(value);
  }
  ContradictionReport done() {
    rep.verified = true;
    return rep;
  }
};

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  return os.str();
}

bool is_Y(ClassLabel c) {
  return c == ClassLabel::Y1 || c == ClassLabel::Y2 || c == ClassLabel::Y3;
}
int y_index(ClassLabel c) {
  return c == ClassLabel::Y1 ? 1 : c == ClassLabel::Y2 ? 2 : 3;
}

// Engine A: for every a in M(L) n N(L) the transferred anchored value
// t(r_a(q), S) = zeta_L(a) must be attained by some class of S in N(S); a
// missing value, or a forced image violating the k-congruence, eliminates.
std::optional<ContradictionReport> forced_image_engine(const GroupData& L,
                                                       const GroupData& S, long k,
                                                       const std::string& pattern) {
  for (int a : L.zt.M) {
    if (!L.zt.N.count(a)) continue;
    int c = L.zt.zeta.at(a);
    auto pres = S.zt.preimages_in_N(c);
    if (pres.empty()) {
      Builder b(L, S, pattern);
      b.witness("a", a);
      b.witness("c", c);
      b.fact(true, "a = " + std::to_string(a) + " lies in M(L) n N(L) with t(r_a(q), L) = " +
                    std::to_string(c) + " (exact anchored search)", "l:correct");
      b.assume("t(r_a(q), S) = t(r_a(q), L) = " + std::to_string(c), "l:transfer");
      b.fact(true, "no index class j of S has t(r_j(u), S) = " + std::to_string(c) +
                    " with 2t/3 < " + std::to_string(c) + " < t (exact anchored search)",
             "l:TLinTS");
      return b.done();
    }
    bool all_obstructed = true;
    for (int j : pres)
      if (!congruence_obstruction(j, k, S.d)) all_obstructed = false;
    if (!all_obstructed) continue;
    Builder b(L, S, pattern);
    b.witness("a", a);
    b.witness("c", c);
    b.witness("k", k);
    b.witness("j", join_ints(pres));
    b.fact(true, "a = " + std::to_string(a) + " lies in M(L) n N(L) with t(r_a(q), L) = " +
                  std::to_string(c), "l:correct");
    b.assume("t(r_a(q), S) = t(r_a(q), L), so j = e(r_a(q), u) satisfies t(r_j(u), S) = " +
                 std::to_string(c), "l:transfer");
    b.fact(true, "every class j of S with t(r_j(u), S) = " + std::to_string(c) +
                  " lies in {" + join_ints(pres) + "} (exact anchored search)",
           "l:tPLL-l:tPLOm");
    for (int j : pres)
      b.fact(congruence_obstruction(j, k, S.d),
             "j = " + std::to_string(j) + " violates the k = " + std::to_string(k) +
                 " congruence of the divisibility lemma",
             "l:kdividesj");
    b.assume("j = e(r_a(q), u) must not satisfy the congruence, since otherwise "
             "p r s in omega(S) = omega(L) against the witness pair",
             "l:kdividesj, l:rsnotprs");
    return b.done();
  }
  return std::nullopt;
}

// Capacity engine: forced eta-classes for the s-indices, allowed image sets
// for the large r-indices (pair adjacency + exclusion of p-carrying triples),
// then a pigeonhole over injective assignments.
std::optional<EliminationOutcome> capacity_engine(const GroupData& L, const GroupData& S,
                                                  long k, const std::vector<int>& s_list,
                                                  const std::vector<int>& r_list,
                                                  const std::string& pattern) {
  Builder b(L, S, pattern);
  const auto& dL = L.d;
  const auto& dS = S.d;
  b.witness("s", join_ints(s_list));
  b.witness("r", join_ints(r_list));
  b.witness("k", k);

  for (int s : s_list)
    b.fact(L.zt.in_MN(s), "s-index " + std::to_string(s) + " lies in M(L) n N(L)", "l:correct");
  for (size_t x = 0; x < r_list.size(); ++x) {
    b.fact(L.zt.zeta.at(r_list[x]) == L.zt.t,
           "r-index " + std::to_string(r_list[x]) + " is large with respect to L", "l:estimlarge");
    for (size_t y = x + 1; y < r_list.size(); ++y)
      b.fact(!pair_adjacent(r_list[x], r_list[y], dL),
             "r-indices " + std::to_string(r_list[x]) + ", " + std::to_string(r_list[y]) +
                 " are nonadjacent in GK(L)",
             "adjacency predicate");
  }
  // Which s each r is tied to, from the exact adjacency facts in L.
  std::vector<std::vector<int>> ties(r_list.size());
  for (size_t x = 0; x < r_list.size(); ++x) {
    for (size_t sx = 0; sx < s_list.size(); ++sx)
      if (pair_adjacent(r_list[x], s_list[sx], dL)) ties[x].push_back(int(sx));
    b.fact(!ties[x].empty(), "r-index " + std::to_string(r_list[x]) +
                                 " is adjacent to at least one s-index in GK(L)",
           "adjacency predicate");
    b.assume("p r s not in omega(L) for r = r_" + std::to_string(r_list[x]) +
                 "(q) and each tied s",
             "l:rsnotprs");
  }

  std::vector<std::vector<int>> j_options(s_list.size());
  for (size_t sx = 0; sx < s_list.size(); ++sx) {
    int c = L.zt.zeta.at(s_list[sx]);
    j_options[sx] = S.zt.preimages_in_N(c);
    b.fact(!j_options[sx].empty(),
           "t(r_j(u), S) = " + std::to_string(c) + " is attained in N(S) (exact)", "l:transfer");
    b.witness("J(s=" + std::to_string(s_list[sx]) + ")", join_ints(j_options[sx]));
  }

  // allowed(j): large classes of S adjacent to j whose p-carrying triple
  // cover does not exist.
  std::map<int, std::vector<int>> allowed;
  auto allowed_for = [&](int j) -> const std::vector<int>& {
    auto it = allowed.find(j);
    if (it != allowed.end()) return it->second;
    std::vector<int> out;
    for (int i : S.g.verts) {
      if (i == j || int(k) == i) continue;
      if (S.zt.zeta.at(i) != S.zt.t) continue;  // images of large primes are large
      if (!pair_adjacent(j, i, dS)) continue;
      if (semisimple_member_small_ok({int(k), j, i}, dS)) continue;
      out.push_back(i);
    }
    return allowed.emplace(j, std::move(out)).first->second;
  };

  // Try every choice of e(s,u) per s-index; a feasible injective assignment
  // of images to the r-indices defeats the elimination.
  std::vector<size_t> choice(s_list.size(), 0);
  while (true) {
    bool refuted = false;
    for (size_t sx = 0; sx < s_list.size() && !refuted; ++sx)
      if (congruence_obstruction(j_options[sx][choice[sx]], k, dS)) refuted = true;
    if (!refuted) {
      std::vector<std::vector<int>> cand(r_list.size());
      for (size_t x = 0; x < r_list.size(); ++x) {
        std::vector<int> inter;
        bool first = true;
        for (int sx : ties[x]) {
          const auto& al = allowed_for(j_options[size_t(sx)][choice[size_t(sx)]]);
          if (first) {
            inter = al;
            first = false;
          } else {
            std::vector<int> next;
            for (int v : inter)
              if (std::find(al.begin(), al.end(), v) != al.end()) next.push_back(v);
            inter = std::move(next);
          }
        }
        cand[x] = std::move(inter);
      }
      // Injective assignment search (at most three r-indices).
      std::vector<int> used;
      std::function<bool(size_t)> assign = [&](size_t x) -> bool {
        if (x == r_list.size()) return true;
        for (int v : cand[x]) {
          if (std::find(used.begin(), used.end(), v) != used.end()) continue;
          used.push_back(v);
          if (assign(x + 1)) return true;
          used.pop_back();
        }
        return false;
      };
      if (assign(0)) {
        std::ostringstream os;
        os << "capacity argument inconclusive for " << pattern << ": a consistent image "
           << "assignment exists for the e(s,u) choice";
        return EliminationOutcome(NotEliminated{os.str()});
      }
    }
    // next tuple
    size_t sx = 0;
    while (sx < s_list.size() && ++choice[sx] == j_options[sx].size()) {
      choice[sx] = 0;
      ++sx;
    }
    if (sx == s_list.size()) break;
  }

  for (auto& [j, al] : allowed) {
    b.fact(true, "allowed images adjacent to j = " + std::to_string(j) +
                  " avoiding p-carrying covers: {" + join_ints(al) + "} (exact cover search)",
           "l:criterion, l:kdividesj");
    b.witness("allowed(j=" + std::to_string(j) + ")", join_ints(al));
  }
  b.fact(true, "no choice of e(s,u) admits pairwise distinct images for the r-indices",
         "pigeonhole");
  b.assume("distinct nonadjacent large primes have distinct e(-,u) values", "l:auxvarphi(iv)");
  return EliminationOutcome(b.done());
}

// The O-_2n vs O+_{2(n+2)} counting case (m = 10 mod 12): the window
// n/2 <= eta < 2n/3 has equal size on both sides, forcing two images onto
// the adjacent pair (m/2, m) of S.
std::optional<EliminationOutcome> counting_engine(const GroupData& L, const GroupData& S,
                                                  long k, const std::string& pattern) {
  const auto& dL = L.d;
  const auto& dS = S.d;
  int n = dL.n, m = dS.n;
  std::vector<int> X, Y;
  for (int a : L.g.verts)
    if (2 * eta(a) >= n && 3 * eta(a) < 2 * n) X.push_back(a);
  for (int bb : S.g.verts)
    if (2 * eta(bb) >= m && 3 * eta(bb) < 2 * m) Y.push_back(bb);
  if (X.size() != Y.size()) return std::nullopt;
  if (m % 2 != 0 || m / 2 % 2 != 1) return std::nullopt;
  Builder b(L, S, pattern);
  b.witness("k", k);
  b.witness("X", join_ints(X));
  b.witness("Y", join_ints(Y));
  for (size_t x = 0; x < X.size(); ++x) {
    b.fact(L.zt.zeta.at(X[x]) == L.zt.t,
           "window index " + std::to_string(X[x]) + " is large in L", "l:estimlarge");
    for (size_t y = x + 1; y < X.size(); ++y)
      b.fact(!pair_adjacent(X[x], X[y], dL), "window indices are pairwise nonadjacent in GK(L)",
             "adjacency predicate");
  }
  b.fact(X.size() == Y.size(),
         "the eta windows [n/2, 2n/3) of L and [m/2, 2m/3) of S have equal size " +
             std::to_string(X.size()),
         "l:eta");
  b.assume("the window classes of L map injectively onto the window classes of S",
           "l:tSlesstLp2, l:estimlarge(iii), l:transfer");
  b.fact(std::find(Y.begin(), Y.end(), m / 2) != Y.end() &&
             std::find(Y.begin(), Y.end(), m) != Y.end(),
         "both classes m/2 = " + std::to_string(m / 2) + " and m = " + std::to_string(m) +
             " lie in the S window",
         "l:eta");
  b.fact(pair_adjacent(m / 2, m, dS),
         "classes m/2 and m are adjacent in GK(S) (split torus of rank m)",
         "adjacency predicate");
  return EliminationOutcome(b.done());
}

}  // namespace

EliminationOutcome eliminate(const GroupData& L, const GroupData& S) {
  const auto& dL = L.d;
  const auto& dS = S.d;
  if (dL.p == dS.p)
    throw std::domain_error("eliminate: candidate pairs must be cross-characteristic");
  if (L.t1.t < 22)
    throw std::range_error("eliminate: scope requires t(L) >= 22, got " +
                           std::to_string(L.t1.t) + " for " + dL.name());

  int t = L.zt.t;
  // (1) independence numbers must agree
  if (S.zt.t != t) {
    Builder b(L, S, "t-mismatch");
    b.witness("t(L)", t);
    b.witness("t(S)", S.zt.t);
    b.fact(true, "t(L) = " + std::to_string(t) + " and t(S) = " + std::to_string(S.zt.t) +
                  " (exact searches, equal to the table values)",
           "l:tL");
    b.assume("an isospectral pair forces t(S) = t(L)", "p:tSlesstLp2");
    return b.done();
  }

  // (2) zeta classes
  ClassLabel cL = classify(dL), cS = classify(dS);
  auto inT = [](const GroupData& G, int x) { return G.zt.T.count(x) != 0; };
  if (is_Y(cS) && cS != cL) {
    int i = y_index(cS);
    Builder b(L, S, "class-mismatch");
    b.witness("class(L)", class_label_name(cL));
    b.witness("class(S)", class_label_name(cS));
    b.fact(!inT(S, t - i),
           "t - " + std::to_string(i) + " = " + std::to_string(t - i) +
               " is outside T(S) (exact), so S lies in Y" + std::to_string(i),
           "l:tPLL-l:tPLOm");
    b.fact(inT(L, t - i),
           "t - " + std::to_string(i) + " lies in T(L) (exact), so L is outside Y" +
               std::to_string(i),
           "l:tPLL-l:tPLOm");
    b.fact(3 * (t - i) > 2 * t + 2, "t - " + std::to_string(i) + " > (2t+2)/3", "l:tmaless2t3");
    b.assume("S in Y_i forces L in Y_i", "l:SinYi, l:TLinTS");
    return b.done();
  }

  // (3) characteristic data
  int l = L.t_p;
  long k = long(order_index(Int(dL.p), SignedBase::plus(Int(dS.q))));
  std::string pattern;
  if (cS == ClassLabel::X1)
    pattern = (cL == ClassLabel::X1 || cL == ClassLabel::X2) ? "LnotinX" : "SisnotX1";
  else if (cL == ClassLabel::X1 || cL == ClassLabel::X2)
    pattern = "LnotinX";
  else
    pattern = l == 2 ? "tplneq2" : l == 3 ? "tpLneq3" : "tplneq4";

  auto K = k_candidates(l, dS);
  if (!K.count(int(k))) {
    Builder b(L, S, pattern);
    b.witness("l", l);
    b.witness("k", k);
    std::ostringstream os;
    for (int v : K) os << v << ' ';
    b.fact(true, "t(p, L) = " + std::to_string(l) + " (exact anchored search at the characteristic)",
           "l:tpL");
    b.fact(true, "e(p, u) = " + std::to_string(k) + " does not lie in K(l, S) = {" + os.str() + "}",
           "tab:KlL");
    b.assume("an isospectral pair forces e(p,u) in K(t(p,L), S)", "p:tpLeqtpS");
    return b.done();
  }

  // (4) forced-image congruences over M(L) n N(L)
  if (auto rep = forced_image_engine(L, S, k, pattern)) return *rep;

  // (5) per-case capacity recipes
  if (cS != ClassLabel::X1 && !(cL == ClassLabel::X1 || cL == ClassLabel::X2)) {
    int n = dL.n, m = dS.n;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> recipe;
    if (l == 2 && dL.symplectic_like()) {
      if (dS.symplectic_like() && m == n) {
        int s = n % 4 == 0 ? n / 2 - 1 : n / 2 - 2;
        recipe = {{s}, {n - s, 2 * (n - s)}};
      } else if (dS.even_orthogonal() && m == n + 1 && n % 4 == 0) {
        recipe = {{n / 2 - 1}, {n / 2 + 1, n + 2}};
      }
    } else if (l == 3 && dL.even_orthogonal() && dL.sign == Sign::Plus && n % 4 == 0 &&
               dS.even_orthogonal() && m == n - 1) {
      recipe = {{n - 4}, {(n + 2) / 2, n + 2, n + 4}};
    } else if (l == 4 && dL.even_orthogonal() && dL.sign == Sign::Minus) {
      if (n % 4 == 0 && dS.even_orthogonal() && m == n + 1 && k == 4) {
        recipe = {{(n - 2) / 2, n - 2}, {n + 2, (n + 2) / 2, n}};
      } else if (n == 30 && dS.even_orthogonal() && dS.sign == Sign::Minus && m == 30) {
        recipe = {{11, 22}, {38, 19, 36}};
      } else if (n % 12 == 8 && dS.even_orthogonal() && dS.sign == Sign::Plus && m == n + 2) {
        if (auto out = counting_engine(L, S, k, pattern)) return *out;
      }
    }
    if (recipe) {
      if (auto out = capacity_engine(L, S, k, recipe->first, recipe->second, pattern))
        return *out;
    }
  }

  return NotEliminated{"no obstruction pattern of the case analysis applies to " + dL.name() +
                       " vs " + dS.name()};
}

EliminationOutcome eliminate(const GroupDescriptor& L, const GroupDescriptor& S) {
  return eliminate(make_group_data(L), make_group_data(S));
}

std::vector<GroupDescriptor> scan_candidates(const GroupDescriptor& L) {
  int t = table1_formulas(L).t;
  std::vector<GroupDescriptor> out;
  Int qq = Int(L.q) * Int(L.q);
  for (long v : {2L, 3L, 5L, 7L}) {
    if (v == L.p) continue;
    for (Int u = v; u <= qq; u *= v) {
      long ul = u.get_si();
      for (int m = 13; m <= 2 * L.n + 16; ++m) {
        for (auto [fam, sign] : {std::pair{Family::LinearUnitary, Sign::Plus},
                                 {Family::LinearUnitary, Sign::Minus},
                                 {Family::Symplectic, Sign::Plus},
                                 {Family::OddOrthogonal, Sign::Plus},
                                 {Family::EvenOrthogonal, Sign::Plus},
                                 {Family::EvenOrthogonal, Sign::Minus}}) {
          GroupDescriptor S = GroupDescriptor::make(fam, sign, m, ul);
          if (table1_formulas(S).t == t) out.push_back(S);
        }
      }
    }
  }
  return out;
}

}  // namespace gk
