#include "gk/graph.hpp"

#include <algorithm>
#include <numeric>

namespace gk {

namespace {

using Bits = std::bitset<256>;

int v2(long x) {
  int v = 0;
  while (x % 2 == 0) {
    x /= 2;
    ++v;
  }
  return v;
}

void validate_pair(int i, int j, const GroupDescriptor& L) {
  if (i == j) throw std::domain_error("adjacency: indices must be distinct");
  for (int x : {i, j}) {
    if (x <= 2) throw std::domain_error("adjacency: index classes must exceed 2");
    if (!is_valid_index(x, L))
      throw std::domain_error("adjacency: index " + std::to_string(x) +
                              " is not a valid class for " + L.name());
  }
}

// A multiplicative-torus factor q^a - 1 (plus) or q^a + 1 (minus) of rank a;
// a cover is a set of factors of total rank <= n.  A factor with strictly
// smaller total rank can always be padded by rank-one factors of either type,
// so only covers of exact total rank n are sign-constrained (even orthogonal:
// the number of minus factors must match the group's sign).
bool rank_feasible(long budget, int minus_count, const GroupDescriptor& L) {
  if (budget > L.n) return false;
  if (budget < L.n || L.symplectic_like()) return true;
  return (minus_count % 2 == 0) == (L.sign == Sign::Plus);
}

}  // namespace

bool pair_adjacent(int i, int j, const GroupDescriptor& L) {
  validate_pair(i, j, L);
  if (L.linear_unitary()) {
    long vi = nu_eps(i, L.sign), vj = nu_eps(j, L.sign);
    return vi + vj <= L.n || vi % vj == 0 || vj % vi == 0;
  }
  long ei = eta(i), ej = eta(j);
  int evens = (i % 2 == 0) + (j % 2 == 0);
  // Two minimal factors: rank eta each, minus type for the even index.
  if (rank_feasible(ei + ej, evens, L)) return true;
  // One plus factor q^a - 1 covering both: i | a and j | a.
  if (rank_feasible(std::lcm(long(i), long(j)), 0, L)) return true;
  // One minus factor q^a + 1: both classes even with eta of equal 2-adic
  // valuation, a an odd multiple of both etas.
  if (i % 2 == 0 && j % 2 == 0 && v2(ei) == v2(ej) &&
      rank_feasible(std::lcm(ei, ej), 1, L))
    return true;
  return false;
}

bool nonadjacent(int i, int j, const GroupDescriptor& L) {
  return !pair_adjacent(i, j, L);
}

bool char_nonadjacent(int i, const GroupDescriptor& L) {
  if (!is_valid_index(i, L))
    throw std::domain_error("char_nonadjacent: invalid index for " + L.name());
  int n = L.n;
  switch (L.family) {
    case Family::LinearUnitary:
      return i == nu_eps(n - 1, L.sign) || i == nu_eps(n, L.sign);
    case Family::Symplectic:
    case Family::OddOrthogonal:
      if (n % 2 == 0) return i == 2 * n;
      return i == n || i == 2 * n;
    case Family::EvenOrthogonal:
      if (L.sign == Sign::Plus) {
        if (n % 2 == 0) return i == n - 1 || i == 2 * n - 2;
        return i == n || i == 2 * n - 2;
      }
      if (n % 2 == 0) return i == n - 1 || i == 2 * n - 2 || i == 2 * n;
      return i == 2 * n - 2 || i == 2 * n;
  }
  return false;
}

bool one_sided_nonadjacent(int i, int j, const GroupDescriptor& L) {
  validate_pair(i, j, L);
  int n = L.n;
  if (L.linear_unitary()) {
    long vi = nu_eps(i, L.sign), vj = nu_eps(j, L.sign);
    return vj > n - vi && vj % vi != 0;
  }
  long ei = eta(i), ej = eta(j);
  bool in_J1 = ej > n - ei;           // the j != n / j != 2n exclusions are vacuous
  bool in_J2 = j % i == 0 && (j / i) % 2 == 1;  // on valid vertex sets
  bool in_J3 = false;
  if (L.even_orthogonal()) {
    long a = n - ei;
    if (L.sign == Sign::Plus)
      in_J3 = (i % 2 == 1 && j == 2 * a) || (i % 2 == 0 && a % 2 == 1 && j == a);
    else
      in_J3 = (i % 2 == 0 && j == 2 * a) || (i % 2 == 1 && a % 2 == 1 && j == a);
  }
  return in_J3 || (in_J1 && !in_J2);
}

IndexGraph build_index_graph(const GroupDescriptor& L) {
  IndexGraph g;
  g.group = L;
  for (int i : valid_indices(L)) {
    if (i <= 2) continue;
    if (zsigmondy_exception(Int(L.q), unsigned(i))) continue;  // empty class
    g.verts.push_back(i);
  }
  std::sort(g.verts.begin(), g.verts.end());
  if (g.vertex_count() > 256)
    throw std::logic_error("IndexGraph: vertex budget exceeded");
  for (size_t k = 0; k < g.verts.size(); ++k) g.id_of[g.verts[k]] = int(k);
  g.adj.assign(g.vertex_count(), {});
  for (size_t a = 0; a < g.verts.size(); ++a)
    for (size_t b = a + 1; b < g.verts.size(); ++b)
      if (pair_adjacent(g.verts[a], g.verts[b], L)) {
        g.adj[a][b] = true;
        g.adj[b][a] = true;
      }
  int c = g.char_id();
  for (size_t a = 0; a < g.verts.size(); ++a)
    if (!char_nonadjacent(g.verts[a], L)) {
      g.adj[a][c] = true;
      g.adj[c][a] = true;
    }
  return g;
}

namespace {

struct MisSolver {
  const std::vector<Bits>& adj;
  int nv;
  int best = 0;

  void run(Bits P, int cur) {
    int cnt = int(P.count());
    if (cur + cnt <= best) return;
    if (cnt == 0) {
      best = std::max(best, cur);
      return;
    }
    int pivot = -1;
    size_t deg = 0;
    for (int u = 0; u < nv; ++u) {
      if (!P[u]) continue;
      size_t d = (adj[u] & P).count();
      if (pivot < 0 || d > deg) {
        pivot = u;
        deg = d;
      }
    }
    if (deg == 0) {
      best = std::max(best, cur + cnt);
      return;
    }
    Bits Q = P;
    Q.reset(pivot);
    run(Q & ~adj[pivot], cur + 1);
    run(Q, cur);
  }
};

int mis_size(const IndexGraph& g, Bits P, int seed) {
  MisSolver s{g.adj, g.vertex_count()};
  s.best = seed;
  s.run(P, 0);
  return s.best;
}

void enumerate_exact(const IndexGraph& g, Bits P, int need, std::vector<int>& cur,
                     MaxCocliqueSets& out, long& nodes) {
  if (++nodes > 50'000'000)
    throw std::logic_error("enumerate_max_cocliques: search blow-up");
  if (need == 0) {
    ++out.count;
    std::set<int> here(cur.begin(), cur.end());
    if (out.count == 1) {
      out.common = here;
      out.united = here;
    } else {
      std::set<int> inter;
      std::set_intersection(out.common.begin(), out.common.end(), here.begin(),
                            here.end(), std::inserter(inter, inter.begin()));
      out.common = std::move(inter);
      out.united.insert(here.begin(), here.end());
    }
    return;
  }
  if (int(P.count()) < need) return;
  int v = -1;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (P[u]) {
      v = u;
      break;
    }
  Bits Q = P;
  Q.reset(v);
  cur.push_back(v);
  enumerate_exact(g, Q & ~g.adj[v], need - 1, cur, out, nodes);
  cur.pop_back();
  enumerate_exact(g, Q, need, cur, out, nodes);
}

Bits full_vertex_set(const IndexGraph& g) {
  Bits P;
  for (int u = 0; u < g.vertex_count(); ++u) P[u] = true;
  return P;
}

int anchor_id(const IndexGraph& g, int anchor) {
  if (anchor == kCharVertex) return g.char_id();
  auto it = g.id_of.find(anchor);
  if (it == g.id_of.end())
    throw std::domain_error("anchor index " + std::to_string(anchor) +
                            " is not a vertex of " + g.group.name());
  return it->second;
}

}  // namespace

CocliqueReport max_coclique_exact(const IndexGraph& g, std::optional<int> anchor) {
  Bits P = full_vertex_set(g);
  int base = 0;
  std::vector<int> prefix;
  if (anchor) {
    int id = anchor_id(g, *anchor);
    P &= ~g.adj[id];
    P.reset(id);
    base = 1;
    prefix.push_back(id);
  }
  MisSolver s{g.adj, g.vertex_count()};
  s.run(P, 0);
  int target = s.best;

  // Recover one witness coclique of the computed size.
  Bits Q = P;
  std::vector<int> picked = prefix;
  int remaining = target;
  while (remaining > 0) {
    for (int u = 0; u < g.vertex_count(); ++u) {
      if (!Q[u]) continue;
      Bits R = Q;
      R.reset(u);
      R &= ~g.adj[u];
      if (mis_size(g, R, remaining - 2) == remaining - 1) {
        picked.push_back(u);
        Q = R;
        --remaining;
        break;
      }
    }
  }

  CocliqueReport rep;
  rep.size = base + target;
  rep.source = CocliqueReport::Source::ExactSearch;
  for (int id : picked) {
    if (id == g.char_id()) {
      rep.includes_char = true;
      rep.indices.push_back(kCharVertex);
    } else {
      rep.indices.push_back(g.verts[size_t(id)]);
    }
  }
  std::sort(rep.indices.begin(), rep.indices.end());
  return rep;
}

MaxCocliqueSets enumerate_max_cocliques(const IndexGraph& g, std::optional<int> anchor) {
  Bits P = full_vertex_set(g);
  int base = 0;
  if (anchor) {
    int id = anchor_id(g, *anchor);
    P &= ~g.adj[id];
    P.reset(id);
    base = 1;
  }
  MisSolver s{g.adj, g.vertex_count()};
  s.run(P, 0);

  MaxCocliqueSets out;
  out.size = base + s.best;
  std::vector<int> cur;
  long nodes = 0;
  // Enumerate over vertex ids, then translate.
  MaxCocliqueSets ids;
  ids.size = out.size;
  enumerate_exact(g, P, s.best, cur, ids, nodes);
  out.count = ids.count;
  auto translate = [&](const std::set<int>& in) {
    std::set<int> r;
    for (int id : in)
      r.insert(id == g.char_id() ? kCharVertex : g.verts[size_t(id)]);
    return r;
  };
  out.common = translate(ids.common);
  out.united = translate(ids.united);
  return out;
}

Table1Row table1_formulas(const GroupDescriptor& L) {
  int n = L.n;
  if (n < 13) throw std::range_error("table1_formulas: requires prk(L) >= 13");
  Table1Row row;
  auto phi = [&](int i) { return phi_of_index(i, L); };
  std::set<int> valid = valid_indices(L);
  auto collect = [&](auto&& pred) {
    std::set<int> out;
    for (int i : valid)
      if (i > 2 && pred(i)) out.insert(i);
    return out;
  };
  switch (L.family) {
    case Family::LinearUnitary:
      if (n % 2) {
        row.t = (n + 1) / 2;
        row.E = collect([&](int i) { return 2 * phi(i) > n; });
      } else {
        row.t = n / 2;
        row.E = collect([&](int i) { return 2 * phi(i) > n && phi(i) < n; });
        row.JmE = {int(nu_eps(n / 2, L.sign)), int(nu_eps(n, L.sign))};
      }
      break;
    case Family::Symplectic:
    case Family::OddOrthogonal:
      switch (n % 4) {
        case 0:
          row.t = (3 * n + 4) / 4;
          row.E = collect([&](int i) { return 2 * phi(i) >= n; });
          break;
        case 1:
          row.t = (3 * n + 5) / 4;
          row.E = collect([&](int i) { return 2 * phi(i) > n; });
          break;
        case 2:
          row.t = (3 * n + 2) / 4;
          row.E = collect([&](int i) { return 2 * phi(i) > n; });
          row.JmE = {n / 2, n};
          break;
        case 3:
          row.t = (3 * n + 3) / 4;
          row.E = collect([&](int i) { return 2 * phi(i) > n + 1; });
          row.JmE = {(n - 1) / 2, n - 1, n + 1};
          break;
      }
      break;
    case Family::EvenOrthogonal:
      if (L.sign == Sign::Plus) {
        switch (n % 4) {
          case 0:
            row.t = 3 * n / 4;
            row.E = collect([&](int i) { return 2 * phi(i) >= n && i != 2 * n; });
            break;
          case 1:
            row.t = (3 * n + 1) / 4;
            row.E = collect(
                [&](int i) { return 2 * phi(i) > n && i != 2 * n && i != n + 1; });
            row.JmE = {n - 1, n + 1};
            break;
          case 2:
            row.t = (3 * n - 2) / 4;
            row.E = collect([&](int i) { return 2 * phi(i) > n && i != 2 * n; });
            row.JmE = {n / 2, n};
            break;
          case 3:
            row.t = (3 * n + 3) / 4;
            row.E = collect([&](int i) {
              return 2 * phi(i) >= n - 1 && i != 2 * n && i != n - 1;
            });
            break;
        }
      } else {
        switch (n % 4) {
          case 0:
            row.t = (3 * n + 4) / 4;
            row.E = collect([&](int i) { return 2 * phi(i) >= n; });
            break;
          case 1:
            row.t = (3 * n + 1) / 4;
            row.E = collect(
                [&](int i) { return 2 * phi(i) > n && i != n && i != (n + 1) / 2; });
            row.JmE = {(n + 1) / 2, n - 1};
            break;
          case 2:
            row.t = (3 * n + 2) / 4;
            row.E = collect([&](int i) { return 2 * phi(i) > n; });
            row.JmE = {n / 2, n - 2, n};
            break;
          case 3:
            row.t = (3 * n + 3) / 4;
            row.E = collect([&](int i) {
              return 2 * phi(i) >= n - 1 && i != n && i != (n - 1) / 2;
            });
            break;
        }
      }
      break;
  }
  return row;
}

Table2Row table2_formulas(const GroupDescriptor& L) {
  int n = L.n;
  long eq = sign_unit(L.sign) * L.q;
  switch (L.family) {
    case Family::LinearUnitary:
      if (n < 4 || (n == 4 && eq == -2) || (n == 6 && eq == 2) || (n == 7 && eq == 2))
        throw std::range_error("table2_formulas: L^eps row requires n >= 4, (n,eps q) != (4,-2),(6,2),(7,2)");
      return {3, {int(nu_eps(n - 1, L.sign)), int(nu_eps(n, L.sign))}};
    case Family::Symplectic:
    case Family::OddOrthogonal:
      if (n < 3 || (n == 3 && L.q == 2))
        throw std::range_error("table2_formulas: symplectic row requires n >= 3, (n,q) != (3,2)");
      if (n % 2 == 0) return {2, {2 * n}};
      return {3, {n, 2 * n}};
    case Family::EvenOrthogonal:
      if (n < 4 || (n == 4 && L.q == 2))
        throw std::range_error("table2_formulas: orthogonal row requires n >= 4, (n,q) != (4,2)");
      if (L.sign == Sign::Plus) {
        if (n % 2 == 0) return {3, {n - 1, 2 * n - 2}};
        return {3, {n, 2 * n - 2}};
      }
      if (n % 2 == 0) return {4, {n - 1, 2 * n - 2, 2 * n}};
      return {3, {2 * n - 2, 2 * n}};
  }
  throw std::logic_error("table2_formulas: unreachable");
}

std::optional<Table3Row> table3_row(const GroupDescriptor& L, int e,
                                    const std::optional<Int>& r) {
  int n = L.n;
  if (n < 13) throw std::range_error("table3_row: requires prk(L) >= 13");
  auto nu_ = [&](int x) { return int(nu_eps(x, L.sign)); };
  if (L.linear_unitary()) {
    int x = int(nu_eps(e, L.sign));  // involution: e = nu_eps(x)
    switch (x) {
      case 1: {
        if (!r) throw std::domain_error("table3_row: e = nu_eps(1) needs the prime r");
        Int eq = sign_unit(L.sign) * Int(L.q) - 1;
        Int lhs = r_part(eq, *r), rhs = r_part(Int(n), *r);
        if (lhs == rhs) return Table3Row{3, {nu_(n - 1), nu_(n)}};
        if (lhs > rhs) return Table3Row{2, {nu_(n)}};
        return Table3Row{2, {nu_(n - 1)}};
      }
      case 2:
        return Table3Row{2, {n % 2 == 0 ? nu_(n - 1) : nu_(n)}};
      case 3:
        switch (n % 3) {
          case 0: return Table3Row{3, {nu_(n - 2), nu_(n - 1)}};
          case 1: return Table3Row{3, {nu_(n - 2), nu_(n)}};
          default: return Table3Row{3, {nu_(n - 1), nu_(n)}};
        }
      case 4:
        switch (n % 4) {
          case 0: return Table3Row{4, {nu_(n - 3), nu_(n - 2), nu_(n - 1)}};
          case 1: return Table3Row{4, {nu_(n - 3), nu_(n - 2), nu_(n)}};
          case 2: return Table3Row{4, {nu_(n - 3), nu_(n - 1), nu_(n)}};
          default: return Table3Row{4, {nu_(n - 2), nu_(n - 1), nu_(n)}};
        }
      default:
        return std::nullopt;
    }
  }
  bool plus = L.sign == Sign::Plus;
  if (L.symplectic_like()) {
    switch (e) {
      case 1: return Table3Row{2, {2 * n}};
      case 2: return Table3Row{2, {n % 2 == 0 ? 2 * n : n}};
      case 4:
        switch (n % 4) {
          case 0: return Table3Row{4, {n - 1, 2 * n - 2, 2 * n}};
          case 1: return Table3Row{4, {n, 2 * n - 2, 2 * n}};
          case 2: return Table3Row{3, {n - 1, 2 * n - 2}};
          default: return Table3Row{3, {n, 2 * n}};
        }
      case 3:
        if (n % 6 == 4) return Table3Row{4, {2 * n - 4, 2 * n - 2, 2 * n}};
        return std::nullopt;
      case 6:
        if (n % 6 == 4) return Table3Row{4, {2 * n - 4, n - 1, 2 * n}};
        return std::nullopt;
      default:
        return std::nullopt;
    }
  }
  if (plus) {
    switch (e) {
      case 1: return Table3Row{2, {2 * n - 2}};
      case 2: return Table3Row{2, {n % 2 == 0 ? n - 1 : n}};
      case 4:
        switch (n % 4) {
          case 0: return Table3Row{3, {n - 1, 2 * n - 2}};
          case 1: return Table3Row{4, {n - 2, 2 * n - 2, n}};
          case 2: return Table3Row{3, {n - 1, 2 * n - 2}};
          default: return Table3Row{3, {n - 2, n}};
        }
      case 3:
        if (n % 6 == 4) return Table3Row{4, {2 * n - 6, 2 * n - 4, 2 * n - 2}};
        return std::nullopt;
      case 6:
        if (n % 6 == 4) return Table3Row{4, {2 * n - 4, n - 3, n - 1}};
        if (n % 6 == 5) return Table3Row{4, {2 * n - 2, n - 2, n}};
        return std::nullopt;
      default:
        return std::nullopt;
    }
  }
  switch (e) {
    case 1: return Table3Row{2, {2 * n}};
    case 2: return Table3Row{2, {n % 2 == 0 ? 2 * n : 2 * n - 2}};
    case 4:
      switch (n % 4) {
        case 0: return Table3Row{4, {n - 1, 2 * n - 2, 2 * n}};
        case 1: return Table3Row{4, {2 * n - 4, 2 * n - 2, 2 * n}};
        case 2: return Table3Row{4, {n - 1, 2 * n - 4, 2 * n - 2}};
        default: return Table3Row{3, {2 * n - 4, 2 * n}};
      }
    case 3:
      if (n % 6 == 5) return Table3Row{4, {2 * n - 4, 2 * n - 2, 2 * n}};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

ZetaTable zeta_table(const IndexGraph& g) {
  ZetaTable zt;
  zt.group = g.group;
  MisSolver s{g.adj, g.vertex_count()};
  s.run(full_vertex_set(g), 0);
  zt.t = s.best;
  int n = g.group.n;
  for (int i : g.verts) {
    int id = g.id_of.at(i);
    Bits P = full_vertex_set(g);
    P &= ~g.adj[id];
    P.reset(id);
    int ti = 1 + mis_size(g, P, 0);
    zt.zeta[i] = ti;
    long phi = phi_of_index(i, g.group);
    if (3 * phi > n && ti < zt.t) zt.M.insert(i);
    if (3 * ti > 2 * zt.t && ti < zt.t) zt.N.insert(i);
  }
  for (int i : zt.M)
    if (zt.N.count(i)) zt.T.insert(zt.zeta.at(i));
  return zt;
}

std::vector<int> ZetaTable::preimages_in_N(int value) const {
  std::vector<int> out;
  for (int i : N)
    if (zeta.at(i) == value) out.push_back(i);
  return out;
}

int closed_zeta(const GroupDescriptor& L, int i) {
  int n = L.n;
  if (L.linear_unitary()) return int(nu_eps(i, L.sign));
  long h = eta(i);
  if (L.symplectic_like()) return int(n % 2 == 0 ? (3 * h + 2) / 2 : (3 * h + 3) / 2);
  if (L.sign == Sign::Plus) {
    if (n % 2 == 0) return int((3 * h + 1) / 2);
    return int(i % 2 == 0 ? (3 * h + 2) / 2 : (3 * h + 3) / 2);
  }
  // O-: proof-side case split (the statement's first case mislabels n's parity).
  if (n % 2 == 0) return int((3 * h + 4) / 2);
  return int(i % 2 == 1 ? (3 * h + 2) / 2 : (3 * h + 3) / 2);
}

bool classify_large(int i, const IndexGraph& g, const ZetaTable& zt) {
  bool large = zt.zeta.at(i) == zt.t;
  long phi = phi_of_index(i, g.group);
  int n = g.group.n;
  if (2 * phi >= n && !large)
    throw lemma_violation("classify_large: phi >= n/2 must imply large");
  if (large && 2 * phi < n - 2)
    throw lemma_violation("classify_large: large implies phi >= n/2 - 1");
  return large;
}

}  // namespace gk
