#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gk/graph.hpp"

using namespace gk;

namespace {

GroupDescriptor L45(long q = 9) {
  return GroupDescriptor::make(Family::LinearUnitary, Sign::Plus, 45, q);
}
GroupDescriptor U45(long q = 4) {
  return GroupDescriptor::make(Family::LinearUnitary, Sign::Minus, 45, q);
}
GroupDescriptor S56(long q = 3) {
  return GroupDescriptor::make(Family::Symplectic, Sign::Plus, 28, q);
}
GroupDescriptor Om60(long q = 4) {
  return GroupDescriptor::make(Family::EvenOrthogonal, Sign::Minus, 30, q);
}
GroupDescriptor Op62(long q = 5) {
  return GroupDescriptor::make(Family::EvenOrthogonal, Sign::Plus, 31, q);
}

}  // namespace

TEST_CASE("adjacency predicate on the worked examples") {
  CHECK(nonadjacent(23, 45, L45()));
  CHECK(nonadjacent(56, 28, S56()));
  CHECK(pair_adjacent(18, 54, S56()));  // ratio 3 is odd
  CHECK_THROWS_AS(nonadjacent(2, 5, S56()), std::domain_error);
  CHECK_THROWS_AS(nonadjacent(5, 5, S56()), std::domain_error);
  CHECK_THROWS_AS(nonadjacent(57, 5, S56()), std::domain_error);
}

TEST_CASE("boundary pairs at full torus rank") {
  // O+_2n, n = 2 mod 4: the pair (n/2, n) shares the split rank-n torus.
  auto Op34 = GroupDescriptor::make(Family::EvenOrthogonal, Sign::Plus, 34, 3);
  CHECK(pair_adjacent(17, 34, Op34));
  // mixed parity without a divisor relation stays nonadjacent at the boundary
  CHECK(nonadjacent(13, 2 * (34 - 13), Op34));
  // O-: same parity at the boundary is nonadjacent, mixed is adjacent
  CHECK(nonadjacent(11, 19, Om60()));   // both odd, eta sum = 30
  CHECK(nonadjacent(22, 38, Om60()));   // both even
  CHECK(pair_adjacent(11, 38, Om60())); // mixed
  CHECK(pair_adjacent(22, 19, Om60()));
}

TEST_CASE("adjacency is symmetric across the grid slice") {
  for (const auto& L : {L45(2), U45(3), S56(2), Om60(3), Op62(2),
                        GroupDescriptor::make(Family::OddOrthogonal, Sign::Plus, 17, 5)}) {
    auto g = build_index_graph(L);
    for (size_t a = 0; a < g.verts.size(); ++a)
      for (size_t b = a + 1; b < g.verts.size(); ++b) {
        CHECK(pair_adjacent(g.verts[a], g.verts[b], L) ==
              pair_adjacent(g.verts[b], g.verts[a], L));
      }
  }
}

TEST_CASE("vertices with empty classes are pruned") {
  auto g2 = build_index_graph(S56(2));
  CHECK(!g2.has_index(6));  // R_6(2) is empty
  CHECK(g2.has_index(5));
  auto g3 = build_index_graph(S56(3));
  CHECK(g3.has_index(6));
}

TEST_CASE("characteristic adjacency follows the table") {
  CHECK(char_nonadjacent(44, L45()));
  CHECK(char_nonadjacent(45, L45()));
  CHECK(!char_nonadjacent(43, L45()));
  // U45: indices nu(44) = 44 and nu(45) = 90
  CHECK(char_nonadjacent(44, U45()));
  CHECK(char_nonadjacent(90, U45()));
  CHECK(!char_nonadjacent(40, U45()));
  CHECK_THROWS_AS(char_nonadjacent(45, U45()), std::domain_error);  // nu(45) = 90 > n
  CHECK(char_nonadjacent(56, S56()));
  CHECK(!char_nonadjacent(28, S56()));
  for (int i : {29, 58, 60}) CHECK(char_nonadjacent(i, Om60()));
  CHECK(!char_nonadjacent(30, Om60()));
}

TEST_CASE("maximum cocliques and anchored searches") {
  auto gL = build_index_graph(L45());
  CHECK(max_coclique_exact(gL).size == 23);
  auto anchored = max_coclique_exact(gL, kCharVertex);
  CHECK(anchored.size == 3);
  CHECK(anchored.includes_char);

  auto gS = build_index_graph(S56(3));
  CHECK(max_coclique_exact(gS).size == 22);

  auto witness = max_coclique_exact(gL);
  // the witness really is a coclique
  for (size_t a = 0; a < witness.indices.size(); ++a)
    for (size_t b = a + 1; b < witness.indices.size(); ++b)
      CHECK(nonadjacent(witness.indices[a], witness.indices[b], L45()));
}

TEST_CASE("table 1 rows reproduce on spot descriptors") {
  for (const auto& L : {L45(2), L45(9), U45(2), U45(5), S56(2), S56(5), Om60(2), Om60(9),
                        Op62(2), Op62(4),
                        GroupDescriptor::make(Family::LinearUnitary, Sign::Plus, 46, 3),
                        GroupDescriptor::make(Family::Symplectic, Sign::Plus, 29, 2),
                        GroupDescriptor::make(Family::Symplectic, Sign::Plus, 30, 3),
                        GroupDescriptor::make(Family::Symplectic, Sign::Plus, 31, 4),
                        GroupDescriptor::make(Family::EvenOrthogonal, Sign::Plus, 32, 3),
                        GroupDescriptor::make(Family::EvenOrthogonal, Sign::Plus, 33, 2),
                        GroupDescriptor::make(Family::EvenOrthogonal, Sign::Plus, 34, 5),
                        GroupDescriptor::make(Family::EvenOrthogonal, Sign::Minus, 31, 2),
                        GroupDescriptor::make(Family::EvenOrthogonal, Sign::Minus, 32, 3),
                        GroupDescriptor::make(Family::EvenOrthogonal, Sign::Minus, 33, 4),
                        GroupDescriptor::make(Family::OddOrthogonal, Sign::Plus, 13, 2),
                        GroupDescriptor::make(Family::OddOrthogonal, Sign::Plus, 14, 3)}) {
    auto g = build_index_graph(L);
    auto row = table1_formulas(L);
    auto sets = enumerate_max_cocliques(g);
    CAPTURE(L.name());
    CHECK(sets.size == row.t);
    CHECK(sets.common == row.E);
    std::set<int> J = row.E;
    J.insert(row.JmE.begin(), row.JmE.end());
    CHECK(sets.united == J);
  }
  CHECK_THROWS_AS(table1_formulas(GroupDescriptor::make(Family::Symplectic, Sign::Plus, 12, 3)),
                  std::range_error);
}

TEST_CASE("table 2 spot rows") {
  auto rL = table2_formulas(L45());
  CHECK(rL.t_p == 3);
  CHECK(rL.J_p == std::set<int>({44, 45}));
  auto rS = table2_formulas(S56(3));
  CHECK(rS.t_p == 2);
  CHECK(rS.J_p == std::set<int>({56}));
  auto rO = table2_formulas(Om60());
  CHECK(rO.t_p == 4);
  CHECK(rO.J_p == std::set<int>({29, 58, 60}));
  auto rOp = table2_formulas(Op62());  // n odd
  CHECK(rOp.t_p == 3);
  CHECK(rOp.J_p == std::set<int>({31, 60}));
  CHECK_THROWS_AS(table2_formulas(GroupDescriptor::make(Family::Symplectic, Sign::Plus, 3, 2)),
                  std::range_error);
}

TEST_CASE("table 3 spot rows") {
  // S_2n, e = 4, n = 2 mod 4
  auto S = GroupDescriptor::make(Family::Symplectic, Sign::Plus, 30, 3);
  auto row = table3_row(S, 4);
  REQUIRE(row.has_value());
  CHECK(row->t_r == 3);
  CHECK(row->J_r == std::set<int>({29, 58}));
  // O-_2n, n = 2 mod 4, e = 1 needs the side condition prime; e = 3 row at n = 5 mod 6
  auto Om = GroupDescriptor::make(Family::EvenOrthogonal, Sign::Minus, 29, 2);
  auto row3 = table3_row(Om, 3);
  REQUIRE(row3.has_value());
  CHECK(row3->t_r == 4);
  CHECK(row3->J_r == std::set<int>({54, 56, 58}));
  // LU e = nu_eps(1) needs r
  CHECK_THROWS_AS(table3_row(L45(), 1), std::domain_error);
  auto trich = table3_row(L45(4), 1, Int(3));  // |q-1|_3 = 3, 45_3 = 9
  REQUIRE(trich.has_value());
  CHECK(trich->t_r == 2);
  CHECK(trich->J_r == std::set<int>({44}));
  // no row where t(r,L) > 4
  CHECK(!table3_row(S, 7).has_value());
}

TEST_CASE("zeta tables: worked examples") {
  auto gL = build_index_graph(L45());
  auto ztL = zeta_table(gL);
  CHECK(ztL.t == 23);
  for (int i : ztL.M) {
    long v = nu_eps(i, Sign::Plus);
    CHECK(3 * v > 45);
    CHECK(2 * v < 45);
    CHECK(ztL.zeta.at(i) == v);
  }
  CHECK(ztL.M == ztL.N);  // 45 = 3 mod 6
  for (int j = 1; j <= 7; ++j) CHECK(ztL.T.count(23 - j));

  auto ztS = zeta_table(build_index_graph(S56(3)));
  // n = 0 mod 4: T n {t-6..t-1} = {t-2, t-3, t-5, t-6}
  std::set<int> slice;
  for (int x : ztS.T)
    if (x >= ztS.t - 6 && x <= ztS.t - 1) slice.insert(x);
  CHECK(slice == std::set<int>({ztS.t - 2, ztS.t - 3, ztS.t - 5, ztS.t - 6}));

  auto ztO = zeta_table(build_index_graph(Om60()));
  CHECK(ztO.t == 23);
  CHECK(ztO.T == std::set<int>({23 - 2, 23 - 3, 23 - 5}));
  CHECK(ztO.zeta.at(11) == 18);
  CHECK(ztO.zeta.at(22) == 18);

  auto ztO34 = zeta_table(build_index_graph(
      GroupDescriptor::make(Family::EvenOrthogonal, Sign::Minus, 34, 3)));
  CHECK(ztO34.T == std::set<int>({ztO34.t - 2, ztO34.t - 3, ztO34.t - 5, ztO34.t - 6}));
}

TEST_CASE("large/small classification brackets the exact answer") {
  auto g = build_index_graph(L45());
  auto zt = zeta_table(g);
  CHECK(classify_large(30, g, zt));          // nu = 30 > n/2
  CHECK(classify_large(45, g, zt));          // phi = n
  auto gS = build_index_graph(S56(3));
  auto ztS = zeta_table(gS);
  CHECK(!classify_large(20, gS, ztS));       // eta = 10 < n/2 - 1
  CHECK(classify_large(28, gS, ztS));        // eta = 14 = n/2
}

TEST_CASE("one-sided displays agree with the predicate on M u N") {
  for (const auto& L : {L45(3), S56(5), Om60(2), Op62(3)}) {
    auto g = build_index_graph(L);
    auto zt = zeta_table(g);
    std::set<int> MN = zt.M;
    MN.insert(zt.N.begin(), zt.N.end());
    for (int i : MN)
      for (int j : g.verts) {
        if (i == j) continue;
        CAPTURE(L.name());
        CAPTURE(i);
        CAPTURE(j);
        CHECK(one_sided_nonadjacent(i, j, L) == nonadjacent(i, j, L));
      }
  }
}
