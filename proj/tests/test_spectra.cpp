#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gk/spectra.hpp"

using namespace gk;

namespace {

GroupDescriptor L45(long q = 2) {
  return GroupDescriptor::make(Family::LinearUnitary, Sign::Plus, 45, q);
}
GroupDescriptor S56(long q = 3) {
  return GroupDescriptor::make(Family::Symplectic, Sign::Plus, 28, q);
}

}  // namespace

TEST_CASE("pairwise covers: worked examples") {
  auto c1 = semisimple_member({54, 18}, S56());
  REQUIRE(c1.has_value());
  CHECK(c1->parts.size() == 1);  // 54 absorbs 18, ratio 3 odd
  CHECK(c1->parts[0].representative == 54);

  CHECK(!semisimple_member({45, 23}, L45(4)).has_value());
  CHECK_THROWS_AS(semisimple_member({2, 5}, S56()), std::domain_error);
  CHECK_THROWS_AS(semisimple_member({5, 5}, S56()), std::domain_error);
}

TEST_CASE("singleton membership for every valid class") {
  for (const auto& L : {L45(4), S56(2),
                        GroupDescriptor::make(Family::EvenOrthogonal, Sign::Plus, 31, 3),
                        GroupDescriptor::make(Family::EvenOrthogonal, Sign::Minus, 30, 2),
                        GroupDescriptor::make(Family::LinearUnitary, Sign::Minus, 45, 3)}) {
    auto g = build_index_graph(L);
    for (int i : g.verts) {
      CAPTURE(L.name());
      CAPTURE(i);
      CHECK(semisimple_member({i}, L).has_value());
    }
  }
}

TEST_CASE("monotonicity: subsets of member sets are members") {
  std::mt19937 rng(12345);
  for (const auto& L : {L45(3), S56(5),
                        GroupDescriptor::make(Family::EvenOrthogonal, Sign::Minus, 30, 3)}) {
    auto g = build_index_graph(L);
    std::uniform_int_distribution<size_t> pick(0, g.verts.size() - 1);
    int found = 0;
    for (int trial = 0; trial < 400 && found < 25; ++trial) {
      std::set<int> s;
      while (s.size() < 3) s.insert(g.verts[pick(rng)]);
      std::vector<int> idx(s.begin(), s.end());
      if (!semisimple_member(idx, L).has_value()) continue;
      ++found;
      for (int drop = 0; drop < 3; ++drop) {
        std::vector<int> sub;
        for (int k = 0; k < 3; ++k)
          if (k != drop) sub.push_back(idx[size_t(k)]);
        CAPTURE(L.name());
        CHECK(semisimple_member(sub, L).has_value());
      }
    }
    CHECK(found > 0);
  }
}

TEST_CASE("cyclic Hall predicate") {
  CHECK(has_cyclic_hall(30, L45(4)));       // nu = 30 > 45/2
  CHECK(!has_cyclic_hall(20, S56()));       // eta = 10 <= 14
  CHECK(!has_cyclic_hall(28, S56()));       // eta = 14 = n/2, strict lower bound
  // boundary phi = n is allowed (non-strict upper bound)
  CHECK(has_cyclic_hall(56, S56()));
  CHECK(has_cyclic_hall(27, S56()));
  // Hall order divides |L| exactly once
  for (int i : {30, 40, 45}) {
    Int k = greatest_primitive_divisor_value(unsigned(i), SignedBase::plus(Int(4)));
    Int order = order_value(L45(4));
    REQUIRE(has_cyclic_hall(i, L45(4)));
    REQUIRE(mpz_divisible_p(order.get_mpz_t(), k.get_mpz_t()));
    Int g;
    Int rest = order / k;
    mpz_gcd(g.get_mpz_t(), k.get_mpz_t(), rest.get_mpz_t());
    CHECK(g == 1);
  }
}

TEST_CASE("big spectral elements follow the witness recipe") {
  auto bL = big_spectral_element(L45(2));
  CHECK(bL.witness_j == 41);  // smallest prime in (38.33, 46)
  CHECK(!bL.power_of_two_fallback);
  Int bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 2, 4 * 23);  // q^{4t}
  CHECK(bL.value * bL.value * bL.value >= bound);

  auto S66 = GroupDescriptor::make(Family::Symplectic, Sign::Plus, 33, 3);
  auto bS = big_spectral_element(S66);
  CHECK(bS.witness_j == 32);
  CHECK(bS.power_of_two_fallback);
  Int expect;
  mpz_ui_pow_ui(expect.get_mpz_t(), 3, 32);
  CHECK(bS.value == (expect + 1) / 2);

  auto Om62 = GroupDescriptor::make(Family::EvenOrthogonal, Sign::Minus, 31, 3);
  CHECK(big_spectral_element(Om62).witness_j == 29);

  CHECK_THROWS_AS(big_spectral_element(
                      GroupDescriptor::make(Family::LinearUnitary, Sign::Plus, 22, 2)),
                  std::range_error);
}

TEST_CASE("global spectral bound") {
  // Lie rank m: n-1 for linear/unitary, n otherwise; bound q^{m+1}/(q-1) <= q^{2t}
  Int bL = max_spectral_bound(L45(2));
  Int expect;
  mpz_ui_pow_ui(expect.get_mpz_t(), 2, 45);
  CHECK(bL == expect);

  Int bS = max_spectral_bound(S56(3));
  mpz_ui_pow_ui(expect.get_mpz_t(), 3, 29);
  CHECK(bS == expect / 2);

  Int bO = max_spectral_bound(GroupDescriptor::make(Family::EvenOrthogonal, Sign::Minus, 30, 2));
  mpz_ui_pow_ui(expect.get_mpz_t(), 2, 31);
  CHECK(bO == expect);
}

TEST_CASE("pairwise membership equals adjacency on a slice") {
  for (const auto& L : {L45(3), S56(2),
                        GroupDescriptor::make(Family::EvenOrthogonal, Sign::Plus, 34, 3)}) {
    auto g = build_index_graph(L);
    for (size_t a = 0; a < g.verts.size(); ++a)
      for (size_t b = a + 1; b < g.verts.size(); ++b) {
        bool member = semisimple_member({g.verts[a], g.verts[b]}, L).has_value();
        CHECK(member == bool(g.adj[a][b]));
      }
  }
}
