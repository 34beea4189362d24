#include "gk/spectra.hpp"

#include <algorithm>
#include <numeric>

namespace gk {

namespace {

int v2(long x) {
  int v = 0;
  while (x % 2 == 0) {
    x /= 2;
    ++v;
  }
  return v;
}

struct BlockOptions {
  long plus_rank;   // minimal rank of a q^a - 1 factor covering the block, or -1
  long minus_rank;  // minimal rank of a q^a + 1 factor, or -1
};

BlockOptions block_options(const std::vector<int>& block, const GroupDescriptor& L) {
  BlockOptions o{-1, -1};
  long cap = 4L * L.n;
  if (L.linear_unitary()) {
    long l = 1;
    for (int i : block) {
      l = std::lcm(l, nu_eps(i, L.sign));
      if (l > cap) return o;
    }
    o.plus_rank = l;
    return o;
  }
  long lp = 1;
  for (int i : block) {
    lp = std::lcm(lp, long(i));
    if (lp > cap) {
      lp = -1;
      break;
    }
  }
  o.plus_rank = lp;
  bool all_even = std::all_of(block.begin(), block.end(), [](int i) { return i % 2 == 0; });
  if (all_even) {
    long lm = 1;
    bool same_v2 = true;
    int v = v2(eta(block.front()));
    for (int i : block) {
      if (v2(eta(i)) != v) same_v2 = false;
      lm = std::lcm(lm, eta(i));
      if (lm > cap) {
        lm = -1;
        break;
      }
    }
    if (same_v2) o.minus_rank = lm;
  }
  return o;
}

struct CoverSearch {
  const GroupDescriptor& L;
  std::vector<int> indices;  // sorted by descending phi
  std::vector<std::vector<int>> blocks;
  std::optional<IndexCover> found;

  bool try_finish() {
    // Choose a factor type per block so that ranks fit the budget; at exact
    // budget the number of minus factors must match an even-orthogonal sign.
    size_t B = blocks.size();
    std::vector<BlockOptions> opts(B);
    for (size_t b = 0; b < B; ++b) {
      opts[b] = block_options(blocks[b], L);
      if (opts[b].plus_rank < 0 && opts[b].minus_rank < 0) return false;
    }
    for (unsigned mask = 0; mask < (1u << B); ++mask) {
      long budget = 0;
      int minus = 0;
      bool ok = true;
      for (size_t b = 0; b < B && ok; ++b) {
        bool use_minus = (mask >> b) & 1;
        long r = use_minus ? opts[b].minus_rank : opts[b].plus_rank;
        if (r < 0) {
          ok = false;
          break;
        }
        budget += r;
        minus += use_minus;
      }
      if (!ok || budget > L.n) continue;
      if (budget == L.n && L.even_orthogonal() &&
          ((minus % 2 == 0) != (L.sign == Sign::Plus)))
        continue;
      IndexCover cover;
      cover.group = L;
      cover.budget_used = int(budget);
      for (size_t b = 0; b < B; ++b) {
        bool use_minus = (mask >> b) & 1;
        CoverPart part;
        part.rank = int(use_minus ? opts[b].minus_rank : opts[b].plus_rank);
        part.minus = use_minus;
        part.members = blocks[b];
        part.representative = *std::max_element(
            part.members.begin(), part.members.end(), [&](int a, int c) {
              return phi_of_index(a, L) < phi_of_index(c, L);
            });
        cover.parts.push_back(std::move(part));
      }
      found = std::move(cover);
      return true;
    }
    return false;
  }

  bool assign(size_t k) {
    if (k == indices.size()) return try_finish();
    // index-based: deeper calls grow and shrink the block list
    size_t nblocks = blocks.size();
    for (size_t b = 0; b < nblocks; ++b) {
      blocks[b].push_back(indices[k]);
      if (assign(k + 1)) return true;
      blocks[b].pop_back();
    }
    blocks.push_back({indices[k]});
    if (assign(k + 1)) return true;
    blocks.pop_back();
    return false;
  }
};

std::optional<IndexCover> cover_search(std::vector<int> indices, const GroupDescriptor& L) {
  std::sort(indices.begin(), indices.end(), [&](int a, int b) {
    return phi_of_index(a, L) > phi_of_index(b, L);
  });
  CoverSearch s{L, std::move(indices), {}, std::nullopt};
  s.assign(0);
  return s.found;
}

void validate_indices(const std::vector<int>& indices, const GroupDescriptor& L,
                      int floor) {
  std::set<int> seen;
  for (int i : indices) {
    if (i <= floor)
      throw std::domain_error("semisimple_member: index classes must exceed " +
                              std::to_string(floor));
    if (!is_valid_index(i, L))
      throw std::domain_error("semisimple_member: index " + std::to_string(i) +
                              " is not valid for " + L.name());
    if (!seen.insert(i).second)
      throw std::domain_error("semisimple_member: indices must be pairwise distinct");
  }
}

}  // namespace

std::optional<IndexCover> semisimple_member(const std::vector<int>& indices,
                                            const GroupDescriptor& L) {
  validate_indices(indices, L, 2);
  auto result = cover_search(indices, L);
  if (indices.size() == 2) {
    // Standing assertion: the pairwise case must agree with the
    // adjacency predicate.
    bool adj = pair_adjacent(indices[0], indices[1], L);
    if (adj != result.has_value())
      throw std::logic_error("semisimple_member: pairwise cover disagrees with adjacency");
  }
  return result;
}

std::optional<IndexCover> semisimple_member_small_ok(const std::vector<int>& indices,
                                                     const GroupDescriptor& L) {
  validate_indices(indices, L, 0);
  return cover_search(indices, L);
}

bool has_cyclic_hall(int i, const GroupDescriptor& L) {
  if (!is_valid_index(i, L))
    throw std::domain_error("has_cyclic_hall: invalid index for " + L.name());
  long phi = phi_of_index(i, L);
  return 2 * phi > L.n && phi <= L.n;
}

namespace {

Int q_pow(long q, unsigned e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), e);
  return r;
}

}  // namespace

BigElement big_spectral_element(const GroupDescriptor& L) {
  int n = L.n;
  int t = table1_formulas(L).t;
  BigElement out;
  if (L.linear_unitary()) {
    if (n < 23)
      throw std::range_error("big_spectral_element: linear/unitary case requires n >= 23");
    int j = n >= 29 ? int(prime_in_interval(n + 1, IntervalMode::FiveSixths)) : 23;
    out.witness_j = j;
    out.value = greatest_primitive_divisor_value(unsigned(j), SignedBase(Int(L.q), L.sign));
    // k >= q^{4t/3}  <=>  k^3 >= q^{4t}
    Int lhs = out.value * out.value * out.value;
    if (lhs < q_pow(L.q, unsigned(4 * t)))
      throw lemma_violation("big_spectral_element: bound q^{4t/3} not met for " + L.name());
    return out;
  }
  if ((L.symplectic_like() && n < 29) || (L.even_orthogonal() && n < 30))
    throw std::range_error("big_spectral_element: below the lemma's rank floor");

  int j = 0;
  bool fallback = false;
  if (n >= 54) {
    if (n % 2 == 0)
      j = int(prime_in_interval(n + 1, IntervalMode::EightNinths));
    else if (L.symplectic_like())
      j = int(prime_in_interval(n + 2, IntervalMode::EightNinths));
    else
      j = int(prime_in_interval(n, IntervalMode::EightNinths));
  } else if (n >= 48) {
    j = t <= 40 ? 47 : 53;
  } else if (n >= 44) {
    j = 43;
  } else if (n >= 42) {
    j = 41;
  } else if (n >= 38) {
    j = (L.symplectic_like() && n == 41) ? 41 : 37;
  } else if (n >= 33) {
    if (t == 29)
      j = 37;  // only S/O odd-dimensional with n = 37
    else
      fallback = true;
  } else if (n == 32) {
    j = 31;
  } else {
    j = 29;
  }

  if (fallback) {
    out.witness_j = 32;
    out.power_of_two_fallback = true;
    out.value = q_pow(L.q, 64 / 2) + 1;
    if (L.q % 2) out.value /= 2;  // k_64(q) = (q^32 + 1)/(2, q-1)
  } else {
    out.witness_j = j;
    Int a = greatest_primitive_divisor_value(unsigned(j), SignedBase::plus(Int(L.q)));
    Int b = greatest_primitive_divisor_value(unsigned(j), SignedBase::minus(Int(L.q)));
    out.value = std::max(a, b);
  }
  // k >= q^{10t/9}  <=>  k^9 >= q^{10t}
  Int lhs = 1;
  for (int e = 0; e < 9; ++e) lhs *= out.value;
  if (lhs < q_pow(L.q, unsigned(10 * t)))
    throw lemma_violation("big_spectral_element: bound q^{10t/9} not met for " + L.name());
  return out;
}

Int max_spectral_bound(const GroupDescriptor& L) {
  int m = L.linear_unitary() ? L.n - 1 : L.n;  // untwisted Lie rank
  int t = table1_formulas(L).t;
  Int num = q_pow(L.q, unsigned(m + 1));
  // q^{m+1}/(q-1) <= q^{2t}  checked in exact integers.
  if (num > q_pow(L.q, unsigned(2 * t)) * Int(L.q - 1))
    throw lemma_violation("max_spectral_bound: q^{m+1}/(q-1) exceeds q^{2t} for " + L.name());
  return num / Int(L.q - 1);
}

}  // namespace gk
