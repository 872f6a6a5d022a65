#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "bigraded.hpp"
#include "errors.hpp"
#include "numeric.hpp"

namespace morcoh {

/* Sign-twisted S_p-invariants of the p-th graded tensor power of a bigraded
   vector space V, where the symmetric group acts by permuting factors with
   Koszul signs and the result is additionally twisted by the sign character.

   Equivalently this is the "graded exterior power": an even-degree class
   behaves like an exterior variable (each basis vector used at most once) and
   an odd-degree class like a symmetric variable (unbounded multiplicity),
   because the Koszul sign of swapping two odd classes cancels the sign twist.

   Computed via the generating function

       prod_{even k} (1 + t z)^{dim}  *  prod_{odd k} (1 - t z)^{-dim}

   where z tracks the (deg, a, b) trigrading of the slot; the answer is the
   coefficient of t^p.  Only the coefficients C(m, j) resp. C(m + j - 1, j)
   enter, so everything stays in exact integers. */
inline BigradedTable signed_invariants(const BigradedTable& base, long long p) {
  if (p < 0) throw input_error("signed_invariants: negative power");
  if (p == 0) return BigradedTable::unit();

  // acc[j] = coefficient of t^j so far, as a sparse trigraded dimension map.
  std::vector<std::map<GradedKey, Int>> acc(p + 1);
  acc[0][GradedKey{0, 0, 0}] = 1;

  for (const auto& [key, m] : base.entries()) {
    const bool even = key.deg % 2 == 0;
    std::vector<Int> factor(p + 1);
    for (long long j = 0; j <= p; ++j)
      factor[j] = even ? binomial(m, j) : binomial(m + j - 1, j);

    std::vector<std::map<GradedKey, Int>> next(p + 1);
    for (long long j1 = 0; j1 <= p; ++j1)
      for (const auto& [k, c] : acc[j1])
        for (long long j2 = 0; j1 + j2 <= p; ++j2) {
          if (factor[j2] == 0) continue;
          const GradedKey shifted{k.deg + key.deg * j2, k.a + key.a * j2,
                                  k.b + key.b * j2};
          next[j1 + j2][shifted] += c * factor[j2];
        }
    acc = std::move(next);
  }

  BigradedTable out;
  for (const auto& [k, d] : acc[p]) out.add(k.deg, k.a, k.b, d);
  return out;
}

namespace detail {

// Adjacent-transposition word sorting `perm` to the identity; applying the
// same word of swaps to a tuple realizes the permutation action factor by
// factor, which is exactly where Koszul signs are picked up.
inline std::vector<int> transposition_word(std::vector<int> perm) {
  std::vector<int> word;
  const int p = static_cast<int>(perm.size());
  for (int i = 0; i < p; ++i) {
    int j = i;
    while (perm[j] != i) ++j;
    for (; j > i; --j) {
      std::swap(perm[j], perm[j - 1]);
      word.push_back(j - 1);
    }
  }
  return word;
}

// Rank over Q of an integer matrix given as rows.  Rows are first deduplicated
// up to sign (permutation-orbit rows coincide up to Koszul sign, so this
// collapses the matrix dramatically), then reduced by fraction-free
// elimination.
inline long long integer_row_rank(std::vector<std::vector<long long>> rows) {
  std::vector<std::vector<Int>> uniq;
  {
    std::map<std::vector<long long>, bool> seen;
    for (auto& r : rows) {
      auto lead = std::find_if(r.begin(), r.end(), [](long long v) { return v != 0; });
      if (lead == r.end()) continue;
      if (*lead < 0)
        for (auto& v : r) v = -v;
      if (seen.emplace(r, true).second)
        uniq.emplace_back(r.begin(), r.end());
    }
  }
  const size_t cols = uniq.empty() ? 0 : uniq[0].size();
  long long rank = 0;
  for (size_t col = 0; col < cols && static_cast<size_t>(rank) < uniq.size(); ++col) {
    size_t pivot = rank;
    while (pivot < uniq.size() && uniq[pivot][col] == 0) ++pivot;
    if (pivot == uniq.size()) continue;
    std::swap(uniq[rank], uniq[pivot]);
    const Int& pv = uniq[rank][col];
    for (size_t r = rank + 1; r < uniq.size(); ++r) {
      if (uniq[r][col] == 0) continue;
      const Int f = uniq[r][col];
      for (size_t c = col; c < cols; ++c)
        uniq[r][c] = uniq[r][c] * pv - uniq[rank][c] * f;
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/* Independent oracle for signed_invariants: materialize the basis of V^{To p},
   build the projector  (1/p!) sum_sigma sgn(sigma) rho(sigma)  blockwise per
   (degree, Hodge) component, and return the rank of each block.  rho(sigma)
   is realized by the adjacent-transposition word of sigma with the Koszul
   sign (-1)^{deg_i deg_j} per swap of adjacent odd-degree factors.

   Rank is taken of  sum_sigma sgn(sigma) rho(sigma)  directly — the 1/p!
   scalar does not change the rank — so the matrices stay integral.

   The instance size is basis^p tuples; anything above `cap` is refused. */
inline BigradedTable signed_invariants_oracle(const BigradedTable& base, long long p,
                                              const Int& cap = Int(1000000)) {
  if (p < 0) throw input_error("signed_invariants_oracle: negative power");
  if (p == 0) return BigradedTable::unit();

  std::vector<GradedKey> basis;
  for (const auto& [k, d] : base.entries()) {
    const long long dd = to_ll(d, "basis dimension");
    for (long long i = 0; i < dd; ++i) basis.push_back(k);
  }
  const long long nb = static_cast<long long>(basis.size());
  if (nb == 0) return BigradedTable();
  if (pow_int(nb, p) > cap) throw capacity_error("oracle instance too large");
  const long long ntuples = to_ll(pow_int(nb, p), "tuple count");

  // Tuple t is encoded base-nb, most significant digit = factor 0.
  std::vector<long long> powers(p);
  powers[p - 1] = 1;
  for (long long i = p - 2; i >= 0; --i) powers[i] = powers[i + 1] * nb;

  // Partition tuples into (degree, Hodge) blocks; the S_p action preserves
  // the partition, so the projector is block diagonal.
  struct Block {
    std::vector<std::vector<long long>> mat;  // accumulates sum sgn * koszul
    std::map<long long, long long> local;     // global tuple index -> row/col
  };
  std::map<GradedKey, Block> blocks;
  std::vector<Block*> block_of(ntuples);
  std::vector<long long> local_of(ntuples);
  {
    std::vector<int> digits(p);
    for (long long t = 0; t < ntuples; ++t) {
      long long rem = t;
      GradedKey total{0, 0, 0};
      for (long long i = 0; i < p; ++i) {
        digits[i] = static_cast<int>(rem / powers[i]);
        rem %= powers[i];
        total.deg += basis[digits[i]].deg;
        total.a += basis[digits[i]].a;
        total.b += basis[digits[i]].b;
      }
      Block& blk = blocks[total];
      const long long loc = static_cast<long long>(blk.local.size());
      blk.local.emplace(t, loc);
      block_of[t] = &blk;
      local_of[t] = loc;
    }
    for (auto& [k, blk] : blocks)
      blk.mat.assign(blk.local.size(), std::vector<long long>(blk.local.size(), 0));
  }

  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> digits(p);
  do {
    const std::vector<int> word = detail::transposition_word(perm);
    const int sgn = (word.size() % 2 == 0) ? 1 : -1;
    for (long long t = 0; t < ntuples; ++t) {
      long long rem = t;
      for (long long i = 0; i < p; ++i) {
        digits[i] = static_cast<int>(rem / powers[i]);
        rem %= powers[i];
      }
      int koszul = 1;
      for (int w : word) {
        if ((basis[digits[w]].deg & 1) && (basis[digits[w + 1]].deg & 1)) koszul = -koszul;
        std::swap(digits[w], digits[w + 1]);
      }
      long long image = 0;
      for (long long i = 0; i < p; ++i) image += digits[i] * powers[i];
      Block& blk = *block_of[t];
      blk.mat[local_of[image]][local_of[t]] += sgn * koszul;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  BigradedTable out;
  for (auto& [k, blk] : blocks) {
    const long long r = detail::integer_row_rank(std::move(blk.mat));
    if (r > 0) out.add(k.deg, k.a, k.b, r);
  }
  return out;
}

}  // namespace morcoh
