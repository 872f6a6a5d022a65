#pragma once

#include <map>
#include <string>

#include "bigraded.hpp"
#include "epoly.hpp"
#include "errors.hpp"
#include "numeric.hpp"

namespace morcoh {

/* Independent E-polynomial oracle for Mor_d(P^1, P^1), by inclusion-exclusion
   over resultant vanishing.  A degree-d map is a pair of degree-d binary
   forms with nonvanishing resultant, up to simultaneous scaling; forms with a
   common factor of degree j fiber over the degree-(d-j) morphism space with
   P^j worth of common factor, giving the cut-out recursion

       E(Mor_d) = E(P^{2d+1}) - sum_{j=1..d} E(P^j) * E(Mor_{d-j}),

   with Mor_0 = P^1 (constant maps).  Memoized; instances beyond the cap are
   refused rather than ground through. */
class MorP1Recursion {
 public:
  explicit MorP1Recursion(long long degree_cap = 12) : cap_(degree_cap) {
    memo_[0] = e_polynomial(projective_space_table(1));
  }

  const EPolynomial& epoly(long long d) {
    if (d < 0) throw input_error("morphism degree must be >= 0");
    if (d > cap_) throw capacity_error("oracle instance too large");
    auto it = memo_.find(d);
    if (it != memo_.end()) return it->second;
    EPolynomial total = e_polynomial(projective_space_table(2 * d + 1));
    for (long long j = 1; j <= d; ++j)
      total -= e_polynomial(projective_space_table(j)) * epoly(d - j);
    return memo_.emplace(d, std::move(total)).first->second;
  }

 private:
  long long cap_;
  std::map<long long, EPolynomial> memo_;
};

inline EPolynomial mor_p1_epoly(long long d) {
  MorP1Recursion rec;
  return rec.epoly(d);
}

/* Long-exact-sequence oracle for Mor_1(P^1, P^N): the space of parametrized
   lines is the complement of the Segre-embedded P^1 x P^N inside P^{2N+1}
   (pairs of linearly dependent sections cut out by the 2x2 minors).  For a
   closed Z in smooth ambient A, compactly-supported cohomology of U = A - Z
   sits in degree k as

       ker(H^k(A) -> H^k(Z))  (+)  coker(H^{k-1}(A) -> H^{k-1}(Z)),

   so the whole table is determined by the ranks of the restriction maps,
   which the caller supplies per degree.  Ranks are validated against both
   sides' dimensions; everything else is bookkeeping. */
struct RestrictionRanks {
  std::map<long long, Int> rank_by_degree;  // even degrees only
};

inline BigradedTable mor1_les_table(long long N, const RestrictionRanks& ranks) {
  if (N < 1) throw input_error("mor1_les_table: target dimension must be >= 1");
  if (ranks.rank_by_degree.empty())
    throw input_error("mor1_les_table: restriction rank data is empty");
  const BigradedTable ambient = projective_space_table(2 * N + 1);
  const BigradedTable segre = tensor(projective_space_table(1),
                                     projective_space_table(N));
  const auto amb_dims = ambient.dims_by_degree();
  const auto seg_dims = segre.dims_by_degree();
  auto dim_of = [](const std::map<long long, Int>& m, long long k) {
    auto it = m.find(k);
    return it == m.end() ? Int(0) : it->second;
  };
  std::map<long long, Int> rank;
  for (long long k = 0; k <= 2 * (2 * N + 1); k += 2) {
    const Int amb = dim_of(amb_dims, k);
    const Int seg = dim_of(seg_dims, k);
    const Int cap = amb < seg ? amb : seg;
    auto it = ranks.rank_by_degree.find(k);
    if (it == ranks.rank_by_degree.end()) {
      if (cap > 0)
        throw input_error("mor1_les_table: missing restriction rank in degree " +
                          std::to_string(k));
      rank[k] = 0;
      continue;
    }
    if (it->second < 0 || it->second > cap)
      throw math_error("mor1_les_table: restriction rank in degree " +
                       std::to_string(k) + " violates exactness");
    rank[k] = it->second;
  }
  for (const auto& [k, r] : ranks.rank_by_degree)
    if (k < 0 || k % 2 != 0 || k > 2 * (2 * N + 1))
      throw input_error("mor1_les_table: rank given in impossible degree " +
                        std::to_string(k));

  // Both ambient and Segre classes are pure of type (k/2, k/2); kernels keep
  // degree k, cokernels land one degree up with the same Hodge type.
  BigradedTable out;
  for (long long k = 0; k <= 2 * (2 * N + 1); k += 2) {
    const Int ker = dim_of(amb_dims, k) - rank[k];
    out.add(k, k / 2, k / 2, ker);
    const Int coker = dim_of(seg_dims, k) - rank[k];
    out.add(k + 1, k / 2, k / 2, coker);
  }
  return out;
}

/* The restriction H^*(P^{2N+1}) -> H^*(P^1 x P^N) sends the hyperplane class
   to h1 + h2, so its image in degree 2j is the line spanned by (h1 + h2)^j:
   rank 1 while that power is nonzero (j <= N + 1), then 0.  This fact is
   baked in only for N = 1; for other targets the caller must derive the
   ranks and use the explicit-data overload. */
inline BigradedTable mor1_les_table(long long N) {
  if (N != 1)
    throw input_error(
        "mor1_les_table: built-in restriction ranks exist only for N = 1; "
        "supply rank data explicitly");
  RestrictionRanks r;
  r.rank_by_degree = {{0, 1}, {2, 1}, {4, 1}};
  return mor1_les_table(1, r);
}

}  // namespace morcoh
