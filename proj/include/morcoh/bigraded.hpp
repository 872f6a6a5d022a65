#pragma once

#include <algorithm>
#include <map>
#include <utility>

#include <json.hpp>

#include "epoly.hpp"
#include "errors.hpp"
#include "numeric.hpp"

namespace morcoh {

// One slot of a bigraded dimension table: cohomological degree plus Hodge
// bidegree.  Ordering is lexicographic (deg, a, b) — that order is also the
// canonical serialization order.
struct GradedKey {
  long long deg = 0;
  long long a = 0;
  long long b = 0;
  auto operator<=>(const GradedKey&) const = default;
};

/* Finitely supported dimension table  (k, (a, b)) -> dim >= 1.
   This is the lingua franca of the library: cohomology of a variety, one
   spectral-sequence column, an invariant subspace — all are values of this
   type.  Absent keys mean dimension zero; stored dimensions are strictly
   positive, and all indices are nonnegative. */
class BigradedTable {
 public:
  BigradedTable() = default;

  // The one-dimensional table concentrated in degree 0, Hodge type (0, 0):
  // the unit for the tensor product.
  static BigradedTable unit() {
    BigradedTable t;
    t.add(0, 0, 0, 1);
    return t;
  }

  void add(long long deg, long long a, long long b, const Int& dim) {
    if (deg < 0 || a < 0 || b < 0)
      throw math_error("bigraded table index out of range");
    if (dim == 0) return;
    const GradedKey k{deg, a, b};
    auto it = entries_.find(k);
    if (it == entries_.end()) {
      if (dim < 0) throw math_error("bigraded table dimension went negative");
      entries_.emplace(k, dim);
    } else {
      it->second += dim;
      if (it->second < 0) throw math_error("bigraded table dimension went negative");
      if (it->second == 0) entries_.erase(it);
    }
  }

  const std::map<GradedKey, Int>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  Int dim_at(long long deg, long long a, long long b) const {
    auto it = entries_.find({deg, a, b});
    return it == entries_.end() ? Int(0) : it->second;
  }

  Int total_dim() const {
    Int s = 0;
    for (const auto& [k, d] : entries_) s += d;
    return s;
  }

  // Largest populated cohomological degree; -1 for the empty table.
  long long max_degree() const {
    long long m = -1;
    for (const auto& [k, d] : entries_) m = std::max(m, k.deg);
    return m;
  }

  // Pure means every class sits on the weight diagonal a + b = deg.
  bool is_pure() const {
    for (const auto& [k, d] : entries_)
      if (k.a + k.b != k.deg) return false;
    return true;
  }

  std::map<long long, Int> dims_by_degree() const {
    std::map<long long, Int> out;
    for (const auto& [k, d] : entries_) out[k.deg] += d;
    return out;
  }

  bool operator==(const BigradedTable&) const = default;

 private:
  std::map<GradedKey, Int> entries_;
};

// Kunneth / graded tensor product: dimensions convolve over both gradings.
inline BigradedTable tensor(const BigradedTable& x, const BigradedTable& y) {
  BigradedTable out;
  for (const auto& [kx, dx] : x.entries())
    for (const auto& [ky, dy] : y.entries())
      out.add(kx.deg + ky.deg, kx.a + ky.a, kx.b + ky.b, dx * dy);
  return out;
}

/* Poincare-duality reindexing against a smooth ambient of complex dimension n:
   (k, (a, b)) -> (2n - k, (n - a, n - b)).  The input must fit inside the
   duality box, otherwise the operation is meaningless. */
inline BigradedTable dual_shift(const BigradedTable& t, long long n) {
  if (n < 0) throw input_error("dual_shift: negative dimension");
  BigradedTable out;
  for (const auto& [k, d] : t.entries()) {
    if (k.deg > 2 * n || k.a > n || k.b > n)
      throw math_error("table exceeds duality dimension");
    out.add(2 * n - k.deg, n - k.a, n - k.b, d);
  }
  return out;
}

// Cohomology of P^m: one class of type (j, j) in each even degree 2j, j <= m.
// m = -1 is allowed and yields the empty table (the "empty projective space"
// convention used when a stratum degenerates away).
inline BigradedTable projective_space_table(long long m) {
  if (m < -1) throw input_error("projective_space_table: dimension below -1");
  BigradedTable t;
  for (long long j = 0; j <= m; ++j) t.add(2 * j, j, j, 1);
  return t;
}

// Free exterior algebra on q classes of type (1, 0) and q of type (0, 1):
// the cohomology of a q-dimensional complex torus.  Degree-i piece has
// dimension C(q, a) * C(q, b) at Hodge type (a, b), a + b = i.
inline BigradedTable pic_table(long long q) {
  if (q < 0) throw input_error("pic_table: negative irregularity");
  BigradedTable t;
  for (long long a = 0; a <= q; ++a)
    for (long long b = 0; b <= q; ++b)
      t.add(a + b, a, b, binomial(q, a) * binomial(q, b));
  return t;
}

// E-polynomial: sum over entries of (-1)^deg * dim * u^a v^b.
inline EPolynomial e_polynomial(const BigradedTable& t) {
  EPolynomial p;
  for (const auto& [k, d] : t.entries())
    p.add(k.a, k.b, (k.deg % 2 == 0) ? d : -d);
  return p;
}

/* Canonical JSON form: an array of {"deg", "hodge": [a, b], "dim"} objects
   sorted by (deg, a, b).  Parsing accepts entries in any order and merges
   duplicates, but rejects nonpositive dimensions and negative indices. */
inline nlohmann::ordered_json to_json(const BigradedTable& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [k, d] : t.entries()) {
    nlohmann::ordered_json e;
    e["deg"] = k.deg;
    e["hodge"] = {k.a, k.b};
    e["dim"] = to_ll(d, "table dimension");
    arr.push_back(std::move(e));
  }
  return arr;
}

inline BigradedTable table_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw input_error("bigraded table: expected a JSON array");
  BigradedTable t;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("deg") || !e.contains("hodge") || !e.contains("dim"))
      throw input_error("bigraded table entry needs deg, hodge, dim");
    if (!e["deg"].is_number_integer() || !e["dim"].is_number_integer())
      throw input_error("bigraded table entry: deg and dim must be integers");
    const auto& h = e["hodge"];
    if (!h.is_array() || h.size() != 2 || !h[0].is_number_integer() || !h[1].is_number_integer())
      throw input_error("bigraded table entry: hodge must be a pair of integers");
    const long long deg = e["deg"].get<long long>();
    const long long a = h[0].get<long long>();
    const long long b = h[1].get<long long>();
    const long long d = e["dim"].get<long long>();
    if (deg < 0 || a < 0 || b < 0)
      throw input_error("bigraded table entry: indices must be nonnegative");
    if (d < 1) throw input_error("bigraded table entry: dim must be >= 1");
    t.add(deg, a, b, d);
  }
  return t;
}

}  // namespace morcoh
