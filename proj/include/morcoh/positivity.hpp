#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "errors.hpp"
#include "numeric.hpp"

namespace morcoh {

/* Intersection-number minima of an ample class L on an n-fold:
   m_k = min over k-dimensional subvarieties W of L^k . W, for k = 1..n.
   These are the only inputs the point-separation criterion consumes. */
struct IntersectionMinima {
  long long n = 0;
  std::map<long long, Int> m;  // k -> m_k

  static IntersectionMinima create(long long n, std::map<long long, Int> m) {
    if (n < 1) throw input_error("intersection minima: dimension must be >= 1");
    for (long long k = 1; k <= n; ++k) {
      auto it = m.find(k);
      if (it == m.end())
        throw input_error("intersection minima: missing m_" + std::to_string(k));
      if (it->second < 1)
        throw input_error("intersection minima: m_" + std::to_string(k) +
                          " must be >= 1");
    }
    if (static_cast<long long>(m.size()) != n)
      throw input_error("intersection minima: entries outside 1..n");
    return IntersectionMinima{n, std::move(m)};
  }
};

/* Separation test: the adjoint class separates any r points as soon as

       (m_k)^{1/k} > (1/2) n (n + 2r - 1)   for every k = 1..n,

   checked without roots or floats as  2^k m_k > (n (n + 2r - 1))^k. */
inline bool separates_r(const IntersectionMinima& mins, const Int& r) {
  if (r < 1) throw input_error("separates_r: r must be >= 1");
  const Int base = Int(mins.n) * (Int(mins.n) + 2 * r - 1);
  for (long long k = 1; k <= mins.n; ++k) {
    const Int lhs = pow_int(Int(2), k) * mins.m.at(k);
    if (lhs <= pow_int(base, k)) return false;
  }
  return true;
}

/* Largest r for which separates_r holds (0 when even r = 1 fails).  The
   criterion is monotone in r — the right side grows with r — so binary
   search applies.  The k = 1 condition 2 m_1 > n (n + 2r - 1) already forces
   r < m_1, bounding the search. */
inline Int r_operational(const IntersectionMinima& mins) {
  if (!separates_r(mins, 1)) return 0;
  Int lo = 1;                 // known true
  Int hi = mins.m.at(1) + 1;  // known false
  while (hi - lo > 1) {
    const Int mid = (lo + hi) / 2;
    if (separates_r(mins, mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

enum class FormulaVariant { A, B };

/* Closed-form bound

       r = floor( min_k ( (m_k)^{1/k} - n^2 + n ) / 2 ... )

   evaluated exactly: with s = floor(m_k^{1/k}), the k-th term's floor is
       t_k - (n^2 - n) / 2   where  t_k = s if 2^k m_k >= (2s+1)^k else s - 1,
   because floor(x - c) = floor(x) - c needs c integral — here the constant is
   n(n-1)/2, an integer — and floor(m^{1/k} ... ) compares the half-integer
   grid via the doubled, k-th-powered inequality.  Variants A and B differ by
   a trailing "- 1": two published forms of the same bound disagree, and both
   are exposed so the discrepancy is visible rather than silently resolved.
   floor(min) = min(floor), so the minimum can be taken after flooring. */
inline Int r_formula(const IntersectionMinima& mins, FormulaVariant variant) {
  const Int half_const = (Int(mins.n) * mins.n - mins.n) / 2;
  bool first = true;
  Int best = 0;
  for (long long k = 1; k <= mins.n; ++k) {
    const Int m = mins.m.at(k);
    const Int s = floor_kth_root(m, k);
    const Int doubled = pow_int(Int(2), k) * m;
    const Int t = (doubled >= pow_int(2 * s + 1, k)) ? s : s - 1;
    const Int term = t - half_const;
    if (first || term < best) {
      best = term;
      first = false;
    }
  }
  return variant == FormulaVariant::A ? best : best - 1;
}

struct SeparationReport {
  Int r_operational;
  Int r_formula_a;
  Int r_formula_b;
};

// The operational (search-based) value is ground truth; formula values are
// reported alongside, with structured warnings whenever they disagree with
// it or with each other.
inline SeparationReport separation_report(const IntersectionMinima& mins,
                                          WarningSink& warnings) {
  SeparationReport rep{r_operational(mins), r_formula(mins, FormulaVariant::A),
                       r_formula(mins, FormulaVariant::B)};
  if (rep.r_formula_a != rep.r_formula_b)
    warn(warnings, "formula_discrepancy",
         "closed-form variants disagree: A = " + rep.r_formula_a.str() +
             ", B = " + rep.r_formula_b.str() +
             "; the operational bound r = " + rep.r_operational.str() +
             " is authoritative");
  if (rep.r_formula_a > rep.r_operational || rep.r_formula_b > rep.r_operational)
    warn(warnings, "formula_exceeds_operational",
         "a closed-form value exceeds the operational bound r = " +
             rep.r_operational.str() + "; only the operational bound is certified");
  return rep;
}

// JSON form: {"dim": n, "minima": {"1": m_1, ...}}.
inline nlohmann::ordered_json to_json(const IntersectionMinima& mins) {
  nlohmann::ordered_json j;
  j["dim"] = mins.n;
  nlohmann::ordered_json m;
  for (const auto& [k, v] : mins.m)
    m[std::to_string(k)] = to_ll(v, "intersection minimum");
  j["minima"] = std::move(m);
  return j;
}

inline IntersectionMinima minima_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("minima"))
    throw input_error("intersection minima: need dim and minima");
  if (!j["dim"].is_number_integer())
    throw input_error("intersection minima: dim must be an integer");
  if (!j["minima"].is_object())
    throw input_error("intersection minima: minima must be an object");
  std::map<long long, Int> m;
  for (const auto& [key, val] : j["minima"].items()) {
    long long k;
    try {
      size_t pos = 0;
      k = std::stoll(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw input_error("intersection minima: bad index " + key);
    }
    if (!val.is_number_integer())
      throw input_error("intersection minima: m_" + key + " must be an integer");
    m[k] = Int(val.get<long long>());
  }
  return IntersectionMinima::create(j["dim"].get<long long>(), std::move(m));
}

}  // namespace morcoh
