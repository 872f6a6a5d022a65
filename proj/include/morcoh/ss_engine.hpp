#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bigraded.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "sym_invariants.hpp"

namespace morcoh {

/* Targets for the morphism space Mor_d(X, Y).

   PN: Y = P^N.  Every stratum of the source filtration fibers over a
   configuration stratum with projective-space fiber whose dimension drops
   linearly with the stratum level, so the whole first page is computable.

   GenericY: the fibration structure is the same but the fiber cohomology is
   not determined by N alone; the caller supplies per-level fiber tables (and
   the ambient level-0 table).  Levels with no supplied table yield columns in
   an explicitly inconclusive state rather than a guess. */
struct PNTarget {
  long long N = 1;
};

struct GenericYTarget {
  long long N = 1;
  BigradedTable ambient;                        // level-0 section-space table
  std::map<long long, BigradedTable> fibers;    // level p >= 1 -> fiber table
};

using Target = std::variant<PNTarget, GenericYTarget>;

/* One morphism-space problem, fully resolved: the source X enters through its
   pure cohomology table, complex dimension n and irregularity q; the section
   count N_d and the validity cutoff r_d come precomputed (by HRR and the
   separation bound, respectively).  Acyclicity of the twisting class is an
   assertion the caller makes; it is carried, not verified. */
struct MapSpaceProblem {
  BigradedTable x_cohomology;
  long long n = 1;
  long long q_irr = 0;
  Target target;
  Int n_d = 1;  // sections of the degree-d class
  Int r_d = 0;  // certified validity cutoff
  bool acyclic_asserted = false;

  static MapSpaceProblem create(BigradedTable x, long long n, long long q_irr,
                                Target target, Int n_d, Int r_d,
                                bool acyclic_asserted) {
    if (n < 1) throw input_error("map-space problem: source dimension must be >= 1");
    if (q_irr < 0) throw input_error("map-space problem: negative irregularity");
    if (n_d < 1) throw input_error("map-space problem: N_d must be >= 1");
    if (r_d < 0) throw input_error("map-space problem: negative validity cutoff");
    if (!x.is_pure())
      throw input_error("map-space problem: source table must be pure (a + b = deg)");
    if (x.max_degree() > 2 * n)
      throw input_error("map-space problem: source table exceeds degree 2n");
    if (x.dim_at(0, 0, 0) != 1 || x.dims_by_degree()[0] != 1)
      throw input_error("map-space problem: degree 0 must be one-dimensional of type (0,0)");
    if (x.dims_by_degree()[1] != 2 * q_irr ||
        x.dim_at(1, 1, 0) != q_irr || x.dim_at(1, 0, 1) != q_irr)
      throw input_error("map-space problem: degree 1 must be q_irr classes of type "
                        "(1,0) and q_irr of type (0,1)");
    for (const auto& [k, d] : x.entries())
      if (x.dim_at(2 * n - k.deg, n - k.a, n - k.b) != d)
        throw input_error("map-space problem: source table violates duality symmetry");
    const long long N = std::holds_alternative<PNTarget>(target)
                            ? std::get<PNTarget>(target).N
                            : std::get<GenericYTarget>(target).N;
    if (N < 1) throw input_error("map-space problem: target dimension must be >= 1");
    return MapSpaceProblem{std::move(x), n, q_irr, std::move(target),
                           std::move(n_d), std::move(r_d), acyclic_asserted};
  }

  long long target_dim() const {
    return std::holds_alternative<PNTarget>(target) ? std::get<PNTarget>(target).N
                                                    : std::get<GenericYTarget>(target).N;
  }
  bool is_pn() const { return std::holds_alternative<PNTarget>(target); }
};

/* The first page is certified in columns p <= cutoff; two readings of the
   cutoff are in circulation (r_d + 1 from the sharpened comparison, r_d - 1
   from the conservative one) and both are supported.  The default is the
   sharp one. */
enum class CutoffVariant { RPlusOne, RMinusOne };

inline const char* cutoff_name(CutoffVariant v) {
  return v == CutoffVariant::RPlusOne ? "r+1" : "r-1";
}

struct E1Column {
  long long p = 0;
  // Absent table = inconclusive: the level's fiber data was not supplied.
  std::optional<BigradedTable> table;

  bool operator==(const E1Column&) const = default;
};

struct E1Page {
  long long p_max = 0;
  bool complete = false;  // true iff columns beyond p_max are certified zero
  CutoffVariant cutoff = CutoffVariant::RPlusOne;
  std::vector<E1Column> columns;  // index == p, 0..p_max

  const E1Column& column(long long p) const { return columns.at(p); }
  bool operator==(const E1Page&) const = default;
};

/* First-page assembly.  Column 0 is the cohomology of the full section space
   (for P^N: the q_irr-torus times P^{(N+1) N_d - 1}).  Column p >= 1 is

       dual_shift(signed_invariants(H(X), p), n p)
         (x) torus factor
         (x) fiber at level p,

   where for P^N the fiber is P^{(N_d - p)(N + 1) - 1}, empty once the
   exponent drops below zero — that is exactly the column-vanishing mechanism
   that truncates the page for large p. */
inline E1Page assemble_e1(const MapSpaceProblem& prob,
                          CutoffVariant variant = CutoffVariant::RPlusOne) {
  E1Page page;
  page.cutoff = variant;
  const long long r_d = to_ll(prob.r_d, "validity cutoff");
  page.p_max = variant == CutoffVariant::RPlusOne ? r_d + 1 : std::max(0LL, r_d - 1);
  const long long N = prob.target_dim();
  const Int n_d = prob.n_d;
  page.complete = prob.is_pn() && n_d <= page.p_max;

  const BigradedTable torus = pic_table(prob.q_irr);
  for (long long p = 0; p <= page.p_max; ++p) {
    E1Column col;
    col.p = p;
    if (p == 0) {
      if (prob.is_pn()) {
        const long long m = to_ll((N + 1) * n_d - 1, "section space dimension");
        col.table = tensor(torus, projective_space_table(m));
      } else {
        col.table = std::get<GenericYTarget>(prob.target).ambient;
      }
    } else {
      const BigradedTable core =
          dual_shift(signed_invariants(prob.x_cohomology, p), prob.n * p);
      if (prob.is_pn()) {
        const Int fiber_dim_big = (n_d - p) * (N + 1) - 1;
        const long long fiber_dim =
            fiber_dim_big < -1 ? -1 : to_ll(fiber_dim_big, "fiber dimension");
        col.table = tensor(tensor(core, torus), projective_space_table(fiber_dim));
      } else {
        const auto& fibers = std::get<GenericYTarget>(prob.target).fibers;
        auto it = fibers.find(p);
        if (it == fibers.end()) {
          col.table = std::nullopt;  // no fiber data -> inconclusive column
        } else {
          col.table = tensor(tensor(core, torus), it->second);
        }
      }
    }
    page.columns.push_back(std::move(col));
  }
  return page;
}

/* Alternating sum of column E-polynomials.  Meaningful only when the page is
   complete (all columns past p_max certified zero) and every column within
   range is known. */
inline EPolynomial e_polynomial_of_mor(const E1Page& page) {
  if (!page.complete)
    throw inconclusive_error(
        "inconclusive: columns beyond validity cutoff not certified zero");
  EPolynomial total;
  for (const auto& col : page.columns) {
    if (!col.table)
      throw inconclusive_error("inconclusive: column " + std::to_string(col.p) +
                               " has no fiber data");
    EPolynomial contrib = e_polynomial(*col.table);
    if (col.p % 2 == 1) contrib = -contrib;
    total += contrib;
  }
  return total;
}

/* Stable-window report for the P^N case: in total degrees within the window
   the page degenerates (no differentials can move mass), so first-page
   dimensions are actual compactly-supported dimensions.

   M = q_irr + (N+1) N_d - 1 is the complex dimension of the morphism space;
   the window is q in [M - r_d, M] against columns p <= r_d + 1.  The report
   carries the discriminant codimension n N and the per-level codimension
   lower bounds (level r cuts codimension at least (r+1) n N). */
struct StableWindowReport {
  long long p_hi = 0;
  Int q_lo, q_hi;
  Int mor_dim;
  long long discriminant_codim = 0;
  std::vector<std::pair<long long, Int>> level_codim_bounds;  // (level, bound)
};

inline StableWindowReport stable_window(const MapSpaceProblem& prob,
                                        WarningSink& warnings) {
  if (!prob.is_pn())
    throw input_error("stable window: only available for projective-space targets");
  const long long N = prob.target_dim();
  StableWindowReport rep;
  const long long r_d = to_ll(prob.r_d, "validity cutoff");
  rep.p_hi = r_d + 1;
  rep.mor_dim = Int(prob.q_irr) + (N + 1) * prob.n_d - 1;
  rep.q_lo = rep.mor_dim - prob.r_d;
  rep.q_hi = rep.mor_dim;
  if (rep.q_lo < 0) rep.q_lo = 0;
  rep.discriminant_codim = prob.n * N;
  for (long long r = 0; r <= r_d + 1; ++r)
    rep.level_codim_bounds.push_back({r, Int(r + 1) * prob.n * N});
  warn(warnings, "window_ambiguity",
       "the window edge q = " + rep.q_lo.str() +
           " depends on the validity cutoff convention; rows below it are not "
           "certified stable");
  return rep;
}

/* Weight-filtered dimension brackets for H_c of the morphism space.

   Upper bound: total first-page mass of weight w in total degree D.  Lower
   bound: that mass minus everything of the same weight in adjacent total
   degrees, clamped at zero — differentials on every later page shift total
   degree by exactly one and preserve weight, so only adjacent-degree mass of
   equal weight can cancel.

   A caller who has computed genuine first-differential ranks can pass them
   in: each rank eats into the source and target cells (same weight, adjacent
   columns) before the bracket is formed, and is validated against the
   available dimensions. */
struct D1Rank {
  long long p = 0;
  long long q = 0;
  long long weight = 0;
  Int rank;
};

struct WeightBracket {
  Int lower, upper;
  bool operator==(const WeightBracket&) const = default;
};

inline std::map<std::pair<long long, long long>, WeightBracket> weight_bounds(
    const E1Page& page, const std::vector<D1Rank>& d1_ranks = {}) {
  if (!page.complete)
    throw inconclusive_error(
        "inconclusive: columns beyond validity cutoff not certified zero");
  // (p, q, w) -> dimension, with w = a + b.
  std::map<std::tuple<long long, long long, long long>, Int> cell;
  for (const auto& col : page.columns) {
    if (!col.table)
      throw inconclusive_error("inconclusive: column " + std::to_string(col.p) +
                               " has no fiber data");
    for (const auto& [k, d] : col.table->entries())
      cell[{col.p, k.deg, k.a + k.b}] += d;
  }
  for (const auto& r : d1_ranks) {
    if (r.rank < 0) throw input_error("d1 rank data: negative rank");
    if (r.rank == 0) continue;
    auto src = cell.find({r.p, r.q, r.weight});
    auto dst = cell.find({r.p + 1, r.q, r.weight});
    if (src == cell.end() || src->second < r.rank || dst == cell.end() ||
        dst->second < r.rank)
      throw math_error("d1 rank data inconsistent with first-page dimensions");
    src->second -= r.rank;
    dst->second -= r.rank;
    if (src->second == 0) cell.erase(src);
    if (dst->second == 0) cell.erase(dst);
  }
  std::map<std::pair<long long, long long>, Int> mass;  // (D, w) -> dim
  for (const auto& [key, d] : cell)
    mass[{std::get<0>(key) + std::get<1>(key), std::get<2>(key)}] += d;
  std::map<std::pair<long long, long long>, WeightBracket> out;
  for (const auto& [key, upper] : mass) {
    const auto [D, w] = key;
    Int adjacent = 0;
    if (auto it = mass.find({D - 1, w}); it != mass.end()) adjacent += it->second;
    if (auto it = mass.find({D + 1, w}); it != mass.end()) adjacent += it->second;
    Int lower = upper - adjacent;
    if (lower < 0) lower = 0;
    out[key] = WeightBracket{std::move(lower), upper};
  }
  return out;
}

/* Page serialization: {"p_max", "complete", "cutoff", "cells": [{"p",
   "table"} or {"p", "inconclusive": true}]}. */
inline nlohmann::ordered_json to_json(const E1Page& page) {
  nlohmann::ordered_json j;
  j["p_max"] = page.p_max;
  j["complete"] = page.complete;
  j["cutoff"] = cutoff_name(page.cutoff);
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const auto& col : page.columns) {
    nlohmann::ordered_json c;
    c["p"] = col.p;
    if (col.table)
      c["table"] = to_json(*col.table);
    else
      c["inconclusive"] = true;
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  return j;
}

}  // namespace morcoh
