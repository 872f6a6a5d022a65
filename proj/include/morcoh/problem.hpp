#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bigraded.hpp"
#include "chow.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "positivity.hpp"
#include "ss_engine.hpp"

namespace morcoh {

/* A problem file is one self-describing JSON object:

     {
       "variety": {"preset": "projective_space", "params": {"n": 1}}
                  | {"inline": {"dim", "q_irr", "hodge_table",
                                "ring", "todd", "minima"}},   // parts optional
       "degree":  1 | {"h1": 2, "h2": 3} | [2, 3],
       "target":  {"kind": "projective_space", "N": 1}
                  | {"kind": "generic", "N", "ambient", "fibers": {"1": [...]}},
       "flags":   {"acyclic": true, "cutoff_variant": "r+1"},
       "minima":  {...},      // optional override of derived minima
       "d1_ranks": [{"p", "q", "weight", "rank"}]   // optional
     }

   Each subcommand consumes only the parts it needs; a missing part is an
   input error at resolution time, not at parse time, so e.g. a minima-only
   file is a perfectly good input for the separation-bound command. */
struct ProblemFile {
  // variety
  std::string preset_name;       // empty for inline varieties
  nlohmann::json preset_params;  // params object for presets
  std::optional<long long> inline_dim;
  std::optional<long long> inline_q_irr;
  std::optional<BigradedTable> inline_hodge;
  std::optional<RingPresentation> inline_ring;
  nlohmann::json inline_todd;  // parsed against the ring at resolve time
  std::optional<IntersectionMinima> minima_override;

  nlohmann::json degree;  // interpreted against the ring

  // target
  bool has_target = false;
  bool target_is_pn = false;
  long long target_n = 1;
  nlohmann::json target_ambient;
  nlohmann::json target_fibers;

  bool acyclic = false;
  CutoffVariant cutoff = CutoffVariant::RPlusOne;
  std::vector<D1Rank> d1_ranks;

  static ProblemFile parse(const nlohmann::json& j);
};

inline ProblemFile ProblemFile::parse(const nlohmann::json& j) {
  if (!j.is_object()) throw input_error("problem file: expected a JSON object");
  ProblemFile f;

  if (!j.contains("variety") || !j["variety"].is_object())
    throw input_error("problem file: missing variety object");
  const auto& v = j["variety"];
  if (v.contains("preset")) {
    if (!v["preset"].is_string())
      throw input_error("problem file: variety.preset must be a string");
    f.preset_name = v["preset"].get<std::string>();
    f.preset_params = v.value("params", nlohmann::json::object());
    if (!f.preset_params.is_object())
      throw input_error("problem file: variety.params must be an object");
  } else if (v.contains("inline")) {
    const auto& in = v["inline"];
    if (!in.is_object())
      throw input_error("problem file: variety.inline must be an object");
    if (in.contains("dim")) {
      if (!in["dim"].is_number_integer())
        throw input_error("problem file: inline dim must be an integer");
      f.inline_dim = in["dim"].get<long long>();
    }
    if (in.contains("q_irr")) {
      if (!in["q_irr"].is_number_integer())
        throw input_error("problem file: inline q_irr must be an integer");
      f.inline_q_irr = in["q_irr"].get<long long>();
    }
    if (in.contains("hodge_table")) f.inline_hodge = table_from_json(in["hodge_table"]);
    if (in.contains("ring")) f.inline_ring = ring_from_json(in["ring"]);
    if (in.contains("todd")) f.inline_todd = in["todd"];
    if (in.contains("minima")) f.minima_override = minima_from_json(in["minima"]);
  } else {
    throw input_error("problem file: variety needs either preset or inline");
  }
  if (j.contains("minima")) f.minima_override = minima_from_json(j["minima"]);

  if (j.contains("degree")) f.degree = j["degree"];

  if (j.contains("target")) {
    const auto& t = j["target"];
    if (!t.is_object() || !t.contains("kind") || !t["kind"].is_string())
      throw input_error("problem file: target needs a kind");
    const std::string kind = t["kind"].get<std::string>();
    if (!t.contains("N") || !t["N"].is_number_integer())
      throw input_error("problem file: target needs integer N");
    f.has_target = true;
    f.target_n = t["N"].get<long long>();
    if (kind == "projective_space") {
      f.target_is_pn = true;
    } else if (kind == "generic") {
      f.target_is_pn = false;
      if (!t.contains("ambient"))
        throw input_error("problem file: generic target needs an ambient table");
      f.target_ambient = t["ambient"];
      f.target_fibers = t.value("fibers", nlohmann::json::object());
      if (!f.target_fibers.is_object())
        throw input_error("problem file: target.fibers must be an object");
    } else {
      throw input_error("problem file: unknown target kind " + kind);
    }
  }

  if (j.contains("flags")) {
    const auto& fl = j["flags"];
    if (!fl.is_object()) throw input_error("problem file: flags must be an object");
    if (fl.contains("acyclic")) {
      if (!fl["acyclic"].is_boolean())
        throw input_error("problem file: flags.acyclic must be a boolean");
      f.acyclic = fl["acyclic"].get<bool>();
    }
    if (fl.contains("cutoff_variant")) {
      const std::string c = fl["cutoff_variant"].get<std::string>();
      if (c == "r+1")
        f.cutoff = CutoffVariant::RPlusOne;
      else if (c == "r-1")
        f.cutoff = CutoffVariant::RMinusOne;
      else
        throw input_error("problem file: cutoff_variant must be \"r+1\" or \"r-1\"");
    }
  }

  if (j.contains("d1_ranks")) {
    if (!j["d1_ranks"].is_array())
      throw input_error("problem file: d1_ranks must be an array");
    for (const auto& r : j["d1_ranks"]) {
      if (!r.is_object() || !r.contains("p") || !r.contains("q") ||
          !r.contains("weight") || !r.contains("rank"))
        throw input_error("problem file: d1 rank entry needs p, q, weight, rank");
      f.d1_ranks.push_back(D1Rank{r["p"].get<long long>(), r["q"].get<long long>(),
                                  r["weight"].get<long long>(),
                                  Int(r["rank"].get<long long>())});
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Resolution: from the parsed file to the typed inputs each command needs.

namespace detail {

inline long long require_int_param(const nlohmann::json& params, const char* name,
                                   const char* preset) {
  if (!params.contains(name) || !params[name].is_number_integer())
    throw input_error(std::string(preset) + " preset needs integer parameter " + name);
  return params[name].get<long long>();
}

}  // namespace detail

struct VarietyData {
  long long n = 0;
  long long q_irr = 0;
  BigradedTable hodge;
  std::optional<RingWithTodd> ring;  // absent for hodge-only inline varieties
};

inline BigradedTable curve_hodge_table(long long genus) {
  BigradedTable t;
  t.add(0, 0, 0, 1);
  if (genus > 0) {
    t.add(1, 1, 0, genus);
    t.add(1, 0, 1, genus);
  }
  t.add(2, 1, 1, 1);
  return t;
}

inline VarietyData resolve_variety(const ProblemFile& f) {
  VarietyData out;
  if (f.preset_name.empty()) {
    if (!f.inline_dim)
      throw input_error("inline variety: dim is required");
    out.n = *f.inline_dim;
    out.q_irr = f.inline_q_irr.value_or(0);
    if (f.inline_hodge) out.hodge = *f.inline_hodge;
    if (f.inline_ring) {
      RingWithTodd rt{*f.inline_ring, RingElement{}};
      if (f.inline_todd.is_null())
        throw input_error("inline variety: ring given without todd element");
      rt.todd = element_from_json(rt.ring, f.inline_todd);
      out.ring = std::move(rt);
    }
    return out;
  }
  if (f.preset_name == "projective_space") {
    const long long n = detail::require_int_param(f.preset_params, "n", "projective_space");
    out.n = n;
    out.q_irr = 0;
    out.hodge = projective_space_table(n);
    out.ring = preset_projective_space(n);
    return out;
  }
  if (f.preset_name == "curve") {
    const long long g = detail::require_int_param(f.preset_params, "genus", "curve");
    if (g < 0) throw input_error("curve preset: negative genus");
    out.n = 1;
    out.q_irr = g;
    out.hodge = curve_hodge_table(g);
    out.ring = preset_curve(g);
    return out;
  }
  if (f.preset_name == "product_of_projective_spaces") {
    const long long a = detail::require_int_param(f.preset_params, "a", "product");
    const long long b = detail::require_int_param(f.preset_params, "b", "product");
    out.n = a + b;
    out.q_irr = 0;
    out.hodge = tensor(projective_space_table(a), projective_space_table(b));
    out.ring = preset_product_of_projective_spaces(a, b);
    return out;
  }
  throw input_error("unknown variety preset " + f.preset_name);
}

// The twisting class c1(L) as a ring element, read off the degree field.
inline RingElement resolve_c1(const ProblemFile& f, const RingPresentation& R) {
  if (f.degree.is_null()) throw input_error("problem file: degree is required here");
  std::vector<int> codim1;
  for (int i = 0; i < R.basis_size(); ++i)
    if (R.codim(i) == 1) codim1.push_back(i);
  RingElement c1;
  if (f.degree.is_number_integer()) {
    if (codim1.size() != 1)
      throw input_error("degree: a bare integer needs a unique codimension-1 class; "
                        "give coefficients per class instead");
    c1.set(codim1[0], Rat(f.degree.get<long long>()));
    return c1;
  }
  if (f.degree.is_array()) {
    if (f.degree.size() != codim1.size())
      throw input_error("degree: array length must match the number of "
                        "codimension-1 classes");
    for (size_t i = 0; i < codim1.size(); ++i) {
      if (!f.degree[i].is_number_integer())
        throw input_error("degree: array entries must be integers");
      c1.set(codim1[i], Rat(f.degree[i].get<long long>()));
    }
    return c1;
  }
  if (f.degree.is_object()) {
    for (const auto& [name, val] : f.degree.items()) {
      if (!val.is_number_integer())
        throw input_error("degree: coefficient of " + name + " must be an integer");
      const int idx = R.index_of(name);
      if (R.codim(idx) != 1)
        throw input_error("degree: " + name + " is not a codimension-1 class");
      c1.set(idx, Rat(val.get<long long>()));
    }
    return c1;
  }
  throw input_error("degree: expected an integer, array, or object");
}

// Every preset knows its minima as a function of the degree; inline varieties
// must carry them explicitly.  An explicit minima block always wins.
inline IntersectionMinima resolve_minima(const ProblemFile& f) {
  if (f.minima_override) return *f.minima_override;
  if (f.preset_name == "projective_space") {
    const long long n = detail::require_int_param(f.preset_params, "n", "projective_space");
    if (!f.degree.is_number_integer())
      throw input_error("projective_space minima: degree must be an integer");
    const long long d = f.degree.get<long long>();
    const Int a = d + n + 1;  // adjoint degree: the canonical class is -(n+1)h
    if (a < 1)
      throw input_error("projective_space minima: adjoint class is not ample at "
                        "this degree");
    std::map<long long, Int> m;
    for (long long k = 1; k <= n; ++k) m[k] = pow_int(a, k);
    return IntersectionMinima::create(n, std::move(m));
  }
  if (f.preset_name == "curve") {
    const long long g = detail::require_int_param(f.preset_params, "genus", "curve");
    if (!f.degree.is_number_integer())
      throw input_error("curve minima: degree must be an integer");
    const Int m1 = Int(f.degree.get<long long>()) - 2 * g + 2;  // deg(L - K)
    if (m1 < 1)
      throw input_error("curve minima: adjoint class is not ample at this degree");
    return IntersectionMinima::create(1, {{1, m1}});
  }
  throw input_error("no intersection minima available: provide an explicit "
                    "minima block for this variety");
}

// Section count of the twisting class via HRR on the variety's ring.
inline Int resolve_n_d(const ProblemFile& f, const VarietyData& var,
                       WarningSink& warnings) {
  if (!var.ring)
    throw input_error("problem file: ring/Todd data required to compute N_d");
  const RingElement c1 = resolve_c1(f, var.ring->ring);
  if (!f.acyclic)
    warn(warnings, "acyclicity_not_asserted",
         "flags.acyclic is not set: N_d is the HRR Euler characteristic, which "
         "equals the section count only for acyclic classes");
  return hrr_sections(var.ring->ring, c1, var.ring->todd);
}

inline Target resolve_target(const ProblemFile& f) {
  if (!f.has_target) throw input_error("problem file: target is required here");
  if (f.target_is_pn) return PNTarget{f.target_n};
  GenericYTarget t;
  t.N = f.target_n;
  t.ambient = table_from_json(f.target_ambient);
  for (const auto& [key, val] : f.target_fibers.items()) {
    long long p;
    try {
      size_t pos = 0;
      p = std::stoll(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw input_error("target.fibers: bad level " + key);
    }
    if (p < 1) throw input_error("target.fibers: levels start at 1");
    t.fibers.emplace(p, table_from_json(val));
  }
  return t;
}

inline MapSpaceProblem resolve_map_space_problem(const ProblemFile& f,
                                                 WarningSink& warnings) {
  const VarietyData var = resolve_variety(f);
  if (var.hodge.empty())
    throw input_error("problem file: the variety needs a Hodge table here");
  const Int n_d = resolve_n_d(f, var, warnings);
  if (n_d < 1)
    throw input_error("problem file: the twisting class has no sections (N_d = 0)");
  const Int r_d = r_operational(resolve_minima(f));
  return MapSpaceProblem::create(var.hodge, var.n, var.q_irr, resolve_target(f),
                                 n_d, r_d, f.acyclic);
}

}  // namespace morcoh
