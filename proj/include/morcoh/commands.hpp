#pragma once

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "problem.hpp"

namespace morcoh {

/* Every subcommand produces the same package: a JSON result object, a
   fixed-width text rendering of the same content, and accumulated warnings.
   The CLI picks one rendering; tests can inspect both. */
struct CommandOutput {
  std::string command;
  nlohmann::ordered_json result;
  std::string text;
  WarningSink warnings;
};

inline nlohmann::ordered_json envelope(const CommandOutput& out) {
  nlohmann::ordered_json j;
  j["command"] = out.command;
  j["result"] = out.result;
  nlohmann::ordered_json w = nlohmann::ordered_json::array();
  for (const auto& warning : out.warnings) {
    nlohmann::ordered_json e;
    e["code"] = warning.code;
    e["message"] = warning.message;
    w.push_back(std::move(e));
  }
  j["warnings"] = std::move(w);
  return j;
}

inline std::string render_text(const CommandOutput& out) {
  std::string s = out.text;
  for (const auto& warning : out.warnings)
    s += "WARNING [" + warning.code + "]: " + warning.message + "\n";
  return s;
}

namespace detail {

inline void note_cutoff(CutoffVariant v, WarningSink& warnings) {
  warn(warnings, "cutoff_variant",
       std::string("columns are certified up to the \"") + cutoff_name(v) +
           "\" cutoff; the alternative variant \"" +
           cutoff_name(v == CutoffVariant::RPlusOne ? CutoffVariant::RMinusOne
                                                    : CutoffVariant::RPlusOne) +
           "\" is selectable via flags.cutoff_variant");
}

inline std::string e1_text(const E1Page& page) {
  std::ostringstream os;
  os << "first page (p_max = " << page.p_max << ", cutoff " << cutoff_name(page.cutoff)
     << ", complete = " << (page.complete ? "yes" : "no") << ")\n\n";
  long long q_max = 0;
  for (const auto& col : page.columns)
    if (col.table) q_max = std::max(q_max, col.table->max_degree());
  os << "      ";
  for (const auto& col : page.columns) os << std::setw(6) << ("p=" + std::to_string(col.p));
  os << "\n";
  for (long long q = q_max; q >= 0; --q) {
    os << "q=" << std::setw(3) << q << " ";
    for (const auto& col : page.columns) {
      if (!col.table) {
        os << std::setw(6) << "?";
        continue;
      }
      Int total = 0;
      for (const auto& [k, d] : col.table->entries())
        if (k.deg == q) total += d;
      os << std::setw(6) << (total == 0 ? "." : total.str());
    }
    os << "\n";
  }
  os << "\n";
  for (const auto& col : page.columns) {
    os << "column p=" << col.p << ":";
    if (!col.table) {
      os << " inconclusive (no fiber data)\n";
      continue;
    }
    if (col.table->empty()) {
      os << " zero\n";
      continue;
    }
    os << "\n";
    for (const auto& [k, d] : col.table->entries())
      os << "  q=" << std::setw(3) << k.deg << "  (" << k.a << "," << k.b
         << "): " << d.str() << "\n";
  }
  return os.str();
}

}  // namespace detail

inline CommandOutput run_hrr(const ProblemFile& f) {
  CommandOutput out;
  out.command = "hrr";
  const VarietyData var = resolve_variety(f);
  const Int n_d = resolve_n_d(f, var, out.warnings);
  out.result["N_d"] = to_ll(n_d, "N_d");
  out.text = "N_d = " + n_d.str() + "\n";
  return out;
}

inline CommandOutput run_rd(const ProblemFile& f) {
  CommandOutput out;
  out.command = "rd";
  const IntersectionMinima mins = resolve_minima(f);
  const SeparationReport rep = separation_report(mins, out.warnings);
  out.result["dim"] = mins.n;
  nlohmann::ordered_json m;
  for (const auto& [k, v] : mins.m) m[std::to_string(k)] = to_ll(v, "minimum");
  out.result["minima"] = std::move(m);
  out.result["r_operational"] = to_ll(rep.r_operational, "r_operational");
  out.result["r_formula_A"] = to_ll(rep.r_formula_a, "r_formula_A");
  out.result["r_formula_B"] = to_ll(rep.r_formula_b, "r_formula_B");
  std::ostringstream os;
  os << "separation bounds (n = " << mins.n << ")\n";
  os << "  r_operational = " << rep.r_operational.str() << "\n";
  os << "  r_formula_A   = " << rep.r_formula_a.str() << "\n";
  os << "  r_formula_B   = " << rep.r_formula_b.str() << "\n";
  out.text = os.str();
  return out;
}

inline CommandOutput run_e1(const ProblemFile& f) {
  CommandOutput out;
  out.command = "e1";
  const MapSpaceProblem prob = resolve_map_space_problem(f, out.warnings);
  const E1Page page = assemble_e1(prob, f.cutoff);
  detail::note_cutoff(f.cutoff, out.warnings);
  out.result = to_json(page);
  out.text = detail::e1_text(page);
  return out;
}

inline CommandOutput run_epoly(const ProblemFile& f) {
  CommandOutput out;
  out.command = "epoly";
  const MapSpaceProblem prob = resolve_map_space_problem(f, out.warnings);
  const E1Page page = assemble_e1(prob, f.cutoff);
  detail::note_cutoff(f.cutoff, out.warnings);
  const EPolynomial e = e_polynomial_of_mor(page);
  out.result["e_polynomial"] = to_json(e);
  out.result["string"] = e.str();
  out.text = "E_c(Mor) = " + e.str() + "\n";
  return out;
}

inline CommandOutput run_stable(const ProblemFile& f) {
  CommandOutput out;
  out.command = "stable";
  const MapSpaceProblem prob = resolve_map_space_problem(f, out.warnings);
  const StableWindowReport rep = stable_window(prob, out.warnings);
  out.result["p_range"] = {0, rep.p_hi};
  out.result["q_range"] = {to_ll(rep.q_lo, "q_lo"), to_ll(rep.q_hi, "q_hi")};
  out.result["mor_dimension"] = to_ll(rep.mor_dim, "mor_dimension");
  out.result["discriminant_codim"] = rep.discriminant_codim;
  nlohmann::ordered_json levels = nlohmann::ordered_json::array();
  for (const auto& [level, bound] : rep.level_codim_bounds) {
    nlohmann::ordered_json e;
    e["level"] = level;
    e["codim_at_least"] = to_ll(bound, "codim bound");
    levels.push_back(std::move(e));
  }
  out.result["level_codim_bounds"] = std::move(levels);
  out.result["e2_equals_einfty"] = true;
  std::ostringstream os;
  const long long N = prob.target_dim();
  os << "stable window (target P^" << N << ")\n";
  os << "  degeneration range: p in [0, " << rep.p_hi << "], q in ["
     << rep.q_lo.str() << ", " << rep.q_hi.str() << "]\n";
  os << "  dim Mor = " << rep.mor_dim.str() << "\n";
  os << "  discriminant codimension n*N = " << rep.discriminant_codim << "\n";
  os << "  level codimension lower bounds:\n";
  for (const auto& [level, bound] : rep.level_codim_bounds)
    os << "    level " << level << ": >= " << bound.str() << "\n";
  out.text = os.str();
  return out;
}

inline CommandOutput run_bounds(const ProblemFile& f) {
  CommandOutput out;
  out.command = "bounds";
  const MapSpaceProblem prob = resolve_map_space_problem(f, out.warnings);
  const E1Page page = assemble_e1(prob, f.cutoff);
  detail::note_cutoff(f.cutoff, out.warnings);
  if (!f.d1_ranks.empty())
    warn(out.warnings, "external_d1_data",
         "brackets were tightened with " + std::to_string(f.d1_ranks.size()) +
             " user-supplied first-differential rank(s); those ranks are "
             "external data, not derived here");
  const auto brackets = weight_bounds(page, f.d1_ranks);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [key, br] : brackets) {
    nlohmann::ordered_json e;
    e["degree"] = key.first;
    e["weight"] = key.second;
    e["lower"] = to_ll(br.lower, "lower bound");
    e["upper"] = to_ll(br.upper, "upper bound");
    arr.push_back(std::move(e));
  }
  out.result["brackets"] = std::move(arr);
  std::ostringstream os;
  os << "weight-filtered dimension brackets for H_c\n";
  os << "   deg  weight  lower  upper\n";
  for (const auto& [key, br] : brackets)
    os << std::setw(6) << key.first << std::setw(8) << key.second << std::setw(7)
       << br.lower.str() << std::setw(7) << br.upper.str() << "\n";
  out.text = os.str();
  return out;
}

inline CommandOutput run_oracle_mor_p1(long long d, long long cap) {
  CommandOutput out;
  out.command = "oracle";
  MorP1Recursion rec(cap);
  const EPolynomial e = rec.epoly(d);
  out.result["kind"] = "mor_p1_recursion";
  out.result["d"] = d;
  out.result["e_polynomial"] = to_json(e);
  out.result["string"] = e.str();
  out.text = "E_c(Mor_" + std::to_string(d) + "(P^1, P^1)) = " + e.str() + "\n";
  return out;
}

inline CommandOutput run_oracle_les(long long N,
                                    const std::optional<nlohmann::json>& ranks_json) {
  CommandOutput out;
  out.command = "oracle";
  BigradedTable table;
  if (ranks_json) {
    RestrictionRanks ranks;
    if (!ranks_json->is_object())
      throw input_error("restriction ranks: expected an object {degree: rank}");
    for (const auto& [key, val] : ranks_json->items()) {
      long long k;
      try {
        size_t pos = 0;
        k = std::stoll(key, &pos);
        if (pos != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw input_error("restriction ranks: bad degree " + key);
      }
      if (!val.is_number_integer())
        throw input_error("restriction ranks: rank must be an integer");
      ranks.rank_by_degree[k] = Int(val.get<long long>());
    }
    table = mor1_les_table(N, ranks);
  } else {
    table = mor1_les_table(N);
  }
  out.result["kind"] = "mor1_les";
  out.result["N"] = N;
  out.result["table"] = to_json(table);
  std::ostringstream os;
  os << "H_c table of Mor_1(P^1, P^" << N << ") via the complement sequence\n";
  for (const auto& [k, dm] : table.entries())
    os << "  deg " << std::setw(3) << k.deg << "  (" << k.a << "," << k.b
       << "): " << dm.str() << "\n";
  out.text = os.str();
  return out;
}

}  // namespace morcoh
