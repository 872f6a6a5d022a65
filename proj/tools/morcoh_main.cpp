// Command-line front end: every subcommand reads one self-describing problem
// file (or, for the oracles, a couple of scalar options), computes with exact
// arithmetic, and prints either a JSON envelope or a fixed-width text report.
//
// Exit codes: 0 success, 1 selfcheck failure, 2 malformed or out-of-range
// input, 3 mathematically inconsistent input data, 4 valid input whose answer
// cannot be certified.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "morcoh/commands.hpp"
#include "morcoh/errors.hpp"
#include "morcoh/selfcheck.hpp"

namespace {

struct OutputChoice {
  bool text = false;
};

void add_format_flags(CLI::App* cmd, OutputChoice& choice) {
  auto* text = cmd->add_flag("--text", choice.text, "fixed-width text output");
  cmd->add_flag("--json", "JSON output (default)")->excludes(text);
}

morcoh::ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw morcoh::input_error("cannot open problem file " + path);
  nlohmann::json j;
  in >> j;
  return morcoh::ProblemFile::parse(j);
}

void emit(const morcoh::CommandOutput& out, const OutputChoice& choice) {
  if (choice.text)
    std::cout << morcoh::render_text(out);
  else
    std::cout << morcoh::envelope(out).dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bigraded first-page calculator for spaces of algebraic morphisms"};
  app.require_subcommand(1);

  std::string problem_path;
  OutputChoice choice;
  std::string cutoff_override;

  struct FileCommand {
    const char* name;
    const char* help;
    morcoh::CommandOutput (*run)(const morcoh::ProblemFile&);
  };
  const FileCommand file_commands[] = {
      {"hrr", "section count of the twisting class via HRR", morcoh::run_hrr},
      {"rd", "point-separation bounds from intersection minima", morcoh::run_rd},
      {"e1", "assemble the first page", morcoh::run_e1},
      {"epoly", "E-polynomial of the morphism space", morcoh::run_epoly},
      {"stable", "stable window and codimension ledger", morcoh::run_stable},
      {"bounds", "weight-filtered dimension brackets", morcoh::run_bounds},
  };
  for (const auto& fc : file_commands) {
    auto* cmd = app.add_subcommand(fc.name, fc.help);
    cmd->add_option("problem", problem_path, "problem file (JSON)")->required();
    add_format_flags(cmd, choice);
    cmd->add_option("--cutoff", cutoff_override,
                    "override flags.cutoff_variant (r+1 or r-1)")
        ->check(CLI::IsMember({"r+1", "r-1"}));
    cmd->callback([&, run = fc.run] {
      morcoh::ProblemFile f = load_problem(problem_path);
      if (!cutoff_override.empty())
        f.cutoff = cutoff_override == "r+1" ? morcoh::CutoffVariant::RPlusOne
                                            : morcoh::CutoffVariant::RMinusOne;
      emit(run(f), choice);
    });
  }

  auto* oracle = app.add_subcommand("oracle", "independent cross-check computations");
  std::optional<long long> mor_p1_degree;
  std::optional<long long> les_target;
  long long oracle_cap = 12;
  std::string ranks_path;
  oracle->add_option("--mor-p1", mor_p1_degree,
                     "E-polynomial of Mor_d(P^1, P^1) by stratification recursion");
  oracle->add_option("--les", les_target,
                     "H_c table of Mor_1(P^1, P^N) by the complement sequence");
  oracle->add_option("--cap", oracle_cap, "recursion depth cap (default 12)");
  oracle->add_option("--ranks", ranks_path,
                     "JSON file of restriction ranks {degree: rank} for --les");
  add_format_flags(oracle, choice);
  oracle->callback([&] {
    if (mor_p1_degree.has_value() == les_target.has_value())
      throw morcoh::input_error("oracle: pass exactly one of --mor-p1 or --les");
    if (mor_p1_degree) {
      emit(morcoh::run_oracle_mor_p1(*mor_p1_degree, oracle_cap), choice);
      return;
    }
    std::optional<nlohmann::json> ranks;
    if (!ranks_path.empty()) {
      std::ifstream in(ranks_path);
      if (!in) throw morcoh::input_error("cannot open ranks file " + ranks_path);
      nlohmann::json j;
      in >> j;
      ranks = std::move(j);
    }
    emit(morcoh::run_oracle_les(*les_target, ranks), choice);
  });

  auto* selfcheck = app.add_subcommand("selfcheck", "run the built-in cross-check suite");
  add_format_flags(selfcheck, choice);
  bool selfcheck_failed = false;
  selfcheck->callback([&] {
    const morcoh::CommandOutput out = morcoh::run_selfcheck_command();
    emit(out, choice);
    selfcheck_failed = !out.result["all_passed"].get<bool>();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const morcoh::capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const morcoh::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const morcoh::inconclusive_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const morcoh::math_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return 2;
  }
  return selfcheck_failed ? 1 : 0;
}
