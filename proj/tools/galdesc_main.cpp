#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "galdesc/scenario.hpp"
#include "galdesc/verify.hpp"

namespace {

// Exit codes: 0 ok, 1 validation or parse error, 2 theorem-check failure,
// 3 budget exceeded. Theorem failures outrank budget ones, which outrank
// validation ones.
int exit_code_for(const galdesc::Report& report) {
  bool theorem = false, budget = false, validation = false;
  for (const auto& t : report.tasks) {
    if (t.status == "theorem-error") theorem = true;
    if (t.status == "budget-error") budget = true;
    if (t.status == "validation-error") validation = true;
  }
  if (theorem) return 2;
  if (budget) return 3;
  if (validation) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-level Galois descent engine"};
  app.require_subcommand(1);

  galdesc::SearchBudget budget;
  app.add_option("--max-total-order", budget.max_total_order,
                 "largest group order the engine will construct")
      ->capture_default_str();
  app.add_option("--max-hom-search", budget.max_candidates,
                 "largest candidate count per enumeration")
      ->capture_default_str();

  std::string scenario_path;
  bool parallel = false;
  CLI::App* run = app.add_subcommand("run", "execute a scenario file");
  run->add_option("scenario", scenario_path, "path to a scenario file")
      ->required();
  run->add_flag("--parallel", parallel,
                "run tasks concurrently; the report order stays by index");

  CLI::App* catalog = app.add_subcommand("catalog", "list the group catalog");

  galdesc::VerifyOptions vopt;
  CLI::App* verify =
      app.add_subcommand("verify", "run the property suites over the sweep");
  verify->add_option("--max-gamma", vopt.gamma_cap,
                     "largest split extension exercised")
      ->capture_default_str();
  verify->add_option("--max-sections", vopt.section_cap,
                     "sections processed per extension")
      ->capture_default_str();
  verify->add_option("--sweep-g", vopt.sweep_g, "kernel groups of the sweep")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--sweep-q", vopt.sweep_q, "quotient groups of the sweep")
      ->delimiter(',')
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*catalog) {
      std::cout << galdesc::catalog_listing();
      return 0;
    }
    if (*run) {
      galdesc::Report report =
          galdesc::run_scenario_file(scenario_path, budget, parallel);
      std::cout << report.to_text();
      for (const auto& t : report.tasks)
        std::cerr << "task " << t.index << " (" << t.kind << "): "
                  << t.millis << " ms\n";
      return exit_code_for(report);
    }
    if (*verify) {
      vopt.budget = budget;
      auto results = galdesc::verify_all(vopt);
      std::cout << galdesc::verify_report_text(results);
      return galdesc::all_passed(results) ? 0 : 2;
    }
  } catch (const galdesc::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 3;
  } catch (const galdesc::TheoremViolation& e) {
    std::cerr << "theorem-check failure: " << e.what() << "\n";
    return 2;
  } catch (const galdesc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
