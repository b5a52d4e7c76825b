#pragma once

#include <string>
#include <vector>

#include "galdesc/io.hpp"

namespace galdesc {

struct TaskResult {
  int index = 0;
  std::string kind;
  std::string status;  // "ok", "validation-error", "budget-error", "theorem-error"
  Json result;         // present when status == "ok"
  std::string error;   // present otherwise
  double millis = 0;   // wall time; excluded from serialized reports
};

struct Report {
  std::string status;  // "ok" or "error"
  std::vector<TaskResult> tasks;

  /// Deterministic serialization: identical scenarios give identical
  /// bytes. Timings are deliberately left out.
  std::string to_text() const;
};

/// Executes the tasks of a parsed scenario in order. A failing task is
/// recorded and the remaining tasks still run. Task kinds:
/// descent, sections, twist-count, classify-models, specialization,
/// cohomology, obstruction.
///
/// With parallel = true the tasks run concurrently; the report still lists
/// them by task index and its bytes match the sequential run.
Report run_scenario(const Json& scenario, const SearchBudget& budget = {},
                    bool parallel = false);

/// Parses and runs a scenario file. Parse errors are reported with the
/// byte position.
Report run_scenario_file(const std::string& path,
                         const SearchBudget& budget = {},
                         bool parallel = false);

/// Catalog names with order, center order and automorphism group order.
std::string catalog_listing();

}  // namespace galdesc
