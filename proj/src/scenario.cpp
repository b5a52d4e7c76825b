#include "galdesc/scenario.hpp"

#include <chrono>
#include <fstream>
#include <future>
#include <sstream>

#include "galdesc/catalog.hpp"
#include "galdesc/descent.hpp"
#include "galdesc/homsearch.hpp"
#include "galdesc/twist.hpp"

namespace galdesc {

namespace {

TwistModel model_from_spec(const Json& spec, const SearchBudget&) {
  FiniteGroup g = group_from_spec(spec.at("G"));
  FiniteGroup q = group_from_spec(spec.at("Q"));
  Homomorphism alpha(q, g, spec.at("alpha").get<std::vector<Elem>>());
  return TwistModel(std::move(g), std::move(q), std::move(alpha));
}

std::vector<PointClass> points_from_spec(const Json& spec,
                                         const FiniteGroup& g,
                                         const FiniteGroup& q,
                                         const SearchBudget& budget) {
  std::vector<PointClass> points;
  if (spec.is_string()) {
    if (spec.get<std::string>() != "all")
      throw ValidationError("points: expected \"all\" or an array of image "
                            "arrays");
    for (auto& h : enumerate_homs(q, g, budget))
      points.emplace_back(std::move(h));
    return points;
  }
  if (!spec.is_array())
    throw ValidationError("points: expected \"all\" or an array of image "
                          "arrays");
  for (const auto& images : spec)
    points.emplace_back(Homomorphism(q, g, images.get<std::vector<Elem>>()));
  return points;
}

Json run_descent_task(const Json& task, const SearchBudget& budget) {
  ParsedExtension parsed = extension_from_spec(task.at("extension"), budget);
  const GroupExtension& ext = parsed.extension;

  Homomorphism section_map = [&]() {
    const Json& sec = task.at("section");
    if (sec.is_string() && sec.get<std::string>() == "canonical") {
      if (!parsed.canonical_section)
        throw ValidationError("section \"canonical\" needs a semidirect "
                              "extension spec");
      return *parsed.canonical_section;
    }
    return Homomorphism(ext.quotient_group(), ext.total_group(),
                        sec.get<std::vector<Elem>>());
  }();
  Section s(ext, std::move(section_map));

  DescentReport rep = minimal_descent(ext, s, budget);
  Json out;
  out["kernel"] = group_to_json(ext.kernel_group());
  out["total"] = group_to_json(ext.total_group());
  out["quotient"] = group_to_json(ext.quotient_group());
  out["section"] = s.map().images();
  out["model_galois_over_base"] = is_model_galois(ext, s);
  out["V"] = subgroup_to_json(rep.v);
  out["GV"] = subgroup_to_json(rep.gv);
  out["E_subgroup"] = subgroup_to_json(rep.e_subgroup);
  out["galois_group_E_order"] = rep.galois_group_e.order();
  out["aut_group_order"] = rep.aut_kernel.group.order();
  out["aut_embedding"] = rep.aut_embedding.images();
  out["embedding_injective"] = rep.aut_embedding.is_injective();
  out["galois_over_E"] = rep.galois_over_e;
  out["minimal"] = rep.minimal;
  out["normal_core_identity"] = verify_normal_core_identity(ext, s);
  return out;
}

Json run_sections_task(const Json& task, const SearchBudget& budget) {
  ParsedExtension parsed = extension_from_spec(task.at("extension"), budget);
  auto sections = enumerate_sections(parsed.extension, budget);
  Json out;
  out["total"] = group_to_json(parsed.extension.total_group());
  out["count"] = sections.size();
  Json list = Json::array();
  for (const auto& s : sections) {
    Json entry;
    entry["images"] = s.map().images();
    entry["galois"] = is_model_galois(parsed.extension, s);
    list.push_back(std::move(entry));
  }
  out["sections"] = std::move(list);
  return out;
}

Json run_twist_count_task(const Json& task, const SearchBudget& budget) {
  TwistModel model = model_from_spec(task.at("model"), budget);
  auto points = points_from_spec(task.at("points"), model.g, model.q, budget);
  Json out;
  out["G"] = group_to_json(model.g);
  out["Q"] = group_to_json(model.q);
  out["alpha"] = model.alpha.images();
  out["galois"] = is_twist_galois(model);
  out["minimal_galois_subgroup"] =
      subgroup_to_json(minimal_galois_subgroup(model));
  Json counts = Json::array();
  for (const auto& p : points) {
    Json entry;
    entry["phi"] = p.lift().images();
    entry["count"] = count_rational_points(model, p);
    counts.push_back(std::move(entry));
  }
  out["points"] = std::move(counts);
  return out;
}

Json run_classify_task(const Json& task, const SearchBudget& budget) {
  FiniteGroup g = group_from_spec(task.at("G"));
  FiniteGroup q = group_from_spec(task.at("Q"));
  auto classes = classify_models(g, q, budget);
  Json out;
  out["G"] = group_to_json(g);
  out["Q"] = group_to_json(q);
  out["class_count"] = classes.size();
  Json list = Json::array();
  for (const auto& c : classes) {
    Json entry;
    entry["canonical"] = c.canonical.images();
    entry["size"] = c.size;
    entry["galois"] = c.galois;
    entry["fiber_count_d"] = c.fiber_count_d;
    list.push_back(std::move(entry));
  }
  out["classes"] = std::move(list);
  return out;
}

Json run_specialization_task(const Json& task, const SearchBudget& budget) {
  TwistModel model = model_from_spec(task.at("model"), budget);
  auto points = points_from_spec(task.at("points"), model.g, model.q, budget);
  SpecializationReport rep = specialization_report(model, points, budget);
  Json out;
  out["G"] = group_to_json(model.g);
  out["Q"] = group_to_json(model.q);
  out["alpha"] = model.alpha.images();
  out["has_rational_point"] = rep.has_rational_point;
  out["d"] = rep.d;
  out["conjugate_models"] = rep.conjugate_models;
  out["center_divides_d"] = rep.center_divides_d;
  out["d_divides_group"] = rep.d_divides_group;
  out["single_nonzero_class"] = rep.single_nonzero_class;
  Json list = Json::array();
  for (const auto& c : rep.classes) {
    Json entry;
    entry["members"] = c.members;
    entry["canonical"] = c.canonical;
    entry["fiber_count"] = c.fiber_count;
    entry["specialization_kernel"] = subgroup_to_json(c.specialization_kernel);
    list.push_back(std::move(entry));
  }
  out["classes"] = std::move(list);
  return out;
}

Json run_cohomology_task(const Json& task, const SearchBudget& budget) {
  FiniteGroup q = group_from_spec(task.at("Q"));
  Json out;
  out["Q"] = group_to_json(q);
  if (task.contains("A")) {
    FiniteGroup a = group_from_spec(task.at("A"));
    GroupAction action =
        task.contains("action")
            ? action_from_spec(task.at("action"), q, a)
            : GroupAction::trivial(q, a);
    TwoCohomologyGroup h2 = h2_abelian(q, a, action, budget);
    out["A"] = group_to_json(a);
    out["h2_order"] = h2.order;
    out["invariant_factors"] = h2.invariant_factors;
    Json reps = Json::array();
    for (const auto& table : h2.representatives) reps.push_back(table);
    out["representatives"] = std::move(reps);
    return out;
  }
  if (!task.contains("G"))
    throw ValidationError("cohomology task needs 'G' (first cohomology) or "
                          "'A' (second cohomology)");
  FiniteGroup g = group_from_spec(task.at("G"));
  GroupAction theta = task.contains("action")
                          ? action_from_spec(task.at("action"), q, g)
                          : GroupAction::trivial(q, g);
  auto cocycles = enumerate_one_cocycles(q, g, theta, budget);
  auto classes = h1_classes(q, g, theta, budget);
  out["G"] = group_to_json(g);
  out["cocycle_count"] = cocycles.size();
  out["class_count"] = classes.size();
  Json list = Json::array();
  for (const auto& c : classes) {
    Json entry;
    entry["canonical"] = c.canonical.values;
    entry["size"] = c.members.size();
    list.push_back(std::move(entry));
  }
  out["classes"] = std::move(list);
  return out;
}

Json run_obstruction_task(const Json& task, const SearchBudget& budget) {
  FiniteGroup g = group_from_spec(task.at("G"));
  FiniteGroup q = group_from_spec(task.at("Q"));
  Json out;
  out["G"] = group_to_json(g);
  out["Q"] = group_to_json(q);
  Subgroup z = center(g);
  std::optional<GroupAction> action;
  if (task.contains("action") && !(task.at("action").is_string() &&
                                   task.at("action") == "trivial")) {
    EmbeddedGroup zg = subgroup_as_group(z, "Z(" + g.label() + ")");
    action = action_from_spec(task.at("action"), q, zg.group);
  }
  ObstructionReport rep = obstruction_report(g, q, action, budget);
  out["center"] = subgroup_to_json(rep.center_subgroup);
  out["centerless"] = rep.centerless;
  if (rep.centerless) {
    out["obstruction"] = "none";
  } else {
    out["obstruction_order"] = rep.h2->order;
    out["invariant_factors"] = rep.h2->invariant_factors;
  }
  return out;
}

Json dispatch_task(const std::string& kind, const Json& task,
                   const SearchBudget& budget) {
  if (kind == "descent") return run_descent_task(task, budget);
  if (kind == "sections") return run_sections_task(task, budget);
  if (kind == "twist-count") return run_twist_count_task(task, budget);
  if (kind == "classify-models") return run_classify_task(task, budget);
  if (kind == "specialization") return run_specialization_task(task, budget);
  if (kind == "cohomology") return run_cohomology_task(task, budget);
  if (kind == "obstruction") return run_obstruction_task(task, budget);
  throw ValidationError("unknown task kind '" + kind + "'");
}

}  // namespace

std::string Report::to_text() const {
  Json out;
  out["status"] = status;
  Json list = Json::array();
  for (const auto& t : tasks) {
    Json entry;
    entry["index"] = t.index;
    entry["kind"] = t.kind;
    entry["status"] = t.status;
    if (t.status == "ok")
      entry["result"] = t.result;
    else
      entry["error"] = t.error;
    list.push_back(std::move(entry));
  }
  out["tasks"] = std::move(list);
  return out.dump(2) + "\n";
}

namespace {

TaskResult run_one_task(const Json& task, int index,
                        const SearchBudget& budget) {
  TaskResult tr;
  tr.index = index;
  tr.kind = task.is_object() ? task.value("kind", std::string()) : "";
  auto begin = std::chrono::steady_clock::now();
  try {
    if (!task.is_object() || tr.kind.empty())
      throw ValidationError("task " + std::to_string(index) +
                            ": expected an object with a 'kind' field");
    try {
      tr.result = dispatch_task(tr.kind, task, budget);
      tr.status = "ok";
    } catch (const Json::exception& e) {
      throw ValidationError("task " + std::to_string(index) + ": " + e.what());
    }
  } catch (const BudgetError& e) {
    tr.status = "budget-error";
    tr.error = "task " + std::to_string(index) + ": " + e.what();
  } catch (const TheoremViolation& e) {
    tr.status = "theorem-error";
    tr.error = "task " + std::to_string(index) + ": " + e.what();
  } catch (const Error& e) {
    tr.status = "validation-error";
    tr.error = e.what();
  }
  auto end = std::chrono::steady_clock::now();
  tr.millis = std::chrono::duration<double, std::milli>(end - begin).count();
  return tr;
}

}  // namespace

Report run_scenario(const Json& scenario, const SearchBudget& budget,
                    bool parallel) {
  if (!scenario.is_object() || !scenario.contains("tasks") ||
      !scenario.at("tasks").is_array())
    throw ValidationError("scenario: expected an object with a 'tasks' array");
  const auto& tasks = scenario.at("tasks");

  Report report;
  report.status = "ok";
  if (parallel) {
    std::vector<std::future<TaskResult>> futures;
    futures.reserve(tasks.size());
    for (size_t i = 0; i < tasks.size(); ++i)
      futures.push_back(std::async(std::launch::async, run_one_task,
                                   std::cref(tasks[i]), static_cast<int>(i),
                                   std::cref(budget)));
    for (auto& f : futures) report.tasks.push_back(f.get());
  } else {
    for (size_t i = 0; i < tasks.size(); ++i)
      report.tasks.push_back(
          run_one_task(tasks[i], static_cast<int>(i), budget));
  }
  for (const auto& t : report.tasks)
    if (t.status != "ok") report.status = "error";
  return report;
}

Report run_scenario_file(const std::string& path, const SearchBudget& budget,
                         bool parallel) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError("cannot open scenario file '" + path + "'");
  Json scenario;
  try {
    scenario = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("parse error in '" + path + "' at byte " +
                          std::to_string(e.byte) + ": " + e.what());
  }
  return run_scenario(scenario, budget, parallel);
}

std::string catalog_listing() {
  std::ostringstream out;
  out << "name    order  center  aut\n";
  for (const auto& name : catalog_display_names()) {
    FiniteGroup g = build_group(name);
    int z = center(g).order();
    int aut = automorphism_group(g).group.order();
    out << name;
    for (size_t i = name.size(); i < 8; ++i) out << ' ';
    std::string order = std::to_string(g.order());
    out << order;
    for (size_t i = order.size(); i < 7; ++i) out << ' ';
    std::string zs = std::to_string(z);
    out << zs;
    for (size_t i = zs.size(); i < 8; ++i) out << ' ';
    out << aut << "\n";
  }
  return out.str();
}

}  // namespace galdesc
