#include "galdesc/io.hpp"

#include "galdesc/catalog.hpp"

namespace galdesc {

FiniteGroup group_from_spec(const Json& spec) {
  if (spec.is_string()) return build_group(spec.get<std::string>());
  if (!spec.is_object())
    throw ValidationError("group spec must be a catalog name or an object");
  if (!spec.contains("order") || !spec.contains("table"))
    throw ValidationError("inline group spec needs 'order' and 'table'");
  std::string label = spec.value("label", std::string("user"));
  int order = spec.at("order").get<int>();
  auto rows = spec.at("table");
  if (!rows.is_array() || static_cast<int>(rows.size()) != order)
    throw ValidationError("inline group spec: 'table' must have 'order' rows");
  std::vector<Elem> flat;
  flat.reserve(static_cast<size_t>(order) * order);
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != order)
      throw ValidationError("inline group spec: ragged table row");
    for (const auto& v : row) flat.push_back(v.get<Elem>());
  }
  return FiniteGroup::from_flat_table(std::move(label), order, std::move(flat));
}

Json group_to_json(const FiniteGroup& g) {
  Json out;
  out["label"] = g.label();
  out["order"] = g.order();
  return out;
}

GroupAction action_from_spec(const Json& spec, const FiniteGroup& actor,
                             const FiniteGroup& target) {
  if (spec.is_string()) {
    if (spec.get<std::string>() == "trivial")
      return GroupAction::trivial(actor, target);
    throw ValidationError("action spec: unknown string '" +
                          spec.get<std::string>() + "'");
  }
  if (!spec.is_array())
    throw ValidationError("action spec must be \"trivial\" or an array of "
                          "permutations");
  std::vector<std::vector<Elem>> perms;
  for (const auto& p : spec) {
    if (!p.is_array())
      throw ValidationError("action spec: each permutation must be an array");
    perms.push_back(p.get<std::vector<Elem>>());
  }
  return GroupAction(actor, target, std::move(perms));
}

ParsedExtension extension_from_spec(const Json& spec,
                                    const SearchBudget& budget) {
  if (!spec.is_object())
    throw ValidationError("extension spec must be an object");
  if (spec.contains("semidirect")) {
    const auto& sd = spec.at("semidirect");
    FiniteGroup g = group_from_spec(sd.at("kernel"));
    FiniteGroup q = group_from_spec(sd.at("quotient"));
    GroupAction theta =
        sd.contains("action")
            ? action_from_spec(sd.at("action"), q, g)
            : GroupAction::trivial(q, g);
    SplitExtension se = split_extension(g, q, theta, budget);
    return ParsedExtension{std::move(se.extension),
                           std::move(se.canonical_section)};
  }
  for (const char* field : {"kernel", "total", "quotient", "iota", "pi"})
    if (!spec.contains(field))
      throw ValidationError(std::string("extension spec: missing field '") +
                            field + "'");
  FiniteGroup kernel = group_from_spec(spec.at("kernel"));
  FiniteGroup total = group_from_spec(spec.at("total"));
  FiniteGroup quotient = group_from_spec(spec.at("quotient"));
  Homomorphism iota(kernel, total, spec.at("iota").get<std::vector<Elem>>());
  Homomorphism pi(total, quotient, spec.at("pi").get<std::vector<Elem>>());
  return ParsedExtension{
      GroupExtension(std::move(kernel), std::move(total), std::move(quotient),
                     std::move(iota), std::move(pi)),
      std::nullopt};
}

Json subgroup_to_json(const Subgroup& s) {
  return Json(s.elements());
}

}  // namespace galdesc
