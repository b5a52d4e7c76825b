#pragma once

#include <string>

#include "json.hpp"

#include "galdesc/cohomology.hpp"
#include "galdesc/extension.hpp"
#include "galdesc/group.hpp"
#include "galdesc/hom.hpp"

namespace galdesc {

// Scenario files and reports use JSON with insertion-ordered keys so that
// identical inputs serialize to identical bytes.
using Json = nlohmann::ordered_json;

/// A group spec is either a catalog name ("S3", "C2xC4") or an inline
/// object {"label": ..., "order": n, "table": [[...], ...]}.
FiniteGroup group_from_spec(const Json& spec);

Json group_to_json(const FiniteGroup& g);

/// "trivial" or an array of |actor| permutations of target indices.
GroupAction action_from_spec(const Json& spec, const FiniteGroup& actor,
                             const FiniteGroup& target);

/// Either {"semidirect": {"kernel": ..., "quotient": ..., "action": ...}}
/// or a raw {"kernel", "total", "quotient", "iota", "pi"} object.
/// For the semidirect form the canonical section is returned too.
struct ParsedExtension {
  GroupExtension extension;
  std::optional<Homomorphism> canonical_section;
};
ParsedExtension extension_from_spec(const Json& spec,
                                    const SearchBudget& budget = {});

Json subgroup_to_json(const Subgroup& s);

}  // namespace galdesc
