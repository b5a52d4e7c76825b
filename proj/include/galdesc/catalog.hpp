#pragma once

#include <string>
#include <vector>

#include "galdesc/group.hpp"

namespace galdesc {

/// Builds a group from a catalog name. Recognized names:
///   C<n>        cyclic of order n
///   S<n>, A<n>  symmetric / alternating on n <= 5 letters
///   D<n>        dihedral of order 2n
///   Q8          quaternion group
///   V4          Klein four-group
///   <a>x<b>     direct products, e.g. "S3xC2", "C2xC2xC3"
/// Throws ValidationError for anything else.
FiniteGroup build_group(const std::string& catalog_name);

/// Direct product with pair index q*|a| + b-free convention matching
/// semidirect_product with the trivial action.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Names shown by the catalog listing, in display order.
const std::vector<std::string>& catalog_display_names();

}  // namespace galdesc
