#pragma once

#include <optional>
#include <vector>

#include "galdesc/common.hpp"
#include "galdesc/group.hpp"
#include "galdesc/hom.hpp"

namespace galdesc {

/// A crossed homomorphism Q -> G for the action theta:
/// z(q1 q2) = z(q1) * theta_q1(z(q2)), z(e) = e.
struct OneCocycle {
  std::vector<Elem> values;  // indexed by Q
};

/// All 1-cocycles, sorted by value array. Enumerated by backtracking over
/// generator values, independent of the section machinery.
std::vector<OneCocycle> enumerate_one_cocycles(const FiniteGroup& q,
                                               const FiniteGroup& g,
                                               const GroupAction& theta,
                                               const SearchBudget& budget = {});

struct H1Class {
  OneCocycle canonical;      // lexicographically smallest member
  std::vector<int> members;  // indices into the cocycle list
};

/// Partition of the 1-cocycles under z ~ (q -> g^-1 z(q) theta_q(g)).
std::vector<H1Class> h1_classes(const FiniteGroup& q, const FiniteGroup& g,
                                const GroupAction& theta,
                                const SearchBudget& budget = {});

/// Decomposition of a finite abelian group into cyclic factors with an
/// explicit coordinate system.
struct AbelianBasis {
  FiniteGroup group;
  std::vector<Elem> generators;          // one per cyclic factor
  std::vector<int> orders;               // factor orders, non-increasing
  std::vector<std::vector<int>> coords;  // element -> coordinates
  Elem element_of(const std::vector<int>& coordinates) const;
};

AbelianBasis abelian_basis(const FiniteGroup& a);

/// H^2(Q, A) for an abelian coefficient group, computed by integer linear
/// algebra over the cyclic factors of A.
struct TwoCohomologyGroup {
  FiniteGroup q;
  FiniteGroup a;
  std::vector<long long> invariant_factors;  // ascending divisibility, > 1
  long long order = 1;                       // product of the factors
  // one normalized |Q| x |Q| cocycle table (values in A, row-major) per
  // invariant factor
  std::vector<std::vector<Elem>> representatives;
};

TwoCohomologyGroup h2_abelian(const FiniteGroup& q, const FiniteGroup& a,
                              const GroupAction& action,
                              const SearchBudget& budget = {});

/// Exhaustive enumeration of normalized 2-cocycle tables; the independent
/// oracle for tiny inputs (|A|^((|Q|-1)^2) tables are scanned).
long long h2_order_bruteforce(const FiniteGroup& q, const FiniteGroup& a,
                              const GroupAction& action);

struct ObstructionReport {
  Subgroup center_subgroup;  // Z(G) inside G
  bool centerless;
  std::optional<TwoCohomologyGroup> h2;  // absent when centerless
};

/// The obstruction group H^2(Q, Z(G)). A trivial center short-circuits to
/// "no obstruction group". The action, when given, must act on the center
/// rebuilt as a group in its own right.
ObstructionReport obstruction_report(const FiniteGroup& g, const FiniteGroup& q,
                                     const std::optional<GroupAction>&
                                         action_on_center = std::nullopt,
                                     const SearchBudget& budget = {});

}  // namespace galdesc
