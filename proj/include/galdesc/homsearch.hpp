#pragma once

#include <vector>

#include "galdesc/common.hpp"
#include "galdesc/group.hpp"
#include "galdesc/hom.hpp"

namespace galdesc {

/// Greedy generating sequence: repeatedly adds the element that grows the
/// generated subgroup the most (ties broken by smallest index). Empty for
/// the trivial group.
std::vector<Elem> generating_sequence(const FiniteGroup& g);

/// All homomorphisms domain -> codomain, each exactly once, sorted by
/// image array. Backtracks over generator images and extends
/// multiplicatively; the candidate count |codomain|^#generators is checked
/// against the budget up front.
std::vector<Homomorphism> enumerate_homs(const FiniteGroup& domain,
                                         const FiniteGroup& codomain,
                                         const SearchBudget& budget = {});

/// Lexicographically smallest image array among the conjugates
/// q -> g a(q) g^-1 of a by elements of its codomain.
std::vector<Elem> canonical_conjugate(const Homomorphism& a);

struct HomClass {
  Homomorphism canonical;
  std::vector<int> members;  // indices into the input list, ascending
};

/// Partition of a list of homomorphisms (shared domain and codomain) under
/// pointwise conjugation by the codomain. Classes are sorted by canonical
/// image array.
std::vector<HomClass> conjugacy_partition_homs(
    const std::vector<Homomorphism>& homs);

struct AutomorphismGroup {
  FiniteGroup group;                     // abstract Aut(G)
  std::vector<std::vector<Elem>> perms;  // realization on G's elements
  /// Index of a permutation in perms, or -1.
  int index_of(const std::vector<Elem>& perm) const;
};

AutomorphismGroup automorphism_group(const FiniteGroup& g,
                                     const SearchBudget& budget = {});

/// Every action of q on g, i.e. Hom(q, Aut(g)) converted to permutation
/// form. Includes the trivial action.
std::vector<GroupAction> enumerate_actions(const FiniteGroup& q,
                                           const FiniteGroup& g,
                                           const SearchBudget& budget = {});

/// Small-order brute force via bijective homomorphism search.
bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                   const SearchBudget& budget = {});

}  // namespace galdesc
