#pragma once

#include "galdesc/common.hpp"
#include "galdesc/extension.hpp"
#include "galdesc/homsearch.hpp"

namespace galdesc {

/// Result of the minimal-descent computation for one section.
///
/// V is the intersection of the section's image with the centralizer of
/// iota(G) in the total group; it is normal in the total group. E_subgroup
/// = pi(V) is the subgroup of Q cutting out the minimal field over which
/// the section's model becomes Galois, and galois_group_E = img(s)/V acts
/// on G through an injective map into Aut(G).
struct DescentReport {
  Section section;
  Subgroup v;            // subgroup of the total group
  Subgroup gv;           // subgroup generated by iota(G) and V
  Subgroup e_subgroup;   // subgroup of Q
  FiniteGroup galois_group_e;
  AutomorphismGroup aut_kernel;   // Aut(G)
  Homomorphism aut_embedding;     // galois_group_e -> Aut(G)
  bool galois_over_e;    // restriction to E_subgroup is Galois
  bool minimal;          // no strictly larger subgroup of Q works
};

DescentReport minimal_descent(const GroupExtension& ext, const Section& s,
                              const SearchBudget& budget = {});

/// Checks that V computed as img(s) meet the centralizer equals the normal
/// core of img(s) in the total group, with both sides computed
/// independently. Always true over valid inputs.
bool verify_normal_core_identity(const GroupExtension& ext, const Section& s);

/// The total group modulo V, rebuilt as a semidirect product of G with
/// img(s)/V, plus the explicit factor map that exhibits the isomorphism.
struct QuotientDecomposition {
  Subgroup v;
  FiniteGroup quotient;              // total/V
  Homomorphism quotient_projection;  // total -> total/V
  FiniteGroup semidirect;            // G acted on by img(s)/V
  Homomorphism factor_map;           // total -> semidirect, jm -> (j, mV)
  Homomorphism induced_isomorphism;  // total/V -> semidirect
  bool kernel_is_v;
  bool bijective;
};

QuotientDecomposition decompose_quotient(const GroupExtension& ext,
                                         const Section& s,
                                         const SearchBudget& budget = {});

/// Given a surjection eps: Q -> G with G nonabelian and a section whose
/// image centralizes iota(G), produces the section q -> iota(eps(q)) s(q).
/// The result is a valid section whose model is never Galois.
Section nondescending_model_construction(const FiniteGroup& g,
                                         const Homomorphism& eps,
                                         const Section& s);

}  // namespace galdesc
