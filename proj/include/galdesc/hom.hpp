#pragma once

#include <string>
#include <vector>

#include "galdesc/common.hpp"
#include "galdesc/group.hpp"

namespace galdesc {

/// A total map between two finite groups, verified multiplicative on
/// construction.
class Homomorphism {
public:
  Homomorphism(FiniteGroup domain, FiniteGroup codomain,
               std::vector<Elem> images);

  static Homomorphism identity(const FiniteGroup& g);
  static Homomorphism trivial(const FiniteGroup& domain,
                              const FiniteGroup& codomain);

  const FiniteGroup& domain() const noexcept { return domain_; }
  const FiniteGroup& codomain() const noexcept { return codomain_; }
  const std::vector<Elem>& images() const noexcept { return images_; }
  Elem operator()(Elem x) const { return images_[static_cast<size_t>(x)]; }

  bool is_injective() const;
  bool is_surjective() const;

  Subgroup kernel() const;
  Subgroup image() const;
  Subgroup image_of(const Subgroup& s) const;
  Subgroup preimage_of(const Subgroup& s) const;

  bool operator==(const Homomorphism& other) const {
    return domain_.same(other.domain_) && codomain_.same(other.codomain_) &&
           images_ == other.images_;
  }

private:
  FiniteGroup domain_;
  FiniteGroup codomain_;
  std::vector<Elem> images_;
};

/// f after g (domains must chain).
Homomorphism compose(const Homomorphism& f, const Homomorphism& g);

/// An action of a group on a group: a homomorphism actor -> Aut(target),
/// stored as one permutation of target's elements per actor element.
/// Construction verifies that every permutation is an automorphism and
/// that the assignment is multiplicative.
class GroupAction {
public:
  GroupAction(FiniteGroup actor, FiniteGroup target,
              std::vector<std::vector<Elem>> perms);

  static GroupAction trivial(const FiniteGroup& actor,
                             const FiniteGroup& target);

  const FiniteGroup& actor() const noexcept { return actor_; }
  const FiniteGroup& target() const noexcept { return target_; }
  const std::vector<Elem>& perm(Elem q) const {
    return perms_[static_cast<size_t>(q)];
  }
  Elem apply(Elem q, Elem g) const {
    return perms_[static_cast<size_t>(q)][static_cast<size_t>(g)];
  }
  bool is_trivial() const;

private:
  FiniteGroup actor_;
  FiniteGroup target_;
  std::vector<std::vector<Elem>> perms_;
};

/// A subgroup repackaged as a group in its own right, together with the
/// embedding back into the parent.
struct EmbeddedGroup {
  FiniteGroup group;
  Homomorphism embedding;         // group -> parent
  std::vector<Elem> local_index;  // parent index -> local index, -1 outside
};

EmbeddedGroup subgroup_as_group(const Subgroup& s, const std::string& label = "");

struct QuotientResult {
  FiniteGroup group;
  Homomorphism projection;  // ambient -> group, surjective with kernel N
};

/// Quotient by a normal subgroup; cosets are labelled by their smallest
/// element, with the identity coset at index 0. Throws ValidationError
/// when N is not normal.
QuotientResult quotient_group(const FiniteGroup& ambient, const Subgroup& n);

struct SemidirectProduct {
  FiniteGroup total;              // pairs (g, q), index q*|G| + g
  Homomorphism iota;              // G -> total
  Homomorphism pi;                // total -> Q
  Homomorphism canonical_section; // Q -> total, q -> (e, q)
};

/// G x Q with multiplication (g,q)(g',q') = (g theta_q(g'), qq').
SemidirectProduct semidirect_product(const FiniteGroup& g, const FiniteGroup& q,
                                     const GroupAction& theta,
                                     const SearchBudget& budget = {});

inline Elem pair_index(const FiniteGroup& g, Elem x, Elem q) {
  return q * g.order() + x;
}

}  // namespace galdesc
