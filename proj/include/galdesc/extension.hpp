#pragma once

#include <vector>

#include "galdesc/common.hpp"
#include "galdesc/group.hpp"
#include "galdesc/hom.hpp"

namespace galdesc {

/// A short exact sequence 1 -> G -> Gamma -> Q -> 1 given by the kernel
/// embedding iota and the projection pi. Construction verifies that iota
/// is injective, pi is surjective, and image(iota) = kernel(pi).
class GroupExtension {
public:
  GroupExtension(FiniteGroup kernel_group, FiniteGroup total_group,
                 FiniteGroup quotient_group, Homomorphism iota,
                 Homomorphism pi);

  const FiniteGroup& kernel_group() const noexcept { return kernel_; }
  const FiniteGroup& total_group() const noexcept { return total_; }
  const FiniteGroup& quotient_group() const noexcept { return quotient_; }
  const Homomorphism& iota() const noexcept { return iota_; }
  const Homomorphism& pi() const noexcept { return pi_; }

  /// iota(G) as a subgroup of the total group.
  const Subgroup& kernel_image() const noexcept { return kernel_image_; }
  /// Total-group index -> kernel-group index, or -1 outside iota(G).
  Elem iota_inverse(Elem total_elem) const {
    return iota_inv_[static_cast<size_t>(total_elem)];
  }

private:
  FiniteGroup kernel_;
  FiniteGroup total_;
  FiniteGroup quotient_;
  Homomorphism iota_;
  Homomorphism pi_;
  Subgroup kernel_image_;
  std::vector<Elem> iota_inv_;
};

/// Split extension built from a semidirect product, with its canonical
/// section q -> (e, q).
struct SplitExtension {
  GroupExtension extension;
  Homomorphism canonical_section;
};

SplitExtension split_extension(const FiniteGroup& g, const FiniteGroup& q,
                               const GroupAction& theta,
                               const SearchBudget& budget = {});

/// A homomorphic right inverse of the projection.
class Section {
public:
  Section(GroupExtension extension, Homomorphism map);

  const GroupExtension& extension() const noexcept { return extension_; }
  const Homomorphism& map() const noexcept { return map_; }
  Elem operator()(Elem q) const { return map_(q); }
  Subgroup image() const;

  bool operator==(const Section& other) const {
    return map_.images() == other.map_.images();
  }

private:
  GroupExtension extension_;
  Homomorphism map_;
};

/// All sections of the projection, sorted by image array. Empty when the
/// extension does not split.
std::vector<Section> enumerate_sections(const GroupExtension& ext,
                                        const SearchBudget& budget = {});

/// All subgroups H of the total group with H meeting iota(G) trivially and
/// projecting onto Q. Taking images is a bijection from sections onto this
/// list.
std::vector<Subgroup> complements_of_kernel(const GroupExtension& ext);

/// True when every element of the section's image commutes with every
/// element of iota(G), i.e. the induced model is Galois over the base.
bool is_model_galois(const GroupExtension& ext, const Section& s);

/// The same test after restricting the section to a subgroup of Q.
bool restriction_is_galois(const GroupExtension& ext, const Section& s,
                           const Subgroup& h_of_q);

}  // namespace galdesc
