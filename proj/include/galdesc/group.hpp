#pragma once

#include <memory>
#include <string>
#include <vector>

#include "galdesc/common.hpp"

namespace galdesc {

/// A finite group given by a validated Cayley table.
///
/// The handle is a cheap-to-copy value; the table itself is immutable and
/// shared, so copies and concurrent readers are safe. Construction checks
/// the group axioms: identity, two-sided inverses, and associativity
/// (exhaustive up to order 64, randomized spot checks above that).
class FiniteGroup {
public:
  static FiniteGroup from_table(std::string label,
                                const std::vector<std::vector<Elem>>& table);
  static FiniteGroup from_flat_table(std::string label, int order,
                                     std::vector<Elem> table);

  int order() const noexcept { return d_->order; }
  Elem identity() const noexcept { return d_->identity; }
  const std::string& label() const noexcept { return d_->label; }

  Elem mul(Elem a, Elem b) const {
    return d_->table[static_cast<size_t>(a) * d_->order + b];
  }
  Elem inverse(Elem a) const { return d_->inverses[a]; }

  /// g x g^-1
  Elem conjugate(Elem g, Elem x) const {
    return mul(mul(g, x), inverse(g));
  }
  bool commutes(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }

  int element_order(Elem a) const;
  bool is_abelian() const;

  /// True when both handles describe the same table (shared data or an
  /// element-for-element identical table).
  bool same(const FiniteGroup& other) const;

  const std::vector<Elem>& flat_table() const noexcept { return d_->table; }

private:
  struct Data {
    int order = 0;
    std::vector<Elem> table;  // row-major, order x order
    Elem identity = 0;
    std::vector<Elem> inverses;
    std::string label;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// A subgroup of a fixed parent group: sorted element list plus a
/// membership bitset over the parent's elements.
class Subgroup {
public:
  /// Validates closure under product and inverse, and membership of the
  /// identity. Throws ValidationError otherwise.
  static Subgroup from_elements(const FiniteGroup& parent,
                                std::vector<Elem> elements);
  /// Closure of a generating set.
  static Subgroup generated(const FiniteGroup& parent,
                            const std::vector<Elem>& generators);
  static Subgroup trivial(const FiniteGroup& parent);
  static Subgroup whole(const FiniteGroup& parent);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  int order() const noexcept { return static_cast<int>(elements_.size()); }
  bool contains(Elem x) const { return membership_[static_cast<size_t>(x)]; }
  bool contains_all(const Subgroup& other) const;

  bool operator==(const Subgroup& other) const;

private:
  Subgroup(FiniteGroup parent, std::vector<Elem> elements,
           std::vector<bool> membership)
      : parent_(std::move(parent)),
        elements_(std::move(elements)),
        membership_(std::move(membership)) {}

  FiniteGroup parent_;
  std::vector<Elem> elements_;   // sorted ascending
  std::vector<bool> membership_; // length parent.order()
};

/// {x in ambient : xt = tx for all t in target}.
Subgroup centralizer(const FiniteGroup& ambient, const std::vector<Elem>& target);
Subgroup centralizer(const FiniteGroup& ambient, const Subgroup& target);
Subgroup center(const FiniteGroup& g);

/// Largest subgroup of H normal in ambient: the intersection of all
/// conjugates of H.
Subgroup normal_core(const FiniteGroup& ambient, const Subgroup& h);

bool is_normal(const FiniteGroup& ambient, const Subgroup& h);

/// g H g^-1
Subgroup conjugate_subgroup(const FiniteGroup& ambient, Elem g, const Subgroup& h);

Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// Every subgroup of g, sorted by (order, element list). Supported for
/// order <= 64; beyond that a BudgetError is raised.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

}  // namespace galdesc
