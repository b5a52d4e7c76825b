#include "galdesc/hom.hpp"

#include <algorithm>
#include <map>

namespace galdesc {

Homomorphism::Homomorphism(FiniteGroup domain, FiniteGroup codomain,
                           std::vector<Elem> images)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      images_(std::move(images)) {
  if (images_.size() != static_cast<size_t>(domain_.order()))
    throw ValidationError("homomorphism " + domain_.label() + " -> " +
                          codomain_.label() + ": image array has wrong length");
  for (Elem v : images_)
    if (v < 0 || v >= codomain_.order())
      throw ValidationError("homomorphism " + domain_.label() + " -> " +
                            codomain_.label() + ": image out of range");
  if (images_[static_cast<size_t>(domain_.identity())] != codomain_.identity())
    throw ValidationError("homomorphism " + domain_.label() + " -> " +
                          codomain_.label() + ": identity not preserved");
  for (Elem x = 0; x < domain_.order(); ++x)
    for (Elem y = 0; y < domain_.order(); ++y)
      if ((*this)(domain_.mul(x, y)) != codomain_.mul((*this)(x), (*this)(y)))
        throw ValidationError("homomorphism " + domain_.label() + " -> " +
                              codomain_.label() + ": not multiplicative at (" +
                              std::to_string(x) + "," + std::to_string(y) + ")");
}

Homomorphism Homomorphism::identity(const FiniteGroup& g) {
  std::vector<Elem> ids(g.order());
  for (int i = 0; i < g.order(); ++i) ids[i] = i;
  return Homomorphism(g, g, std::move(ids));
}

Homomorphism Homomorphism::trivial(const FiniteGroup& domain,
                                   const FiniteGroup& codomain) {
  return Homomorphism(domain, codomain,
                      std::vector<Elem>(domain.order(), codomain.identity()));
}

bool Homomorphism::is_injective() const {
  std::vector<bool> hit(codomain_.order(), false);
  for (Elem v : images_) {
    if (hit[static_cast<size_t>(v)]) return false;
    hit[static_cast<size_t>(v)] = true;
  }
  return true;
}

bool Homomorphism::is_surjective() const {
  std::vector<bool> hit(codomain_.order(), false);
  int count = 0;
  for (Elem v : images_)
    if (!hit[static_cast<size_t>(v)]) {
      hit[static_cast<size_t>(v)] = true;
      ++count;
    }
  return count == codomain_.order();
}

Subgroup Homomorphism::kernel() const {
  std::vector<Elem> elems;
  for (Elem x = 0; x < domain_.order(); ++x)
    if ((*this)(x) == codomain_.identity()) elems.push_back(x);
  return Subgroup::from_elements(domain_, std::move(elems));
}

Subgroup Homomorphism::image() const {
  std::vector<Elem> elems(images_);
  return Subgroup::from_elements(codomain_, std::move(elems));
}

Subgroup Homomorphism::image_of(const Subgroup& s) const {
  if (!s.parent().same(domain_))
    throw ValidationError("image_of: subgroup lives in a different group");
  std::vector<Elem> elems;
  elems.reserve(s.elements().size());
  for (Elem x : s.elements()) elems.push_back((*this)(x));
  return Subgroup::from_elements(codomain_, std::move(elems));
}

Subgroup Homomorphism::preimage_of(const Subgroup& s) const {
  if (!s.parent().same(codomain_))
    throw ValidationError("preimage_of: subgroup lives in a different group");
  std::vector<Elem> elems;
  for (Elem x = 0; x < domain_.order(); ++x)
    if (s.contains((*this)(x))) elems.push_back(x);
  return Subgroup::from_elements(domain_, std::move(elems));
}

Homomorphism compose(const Homomorphism& f, const Homomorphism& g) {
  if (!g.codomain().same(f.domain()))
    throw ValidationError("compose: codomain of inner map differs from domain "
                          "of outer map");
  std::vector<Elem> images(g.domain().order());
  for (Elem x = 0; x < g.domain().order(); ++x) images[x] = f(g(x));
  return Homomorphism(g.domain(), f.codomain(), std::move(images));
}

GroupAction::GroupAction(FiniteGroup actor, FiniteGroup target,
                         std::vector<std::vector<Elem>> perms)
    : actor_(std::move(actor)),
      target_(std::move(target)),
      perms_(std::move(perms)) {
  const int n = target_.order();
  if (perms_.size() != static_cast<size_t>(actor_.order()))
    throw ValidationError("action of " + actor_.label() + " on " +
                          target_.label() + ": one permutation per actor "
                          "element required");
  for (Elem q = 0; q < actor_.order(); ++q) {
    const auto& p = perms_[static_cast<size_t>(q)];
    if (p.size() != static_cast<size_t>(n))
      throw ValidationError("action: permutation has wrong length");
    std::vector<bool> hit(n, false);
    for (Elem v : p) {
      if (v < 0 || v >= n || hit[static_cast<size_t>(v)])
        throw ValidationError("action: not a permutation of the target");
      hit[static_cast<size_t>(v)] = true;
    }
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (p[static_cast<size_t>(target_.mul(a, b))] !=
            target_.mul(p[static_cast<size_t>(a)], p[static_cast<size_t>(b)]))
          throw ValidationError("action: permutation for actor element " +
                                std::to_string(q) +
                                " is not an automorphism");
  }
  for (Elem q1 = 0; q1 < actor_.order(); ++q1)
    for (Elem q2 = 0; q2 < actor_.order(); ++q2) {
      const auto& p12 = perms_[static_cast<size_t>(actor_.mul(q1, q2))];
      const auto& p1 = perms_[static_cast<size_t>(q1)];
      const auto& p2 = perms_[static_cast<size_t>(q2)];
      for (Elem x = 0; x < n; ++x)
        if (p12[static_cast<size_t>(x)] !=
            p1[static_cast<size_t>(p2[static_cast<size_t>(x)])])
          throw ValidationError("action: assignment is not multiplicative");
    }
}

GroupAction GroupAction::trivial(const FiniteGroup& actor,
                                 const FiniteGroup& target) {
  std::vector<Elem> id(target.order());
  for (int i = 0; i < target.order(); ++i) id[i] = i;
  return GroupAction(actor, target,
                     std::vector<std::vector<Elem>>(actor.order(), id));
}

bool GroupAction::is_trivial() const {
  for (Elem q = 0; q < actor_.order(); ++q)
    for (Elem x = 0; x < target_.order(); ++x)
      if (apply(q, x) != x) return false;
  return true;
}

EmbeddedGroup subgroup_as_group(const Subgroup& s, const std::string& label) {
  const FiniteGroup& parent = s.parent();
  const auto& elems = s.elements();
  const int n = s.order();

  std::vector<Elem> local(parent.order(), -1);
  for (int i = 0; i < n; ++i) local[static_cast<size_t>(elems[i])] = i;

  std::vector<Elem> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<size_t>(i) * n + j] =
          local[static_cast<size_t>(parent.mul(elems[i], elems[j]))];

  std::string name = label.empty()
                         ? parent.label() + "{" + std::to_string(n) + "}"
                         : label;
  FiniteGroup grp = FiniteGroup::from_flat_table(std::move(name), n, std::move(table));
  Homomorphism embed(grp, parent, std::vector<Elem>(elems));
  return EmbeddedGroup{std::move(grp), std::move(embed), std::move(local)};
}

QuotientResult quotient_group(const FiniteGroup& ambient, const Subgroup& n) {
  if (!n.parent().same(ambient))
    throw ValidationError("quotient_group: subgroup lives in a different group");
  if (!is_normal(ambient, n))
    throw ValidationError("quotient_group: '" + ambient.label() +
                          "' modulo a non-normal subgroup");

  // canonical representative of each coset: the smallest member
  std::vector<Elem> rep(ambient.order(), -1);
  for (Elem x = 0; x < ambient.order(); ++x) {
    Elem best = x;
    for (Elem h : n.elements()) best = std::min(best, ambient.mul(x, h));
    rep[static_cast<size_t>(x)] = best;
  }

  std::vector<Elem> reps;
  for (Elem x = 0; x < ambient.order(); ++x)
    if (rep[static_cast<size_t>(x)] == x) reps.push_back(x);
  // identity coset goes first
  Elem idrep = rep[static_cast<size_t>(ambient.identity())];
  auto it = std::find(reps.begin(), reps.end(), idrep);
  std::rotate(reps.begin(), it, it + 1);

  std::map<Elem, Elem> index_of;
  for (size_t i = 0; i < reps.size(); ++i)
    index_of[reps[i]] = static_cast<Elem>(i);

  const int m = static_cast<int>(reps.size());
  std::vector<Elem> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<size_t>(i) * m + j] =
          index_of.at(rep[static_cast<size_t>(ambient.mul(reps[i], reps[j]))]);

  FiniteGroup grp = FiniteGroup::from_flat_table(
      ambient.label() + "/" + std::to_string(n.order()), m, std::move(table));

  std::vector<Elem> proj(ambient.order());
  for (Elem x = 0; x < ambient.order(); ++x)
    proj[static_cast<size_t>(x)] = index_of.at(rep[static_cast<size_t>(x)]);
  Homomorphism projection(ambient, grp, std::move(proj));
  return QuotientResult{std::move(grp), std::move(projection)};
}

SemidirectProduct semidirect_product(const FiniteGroup& g, const FiniteGroup& q,
                                     const GroupAction& theta,
                                     const SearchBudget& budget) {
  if (!theta.actor().same(q) || !theta.target().same(g))
    throw ValidationError("semidirect_product: action does not match the "
                          "given groups");
  const long long total = static_cast<long long>(g.order()) * q.order();
  if (total > budget.max_total_order)
    throw BudgetError("semidirect_product: order " + std::to_string(total) +
                      " exceeds max_total_order " +
                      std::to_string(budget.max_total_order));

  const int ng = g.order(), nq = q.order();
  const int n = static_cast<int>(total);
  std::vector<Elem> table(static_cast<size_t>(n) * n);
  for (Elem q1 = 0; q1 < nq; ++q1)
    for (Elem g1 = 0; g1 < ng; ++g1)
      for (Elem q2 = 0; q2 < nq; ++q2)
        for (Elem g2 = 0; g2 < ng; ++g2) {
          Elem a = pair_index(g, g1, q1);
          Elem b = pair_index(g, g2, q2);
          Elem prod = pair_index(g, g.mul(g1, theta.apply(q1, g2)),
                                 q.mul(q1, q2));
          table[static_cast<size_t>(a) * n + b] = prod;
        }

  std::string label = theta.is_trivial() ? g.label() + "x" + q.label()
                                         : g.label() + ":" + q.label();
  FiniteGroup gamma = FiniteGroup::from_flat_table(label, n, std::move(table));

  std::vector<Elem> iota_images(ng);
  for (Elem x = 0; x < ng; ++x) iota_images[x] = pair_index(g, x, q.identity());
  Homomorphism iota(g, gamma, std::move(iota_images));

  std::vector<Elem> pi_images(n);
  for (Elem i = 0; i < n; ++i) pi_images[i] = i / ng;
  Homomorphism pi(gamma, q, std::move(pi_images));

  std::vector<Elem> sec_images(nq);
  for (Elem y = 0; y < nq; ++y) sec_images[y] = pair_index(g, g.identity(), y);
  Homomorphism s0(q, gamma, std::move(sec_images));

  return SemidirectProduct{std::move(gamma), std::move(iota), std::move(pi),
                           std::move(s0)};
}

}  // namespace galdesc
