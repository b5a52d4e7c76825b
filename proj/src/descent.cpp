#include "galdesc/descent.hpp"

#include <algorithm>

namespace galdesc {

namespace {

Subgroup compute_v(const GroupExtension& ext, const Section& s) {
  Subgroup c = centralizer(ext.total_group(), ext.kernel_image());
  return intersect(s.image(), c);
}

// img(s)/V together with, per coset, the smallest representative inside
// the total group.
struct SectionQuotient {
  EmbeddedGroup m;          // img(s) as a group
  QuotientResult quotient;  // m / (V inside m)
  std::vector<Elem> reps;   // quotient element -> total-group element
};

SectionQuotient section_quotient(const Section& s, const Subgroup& v) {
  EmbeddedGroup m = subgroup_as_group(s.image(), "img(s)");
  std::vector<Elem> v_local;
  v_local.reserve(v.elements().size());
  for (Elem x : v.elements())
    v_local.push_back(m.local_index[static_cast<size_t>(x)]);
  Subgroup v_in_m = Subgroup::from_elements(m.group, std::move(v_local));
  QuotientResult q = quotient_group(m.group, v_in_m);

  std::vector<Elem> reps(q.group.order(), -1);
  for (Elem x = 0; x < m.group.order(); ++x) {
    Elem c = q.projection(x);
    if (reps[static_cast<size_t>(c)] < 0)
      reps[static_cast<size_t>(c)] = m.embedding(x);
  }
  return SectionQuotient{std::move(m), std::move(q), std::move(reps)};
}

// Conjugation by a total-group element, pulled back to a permutation of G.
std::vector<Elem> conjugation_on_kernel(const GroupExtension& ext,
                                        Elem total_elem) {
  const FiniteGroup& gamma = ext.total_group();
  const FiniteGroup& g = ext.kernel_group();
  std::vector<Elem> perm(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    Elem image = gamma.conjugate(total_elem, ext.iota()(x));
    Elem back = ext.iota_inverse(image);
    if (back < 0)
      throw TheoremViolation("conjugation left iota(G) although iota(G) is "
                             "normal");
    perm[static_cast<size_t>(x)] = back;
  }
  return perm;
}

Homomorphism embedding_into_aut(const GroupExtension& ext,
                                const SectionQuotient& sq,
                                const AutomorphismGroup& aut) {
  std::vector<Elem> images(sq.quotient.group.order());
  for (Elem h = 0; h < sq.quotient.group.order(); ++h) {
    auto perm = conjugation_on_kernel(ext, sq.reps[static_cast<size_t>(h)]);
    int idx = aut.index_of(perm);
    if (idx < 0)
      throw TheoremViolation("conjugation by a section element is not an "
                             "automorphism of G");
    images[static_cast<size_t>(h)] = idx;
  }
  return Homomorphism(sq.quotient.group, aut.group, std::move(images));
}

}  // namespace

DescentReport minimal_descent(const GroupExtension& ext, const Section& s,
                              const SearchBudget& budget) {
  const FiniteGroup& gamma = ext.total_group();
  const FiniteGroup& q = ext.quotient_group();

  Subgroup v = compute_v(ext, s);
  if (!is_normal(gamma, v))
    throw TheoremViolation("V is not normal in the total group");

  std::vector<Elem> gv_gens = ext.kernel_image().elements();
  gv_gens.insert(gv_gens.end(), v.elements().begin(), v.elements().end());
  Subgroup gv = Subgroup::generated(gamma, gv_gens);

  Subgroup e_subgroup = ext.pi().image_of(v);
  if (!is_normal(q, e_subgroup))
    throw TheoremViolation("pi(V) is not normal in the quotient group");

  SectionQuotient sq = section_quotient(s, v);
  AutomorphismGroup aut = automorphism_group(ext.kernel_group(), budget);
  Homomorphism embedding = embedding_into_aut(ext, sq, aut);
  if (!embedding.is_injective())
    throw TheoremViolation("img(s)/V does not embed into Aut(G)");

  bool galois_over_e = restriction_is_galois(ext, s, e_subgroup);
  bool minimal = true;
  for (const auto& h : all_subgroups(q)) {
    if (h.order() <= e_subgroup.order() || !h.contains_all(e_subgroup))
      continue;
    if (restriction_is_galois(ext, s, h)) {
      minimal = false;
      break;
    }
  }

  return DescentReport{s,
                       std::move(v),
                       std::move(gv),
                       std::move(e_subgroup),
                       sq.quotient.group,
                       std::move(aut),
                       std::move(embedding),
                       galois_over_e,
                       minimal};
}

bool verify_normal_core_identity(const GroupExtension& ext, const Section& s) {
  Subgroup v = compute_v(ext, s);
  Subgroup core = normal_core(ext.total_group(), s.image());
  return v == core;
}

QuotientDecomposition decompose_quotient(const GroupExtension& ext,
                                         const Section& s,
                                         const SearchBudget& budget) {
  const FiniteGroup& gamma = ext.total_group();
  const FiniteGroup& g = ext.kernel_group();

  Subgroup v = compute_v(ext, s);
  QuotientResult by_v = quotient_group(gamma, v);

  SectionQuotient sq = section_quotient(s, v);
  AutomorphismGroup aut = automorphism_group(g, budget);
  Homomorphism embedding = embedding_into_aut(ext, sq, aut);

  std::vector<std::vector<Elem>> action_perms(sq.quotient.group.order());
  for (Elem h = 0; h < sq.quotient.group.order(); ++h)
    action_perms[static_cast<size_t>(h)] =
        aut.perms[static_cast<size_t>(embedding(h))];
  GroupAction theta(sq.quotient.group, g, std::move(action_perms));
  SemidirectProduct sd = semidirect_product(g, sq.quotient.group, theta, budget);

  // factor every total-group element as iota(j) * m with m in img(s)
  std::vector<Elem> images(gamma.order());
  for (Elem x = 0; x < gamma.order(); ++x) {
    Elem m_gamma = s(ext.pi()(x));
    Elem j = ext.iota_inverse(gamma.mul(x, gamma.inverse(m_gamma)));
    if (j < 0)
      throw TheoremViolation("element does not factor through iota(G) and "
                             "the section image");
    Elem m_local = sq.m.local_index[static_cast<size_t>(m_gamma)];
    Elem h = sq.quotient.projection(m_local);
    images[static_cast<size_t>(x)] = pair_index(g, j, h);
  }

  // both maps below are homomorphisms by the descent theory, so a
  // validation failure here is an engine bug, not bad input
  auto as_theorem = [](auto&& make) {
    try {
      return make();
    } catch (const ValidationError& e) {
      throw TheoremViolation(std::string("decompose_quotient: ") + e.what());
    }
  };
  Homomorphism factor_map = as_theorem([&] {
    return Homomorphism(gamma, sd.total, images);
  });

  bool kernel_is_v = factor_map.kernel() == v;
  bool surjective = factor_map.is_surjective();

  // induced map on the quotient: smallest representative per coset
  std::vector<Elem> induced(by_v.group.order(), -1);
  for (Elem x = 0; x < gamma.order(); ++x) {
    Elem c = by_v.projection(x);
    if (induced[static_cast<size_t>(c)] < 0)
      induced[static_cast<size_t>(c)] = factor_map(x);
  }
  Homomorphism induced_iso = as_theorem([&] {
    return Homomorphism(by_v.group, sd.total, induced);
  });
  bool bijective = surjective && induced_iso.is_injective() &&
                   by_v.group.order() == sd.total.order();

  if (!kernel_is_v || !bijective)
    throw TheoremViolation("total/V is not carried isomorphically onto the "
                           "semidirect product");

  return QuotientDecomposition{std::move(v),
                               by_v.group,
                               by_v.projection,
                               sd.total,
                               std::move(factor_map),
                               std::move(induced_iso),
                               kernel_is_v,
                               bijective};
}

Section nondescending_model_construction(const FiniteGroup& g,
                                         const Homomorphism& eps,
                                         const Section& s) {
  if (g.is_abelian())
    throw ValidationError("nondescending construction: kernel group must be "
                          "nonabelian");
  if (!eps.codomain().same(g))
    throw ValidationError("nondescending construction: eps must land in the "
                          "kernel group");
  if (!eps.is_surjective())
    throw ValidationError("nondescending construction: eps must be "
                          "surjective");
  const GroupExtension& ext = s.extension();
  if (!ext.kernel_group().same(g))
    throw ValidationError("nondescending construction: section extension has "
                          "a different kernel group");
  if (!eps.domain().same(ext.quotient_group()))
    throw ValidationError("nondescending construction: eps must be defined "
                          "on the quotient group");
  if (!is_model_galois(ext, s))
    throw ValidationError("nondescending construction: the given section "
                          "must centralize iota(G)");

  const FiniteGroup& q = ext.quotient_group();
  const FiniteGroup& gamma = ext.total_group();
  std::vector<Elem> images(q.order());
  for (Elem x = 0; x < q.order(); ++x)
    images[static_cast<size_t>(x)] = gamma.mul(ext.iota()(eps(x)), s(x));
  return Section(ext, Homomorphism(q, gamma, std::move(images)));
}

}  // namespace galdesc
