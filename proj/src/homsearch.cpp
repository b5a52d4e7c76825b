#include "galdesc/homsearch.hpp"

#include <algorithm>
#include <map>

namespace galdesc {

std::vector<Elem> generating_sequence(const FiniteGroup& g) {
  std::vector<Elem> gens;
  Subgroup span = Subgroup::trivial(g);
  while (span.order() < g.order()) {
    Elem best = -1;
    int best_size = span.order();
    for (Elem x = 0; x < g.order(); ++x) {
      if (span.contains(x)) continue;
      auto gens_try = gens;
      gens_try.push_back(x);
      int size = Subgroup::generated(g, gens_try).order();
      if (size > best_size) {
        best = x;
        best_size = size;
      }
    }
    gens.push_back(best);
    span = Subgroup::generated(g, gens);
  }
  return gens;
}

namespace {

// Word decomposition of every domain element over a generating sequence:
// elem = prefix * generator, discovered breadth-first. Given generator
// images this extends any candidate map to the whole domain in one pass.
struct ExtensionPlan {
  std::vector<Elem> gens;
  std::vector<Elem> bfs_order;            // all elements, identity first
  std::vector<std::pair<Elem, int>> via;  // elem -> (prefix elem, gen index)

  explicit ExtensionPlan(const FiniteGroup& g) {
    gens = generating_sequence(g);
    via.assign(g.order(), {-1, -1});
    std::vector<bool> seen(g.order(), false);
    seen[static_cast<size_t>(g.identity())] = true;
    bfs_order.push_back(g.identity());
    for (size_t i = 0; i < bfs_order.size(); ++i) {
      Elem x = bfs_order[i];
      for (size_t k = 0; k < gens.size(); ++k) {
        Elem y = g.mul(x, gens[k]);
        if (!seen[static_cast<size_t>(y)]) {
          seen[static_cast<size_t>(y)] = true;
          via[static_cast<size_t>(y)] = {x, static_cast<int>(k)};
          bfs_order.push_back(y);
        }
      }
    }
  }
};

bool extend_map(const FiniteGroup& domain, const FiniteGroup& codomain,
                const ExtensionPlan& plan, const std::vector<Elem>& gen_images,
                std::vector<Elem>& images) {
  images.assign(domain.order(), -1);
  images[static_cast<size_t>(domain.identity())] = codomain.identity();
  for (Elem x : plan.bfs_order) {
    if (x == domain.identity()) continue;
    auto [prefix, k] = plan.via[static_cast<size_t>(x)];
    images[static_cast<size_t>(x)] =
        codomain.mul(images[static_cast<size_t>(prefix)],
                     gen_images[static_cast<size_t>(k)]);
  }
  // reject on any multiplicativity conflict
  for (Elem x = 0; x < domain.order(); ++x)
    for (Elem y = 0; y < domain.order(); ++y)
      if (images[static_cast<size_t>(domain.mul(x, y))] !=
          codomain.mul(images[static_cast<size_t>(x)],
                       images[static_cast<size_t>(y)]))
        return false;
  return true;
}

// Enumerates image arrays of all homomorphisms whose generator images are
// drawn from the given candidate lists.
std::vector<std::vector<Elem>> search_maps(
    const FiniteGroup& domain, const FiniteGroup& codomain,
    const ExtensionPlan& plan,
    const std::vector<std::vector<Elem>>& candidates,
    const SearchBudget& budget, const char* what) {
  long long count = 1;
  for (const auto& c : candidates) {
    count *= static_cast<long long>(c.size());
    if (count > budget.max_candidates)
      throw BudgetError(std::string(what) + ": candidate count exceeds "
                        "max_candidates " +
                        std::to_string(budget.max_candidates));
  }

  std::vector<std::vector<Elem>> found;
  const size_t k = candidates.size();
  for (const auto& c : candidates)
    if (c.empty()) return found;
  std::vector<Elem> gen_images(k);
  std::vector<Elem> images;

  std::vector<size_t> idx(k, 0);
  while (true) {
    for (size_t i = 0; i < k; ++i) gen_images[i] = candidates[i][idx[i]];
    if (extend_map(domain, codomain, plan, gen_images, images))
      found.push_back(images);

    size_t pos = 0;
    while (pos < k && ++idx[pos] == candidates[pos].size()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

std::vector<Homomorphism> enumerate_homs(const FiniteGroup& domain,
                                         const FiniteGroup& codomain,
                                         const SearchBudget& budget) {
  ExtensionPlan plan(domain);
  // candidate images of a generator: elements whose order divides its order
  std::vector<std::vector<Elem>> candidates(plan.gens.size());
  for (size_t i = 0; i < plan.gens.size(); ++i) {
    int gen_order = domain.element_order(plan.gens[i]);
    for (Elem x = 0; x < codomain.order(); ++x)
      if (gen_order % codomain.element_order(x) == 0)
        candidates[i].push_back(x);
  }
  auto maps = search_maps(domain, codomain, plan, candidates, budget,
                          "enumerate_homs");
  std::vector<Homomorphism> homs;
  homs.reserve(maps.size());
  for (auto& m : maps) homs.emplace_back(domain, codomain, std::move(m));
  return homs;
}

std::vector<Elem> canonical_conjugate(const Homomorphism& a) {
  const FiniteGroup& g = a.codomain();
  std::vector<Elem> best = a.images();
  std::vector<Elem> cur(best.size());
  for (Elem c = 0; c < g.order(); ++c) {
    for (size_t i = 0; i < cur.size(); ++i)
      cur[i] = g.conjugate(c, a.images()[i]);
    if (cur < best) best = cur;
  }
  return best;
}

std::vector<HomClass> conjugacy_partition_homs(
    const std::vector<Homomorphism>& homs) {
  for (size_t i = 1; i < homs.size(); ++i)
    if (!homs[i].domain().same(homs[0].domain()) ||
        !homs[i].codomain().same(homs[0].codomain()))
      throw ValidationError("conjugacy_partition_homs: mixed domains or "
                            "codomains");
  std::map<std::vector<Elem>, std::vector<int>> buckets;
  for (size_t i = 0; i < homs.size(); ++i)
    buckets[canonical_conjugate(homs[i])].push_back(static_cast<int>(i));

  std::vector<HomClass> classes;
  classes.reserve(buckets.size());
  for (auto& [canon, members] : buckets)
    classes.push_back(HomClass{
        Homomorphism(homs[0].domain(), homs[0].codomain(), canon),
        std::move(members)});
  return classes;
}

int AutomorphismGroup::index_of(const std::vector<Elem>& perm) const {
  auto it = std::lower_bound(perms.begin(), perms.end(), perm);
  if (it == perms.end() || *it != perm) return -1;
  return static_cast<int>(it - perms.begin());
}

AutomorphismGroup automorphism_group(const FiniteGroup& g,
                                     const SearchBudget& budget) {
  auto endos = enumerate_homs(g, g, budget);
  std::vector<std::vector<Elem>> perms;
  for (const auto& h : endos)
    if (h.is_injective()) perms.push_back(h.images());
  std::sort(perms.begin(), perms.end());

  const int n = static_cast<int>(perms.size());
  std::vector<Elem> table(static_cast<size_t>(n) * n);
  std::vector<Elem> comp(g.order());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (Elem x = 0; x < g.order(); ++x)
        comp[static_cast<size_t>(x)] =
            perms[static_cast<size_t>(i)]
                 [static_cast<size_t>(perms[static_cast<size_t>(j)]
                                           [static_cast<size_t>(x)])];
      auto it = std::lower_bound(perms.begin(), perms.end(), comp);
      table[static_cast<size_t>(i) * n + j] =
          static_cast<Elem>(it - perms.begin());
    }
  FiniteGroup aut = FiniteGroup::from_flat_table("Aut(" + g.label() + ")", n,
                                                 std::move(table));
  return AutomorphismGroup{std::move(aut), std::move(perms)};
}

std::vector<GroupAction> enumerate_actions(const FiniteGroup& q,
                                           const FiniteGroup& g,
                                           const SearchBudget& budget) {
  auto aut = automorphism_group(g, budget);
  auto homs = enumerate_homs(q, aut.group, budget);
  std::vector<GroupAction> actions;
  actions.reserve(homs.size());
  for (const auto& h : homs) {
    std::vector<std::vector<Elem>> perms(q.order());
    for (Elem x = 0; x < q.order(); ++x)
      perms[static_cast<size_t>(x)] = aut.perms[static_cast<size_t>(h(x))];
    actions.emplace_back(q, g, std::move(perms));
  }
  return actions;
}

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                   const SearchBudget& budget) {
  if (a.order() != b.order()) return false;
  for (const auto& h : enumerate_homs(a, b, budget))
    if (h.is_injective()) return true;
  return false;
}

}  // namespace galdesc
