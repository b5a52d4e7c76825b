#include "galdesc/group.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace galdesc {

namespace {

void validate_table(const std::string& label, int order,
                    const std::vector<Elem>& table, Elem& identity,
                    std::vector<Elem>& inverses) {
  if (order <= 0)
    throw ValidationError("group '" + label + "': order must be positive");
  if (table.size() != static_cast<size_t>(order) * order)
    throw ValidationError("group '" + label + "': table is not order x order");
  for (Elem v : table)
    if (v < 0 || v >= order)
      throw ValidationError("group '" + label + "': table entry out of range");

  auto at = [&](Elem a, Elem b) {
    return table[static_cast<size_t>(a) * order + b];
  };

  identity = -1;
  for (Elem e = 0; e < order; ++e) {
    bool ok = true;
    for (Elem x = 0; x < order && ok; ++x)
      ok = at(e, x) == x && at(x, e) == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0)
    throw ValidationError("group '" + label + "': no identity element");

  inverses.assign(order, -1);
  for (Elem a = 0; a < order; ++a) {
    for (Elem b = 0; b < order; ++b) {
      if (at(a, b) == identity && at(b, a) == identity) {
        inverses[a] = b;
        break;
      }
    }
    if (inverses[a] < 0)
      throw ValidationError("group '" + label + "': element " +
                            std::to_string(a) + " has no two-sided inverse");
  }

  if (order <= 64) {
    for (Elem x = 0; x < order; ++x)
      for (Elem y = 0; y < order; ++y)
        for (Elem z = 0; z < order; ++z)
          if (at(at(x, y), z) != at(x, at(y, z)))
            throw ValidationError("group '" + label + "': not associative at (" +
                                  std::to_string(x) + "," + std::to_string(y) +
                                  "," + std::to_string(z) + ")");
  } else {
    std::mt19937 rng(0x5eedu);
    std::uniform_int_distribution<Elem> pick(0, order - 1);
    for (int i = 0; i < 10'000; ++i) {
      Elem x = pick(rng), y = pick(rng), z = pick(rng);
      if (at(at(x, y), z) != at(x, at(y, z)))
        throw ValidationError("group '" + label + "': not associative at (" +
                              std::to_string(x) + "," + std::to_string(y) + "," +
                              std::to_string(z) + ")");
    }
  }
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::string label,
                                    const std::vector<std::vector<Elem>>& table) {
  const int order = static_cast<int>(table.size());
  std::vector<Elem> flat;
  flat.reserve(static_cast<size_t>(order) * order);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != order)
      throw ValidationError("group '" + label + "': ragged table row");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_flat_table(std::move(label), order, std::move(flat));
}

FiniteGroup FiniteGroup::from_flat_table(std::string label, int order,
                                         std::vector<Elem> table) {
  auto d = std::make_shared<Data>();
  validate_table(label, order, table, d->identity, d->inverses);
  d->order = order;
  d->table = std::move(table);
  d->label = std::move(label);
  return FiniteGroup(std::move(d));
}

int FiniteGroup::element_order(Elem a) const {
  int n = 1;
  Elem x = a;
  while (x != identity()) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order(); ++a)
    for (Elem b = a + 1; b < order(); ++b)
      if (!commutes(a, b)) return false;
  return true;
}

bool FiniteGroup::same(const FiniteGroup& other) const {
  if (d_ == other.d_) return true;
  return d_->order == other.d_->order && d_->table == other.d_->table;
}

Subgroup Subgroup::from_elements(const FiniteGroup& parent,
                                 std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  std::vector<bool> member(parent.order(), false);
  for (Elem x : elements) {
    if (x < 0 || x >= parent.order())
      throw ValidationError("subgroup of '" + parent.label() +
                            "': element index out of range");
    member[static_cast<size_t>(x)] = true;
  }
  if (elements.empty() || !member[static_cast<size_t>(parent.identity())])
    throw ValidationError("subgroup of '" + parent.label() +
                          "': missing identity");
  for (Elem x : elements) {
    if (!member[static_cast<size_t>(parent.inverse(x))])
      throw ValidationError("subgroup of '" + parent.label() +
                            "': not closed under inverse");
    for (Elem y : elements)
      if (!member[static_cast<size_t>(parent.mul(x, y))])
        throw ValidationError("subgroup of '" + parent.label() +
                              "': not closed under product");
  }
  return Subgroup(parent, std::move(elements), std::move(member));
}

Subgroup Subgroup::generated(const FiniteGroup& parent,
                             const std::vector<Elem>& generators) {
  std::vector<bool> member(parent.order(), false);
  std::vector<Elem> closure;
  auto add = [&](Elem x) {
    if (!member[static_cast<size_t>(x)]) {
      member[static_cast<size_t>(x)] = true;
      closure.push_back(x);
    }
  };
  add(parent.identity());
  for (Elem g : generators) {
    if (g < 0 || g >= parent.order())
      throw ValidationError("subgroup of '" + parent.label() +
                            "': generator index out of range");
    add(g);
  }
  for (size_t i = 0; i < closure.size(); ++i)
    for (size_t j = 0; j < closure.size(); ++j)
      add(parent.mul(closure[i], closure[j]));
  std::sort(closure.begin(), closure.end());
  return Subgroup(parent, std::move(closure), std::move(member));
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) {
  return generated(parent, {});
}

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  std::vector<Elem> all(parent.order());
  for (int i = 0; i < parent.order(); ++i) all[i] = i;
  std::vector<bool> member(parent.order(), true);
  return Subgroup(parent, std::move(all), std::move(member));
}

bool Subgroup::contains_all(const Subgroup& other) const {
  for (Elem x : other.elements())
    if (!contains(x)) return false;
  return true;
}

bool Subgroup::operator==(const Subgroup& other) const {
  return parent_.same(other.parent_) && elements_ == other.elements_;
}

Subgroup centralizer(const FiniteGroup& ambient, const std::vector<Elem>& target) {
  for (Elem t : target)
    if (t < 0 || t >= ambient.order())
      throw ValidationError("centralizer in '" + ambient.label() +
                            "': element index out of range");
  std::vector<Elem> result;
  for (Elem x = 0; x < ambient.order(); ++x) {
    bool central = true;
    for (Elem t : target)
      if (!ambient.commutes(x, t)) {
        central = false;
        break;
      }
    if (central) result.push_back(x);
  }
  return Subgroup::from_elements(ambient, std::move(result));
}

Subgroup centralizer(const FiniteGroup& ambient, const Subgroup& target) {
  if (!target.parent().same(ambient))
    throw ValidationError("centralizer: target lives in a different group");
  return centralizer(ambient, target.elements());
}

Subgroup center(const FiniteGroup& g) {
  return centralizer(g, Subgroup::whole(g));
}

Subgroup conjugate_subgroup(const FiniteGroup& ambient, Elem g, const Subgroup& h) {
  std::vector<Elem> conj;
  conj.reserve(h.elements().size());
  for (Elem x : h.elements()) conj.push_back(ambient.conjugate(g, x));
  return Subgroup::from_elements(ambient, std::move(conj));
}

Subgroup normal_core(const FiniteGroup& ambient, const Subgroup& h) {
  if (!h.parent().same(ambient))
    throw ValidationError("normal_core: subgroup lives in a different group");
  std::vector<bool> core(ambient.order(), false);
  for (Elem x : h.elements()) core[static_cast<size_t>(x)] = true;
  for (Elem g = 0; g < ambient.order(); ++g) {
    // drop elements outside g^-1 H g
    for (Elem x = 0; x < ambient.order(); ++x)
      if (core[static_cast<size_t>(x)] &&
          !h.contains(ambient.conjugate(g, x)))
        core[static_cast<size_t>(x)] = false;
  }
  std::vector<Elem> elems;
  for (Elem x = 0; x < ambient.order(); ++x)
    if (core[static_cast<size_t>(x)]) elems.push_back(x);
  return Subgroup::from_elements(ambient, std::move(elems));
}

bool is_normal(const FiniteGroup& ambient, const Subgroup& h) {
  for (Elem g = 0; g < ambient.order(); ++g)
    for (Elem x : h.elements())
      if (!h.contains(ambient.conjugate(g, x))) return false;
  return true;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (!a.parent().same(b.parent()))
    throw ValidationError("intersect: subgroups of different groups");
  std::vector<Elem> elems;
  for (Elem x : a.elements())
    if (b.contains(x)) elems.push_back(x);
  return Subgroup::from_elements(a.parent(), std::move(elems));
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  const int n = g.order();
  if (n > 64)
    throw BudgetError("all_subgroups: order " + std::to_string(n) +
                      " exceeds the supported bound 64");

  using Mask = unsigned long long;
  auto close = [&](Mask seed) {
    std::vector<Elem> work;
    Mask m = 0;
    auto add = [&](Elem x) {
      if (!(m >> x & 1)) {
        m |= Mask(1) << x;
        work.push_back(x);
      }
    };
    add(g.identity());
    for (Elem x = 0; x < n; ++x)
      if (seed >> x & 1) add(x);
    for (size_t i = 0; i < work.size(); ++i)
      for (size_t j = 0; j < work.size(); ++j)
        add(g.mul(work[i], work[j]));
    return m;
  };

  std::set<Mask> seen;
  std::vector<Mask> queue;
  Mask triv = close(0);
  seen.insert(triv);
  queue.push_back(triv);
  for (size_t i = 0; i < queue.size(); ++i) {
    Mask h = queue[i];
    for (Elem x = 0; x < n; ++x) {
      if (h >> x & 1) continue;
      Mask k = close(h | Mask(1) << x);
      if (seen.insert(k).second) queue.push_back(k);
    }
  }

  std::vector<Subgroup> result;
  result.reserve(seen.size());
  for (Mask m : seen) {
    std::vector<Elem> elems;
    for (Elem x = 0; x < n; ++x)
      if (m >> x & 1) elems.push_back(x);
    result.push_back(Subgroup::from_elements(g, std::move(elems)));
  }
  std::sort(result.begin(), result.end(),
            [](const Subgroup& a, const Subgroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.elements() < b.elements();
            });
  return result;
}

}  // namespace galdesc
