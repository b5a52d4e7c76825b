#include "galdesc/cohomology.hpp"

#include <algorithm>
#include <map>

#include "galdesc/homsearch.hpp"
#include "galdesc/intmat.hpp"

namespace galdesc {

namespace {

bool cocycle_identity_holds(const FiniteGroup& q, const FiniteGroup& g,
                            const GroupAction& theta,
                            const std::vector<Elem>& z) {
  for (Elem a = 0; a < q.order(); ++a)
    for (Elem b = 0; b < q.order(); ++b)
      if (z[static_cast<size_t>(q.mul(a, b))] !=
          g.mul(z[static_cast<size_t>(a)],
                theta.apply(a, z[static_cast<size_t>(b)])))
        return false;
  return true;
}

}  // namespace

std::vector<OneCocycle> enumerate_one_cocycles(const FiniteGroup& q,
                                               const FiniteGroup& g,
                                               const GroupAction& theta,
                                               const SearchBudget& budget) {
  if (!theta.actor().same(q) || !theta.target().same(g))
    throw ValidationError("enumerate_one_cocycles: action does not match "
                          "(Q, G)");

  auto gens = generating_sequence(q);
  long long count = 1;
  for (size_t i = 0; i < gens.size(); ++i) {
    count *= g.order();
    if (count > budget.max_candidates)
      throw BudgetError("enumerate_one_cocycles: candidate count exceeds "
                        "max_candidates " +
                        std::to_string(budget.max_candidates));
  }

  // breadth-first word decomposition, as in the homomorphism search
  std::vector<Elem> order_q{q.identity()};
  std::vector<std::pair<Elem, int>> via(q.order(), {-1, -1});
  std::vector<bool> seen(q.order(), false);
  seen[static_cast<size_t>(q.identity())] = true;
  for (size_t i = 0; i < order_q.size(); ++i)
    for (size_t k = 0; k < gens.size(); ++k) {
      Elem y = q.mul(order_q[i], gens[k]);
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = true;
        via[static_cast<size_t>(y)] = {order_q[i], static_cast<int>(k)};
        order_q.push_back(y);
      }
    }

  std::vector<OneCocycle> found;
  const size_t k = gens.size();
  if (k == 0) {
    found.push_back(OneCocycle{std::vector<Elem>(q.order(), g.identity())});
    return found;
  }

  std::vector<size_t> idx(k, 0);
  std::vector<Elem> z(q.order());
  while (true) {
    z.assign(q.order(), -1);
    z[static_cast<size_t>(q.identity())] = g.identity();
    for (Elem x : order_q) {
      if (x == q.identity()) continue;
      auto [prefix, gi] = via[static_cast<size_t>(x)];
      // z(prefix * gen) = z(prefix) * theta_prefix(z(gen))
      Elem zg = static_cast<Elem>(idx[static_cast<size_t>(gi)]);
      z[static_cast<size_t>(x)] =
          g.mul(z[static_cast<size_t>(prefix)], theta.apply(prefix, zg));
    }
    if (cocycle_identity_holds(q, g, theta, z))
      found.push_back(OneCocycle{z});

    size_t pos = 0;
    while (pos < k && ++idx[pos] == static_cast<size_t>(g.order())) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }

  std::sort(found.begin(), found.end(),
            [](const OneCocycle& a, const OneCocycle& b) {
              return a.values < b.values;
            });
  return found;
}

std::vector<H1Class> h1_classes(const FiniteGroup& q, const FiniteGroup& g,
                                const GroupAction& theta,
                                const SearchBudget& budget) {
  auto cocycles = enumerate_one_cocycles(q, g, theta, budget);

  std::map<std::vector<Elem>, int> index_of;
  for (size_t i = 0; i < cocycles.size(); ++i)
    index_of[cocycles[i].values] = static_cast<int>(i);

  // twisted-coboundary orbit of each cocycle
  std::map<std::vector<Elem>, std::vector<int>> buckets;
  std::vector<Elem> translated(q.order());
  for (size_t i = 0; i < cocycles.size(); ++i) {
    std::vector<Elem> best = cocycles[i].values;
    for (Elem c = 0; c < g.order(); ++c) {
      for (Elem x = 0; x < q.order(); ++x)
        translated[static_cast<size_t>(x)] =
            g.mul(g.mul(g.inverse(c), cocycles[i].values[static_cast<size_t>(x)]),
                  theta.apply(x, c));
      if (index_of.find(translated) == index_of.end())
        throw TheoremViolation("coboundary translate of a cocycle is not a "
                               "cocycle");
      if (translated < best) best = translated;
    }
    buckets[best].push_back(static_cast<int>(i));
  }

  std::vector<H1Class> classes;
  classes.reserve(buckets.size());
  for (auto& [canon, members] : buckets)
    classes.push_back(H1Class{OneCocycle{canon}, std::move(members)});
  return classes;
}

AbelianBasis abelian_basis(const FiniteGroup& a) {
  if (!a.is_abelian())
    throw ValidationError("abelian_basis: group '" + a.label() +
                          "' is not abelian");

  AbelianBasis basis{a, {}, {}, {}};

  // peel off maximal-order cyclic factors, lifting representatives whose
  // order survives the quotient
  FiniteGroup current = a;
  Homomorphism down = Homomorphism::identity(a);  // a -> current
  while (current.order() > 1) {
    Elem best = -1;
    int best_order = 0;
    for (Elem x = 0; x < current.order(); ++x) {
      int o = current.element_order(x);
      if (o > best_order) {
        best = x;
        best_order = o;
      }
    }
    Elem lift = -1;
    for (Elem x = 0; x < a.order(); ++x)
      if (down(x) == best && a.element_order(x) == best_order) {
        lift = x;
        break;
      }
    if (lift < 0)
      throw TheoremViolation("no representative of matching order while "
                             "decomposing an abelian group");
    basis.generators.push_back(lift);
    basis.orders.push_back(best_order);

    std::vector<Elem> span_gens;
    for (Elem gen : basis.generators) span_gens.push_back(gen);
    Subgroup span = Subgroup::generated(a, span_gens);
    QuotientResult quo = quotient_group(a, span);
    current = quo.group;
    down = quo.projection;
  }

  // coordinates of every element, by full enumeration of the tuples
  const size_t k = basis.generators.size();
  basis.coords.assign(a.order(), {});
  std::vector<int> tuple(k, 0);
  long long combos = 1;
  for (int d : basis.orders) combos *= d;
  if (combos != a.order())
    throw TheoremViolation("cyclic factor orders do not multiply to |A|");
  for (long long n = 0; n < combos; ++n) {
    Elem value = a.identity();
    for (size_t i = 0; i < k; ++i)
      for (int rep = 0; rep < tuple[i]; ++rep)
        value = a.mul(value, basis.generators[i]);
    if (!basis.coords[static_cast<size_t>(value)].empty() && k > 0)
      throw TheoremViolation("duplicate coordinates while decomposing an "
                             "abelian group");
    basis.coords[static_cast<size_t>(value)] = tuple;

    size_t pos = 0;
    while (pos < k && ++tuple[pos] == basis.orders[pos]) {
      tuple[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  if (a.order() == 1) basis.coords[static_cast<size_t>(a.identity())] = {};
  return basis;
}

Elem AbelianBasis::element_of(const std::vector<int>& coordinates) const {
  Elem value = group.identity();
  for (size_t i = 0; i < generators.size(); ++i) {
    int c = ((coordinates[i] % orders[i]) + orders[i]) % orders[i];
    for (int rep = 0; rep < c; ++rep)
      value = group.mul(value, generators[i]);
  }
  return value;
}

namespace {

// Coordinates for normalized cochains: one slot per (tuple of non-identity
// arguments, cyclic factor).
struct CochainIndex {
  std::vector<Elem> non_identity;       // the non-identity elements of Q
  std::vector<int> position;            // Q element -> position, -1 for e
  int factors;

  CochainIndex(const FiniteGroup& q, int k) : factors(k) {
    position.assign(q.order(), -1);
    for (Elem x = 0; x < q.order(); ++x)
      if (x != q.identity()) {
        position[static_cast<size_t>(x)] =
            static_cast<int>(non_identity.size());
        non_identity.push_back(x);
      }
  }
  int count() const { return static_cast<int>(non_identity.size()); }
  int pair_slot(int p1, int p2, int j) const {
    return (p1 * count() + p2) * factors + j;
  }
  int single_slot(int p, int j) const { return p * factors + j; }
};

}  // namespace

TwoCohomologyGroup h2_abelian(const FiniteGroup& q, const FiniteGroup& a,
                              const GroupAction& action,
                              const SearchBudget& budget) {
  if (!action.actor().same(q) || !action.target().same(a))
    throw ValidationError("h2_abelian: action does not match (Q, A)");
  AbelianBasis basis = abelian_basis(a);
  const int k = static_cast<int>(basis.generators.size());

  TwoCohomologyGroup out{q, a, {}, 1, {}};

  CochainIndex ci(q, k);
  const int nq = ci.count();
  const int n1 = nq * k;
  const int n2 = nq * nq * k;
  if (static_cast<long long>(q.order()) * q.order() * std::max(k, 1) >
      budget.max_candidates)
    throw BudgetError("h2_abelian: cochain space exceeds max_candidates");
  if (n2 == 0) return out;  // trivial Q: nothing beyond the normalized zero

  // action matrices: theta_q(a_j) = sum_l m[l][j] a_l
  std::vector<IntMat> act(q.order());
  for (Elem x = 0; x < q.order(); ++x) {
    IntMat m = IntMat::zero(k, k);
    for (int j = 0; j < k; ++j) {
      const auto& c =
          basis.coords[static_cast<size_t>(action.apply(x, basis.generators[j]))];
      for (int l = 0; l < k; ++l) m.at(l, j) = c[static_cast<size_t>(l)];
    }
    act[static_cast<size_t>(x)] = std::move(m);
  }

  // cocycle conditions: for q1,q2,q3 != e and each factor l,
  //   theta_q1 f(q2,q3) - f(q1 q2, q3) + f(q1, q2 q3) - f(q1, q2) = 0,
  // with slots at identity arguments pinned to zero by normalization
  const int n3 = nq * nq * nq * k;
  IntMat big = IntMat::zero(n3, n2 + n3);
  int row_block = 0;
  for (int p1 = 0; p1 < nq; ++p1)
    for (int p2 = 0; p2 < nq; ++p2)
      for (int p3 = 0; p3 < nq; ++p3) {
        Elem q1 = ci.non_identity[static_cast<size_t>(p1)];
        Elem q2 = ci.non_identity[static_cast<size_t>(p2)];
        Elem q3 = ci.non_identity[static_cast<size_t>(p3)];
        for (int l = 0; l < k; ++l) {
          const int row = row_block * k + l;
          const IntMat& m = act[static_cast<size_t>(q1)];
          for (int j = 0; j < k; ++j)
            big.at(row, ci.pair_slot(p2, p3, j)) += m.at(l, j);
          Elem q12 = q.mul(q1, q2);
          if (q12 != q.identity())
            big.at(row, ci.pair_slot(ci.position[static_cast<size_t>(q12)], p3,
                                     l)) -= 1;
          Elem q23 = q.mul(q2, q3);
          if (q23 != q.identity())
            big.at(row, ci.pair_slot(p1, ci.position[static_cast<size_t>(q23)],
                                     l)) += 1;
          big.at(row, ci.pair_slot(p1, p2, l)) -= 1;
          // slack column: the condition holds modulo the factor order
          big.at(row, n2 + row) = basis.orders[static_cast<size_t>(l)];
        }
        ++row_block;
      }

  // cocycle lattice: projection of the kernel onto the cochain slots
  IntMat raw_kernel = kernel_lattice_basis(big);
  IntMat z2 = IntMat::zero(n2, raw_kernel.cols);
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < raw_kernel.cols; ++j)
      z2.at(i, j) = raw_kernel.at(i, j);

  // coboundaries d(u)(q1,q2) = theta_q1 u(q2) - u(q1 q2) + u(q1), plus the
  // factor-order relations
  IntMat bounds = IntMat::zero(n2, n1 + n2);
  for (int p1 = 0; p1 < nq; ++p1)
    for (int p2 = 0; p2 < nq; ++p2) {
      Elem q1 = ci.non_identity[static_cast<size_t>(p1)];
      Elem q2 = ci.non_identity[static_cast<size_t>(p2)];
      for (int l = 0; l < k; ++l) {
        const int row = ci.pair_slot(p1, p2, l);
        const IntMat& m = act[static_cast<size_t>(q1)];
        for (int j = 0; j < k; ++j)
          bounds.at(row, ci.single_slot(p2, j)) += m.at(l, j);
        Elem q12 = q.mul(q1, q2);
        if (q12 != q.identity())
          bounds.at(row,
                    ci.single_slot(ci.position[static_cast<size_t>(q12)], l)) -=
              1;
        bounds.at(row, ci.single_slot(p1, l)) += 1;
      }
    }
  for (int i = 0; i < n2; ++i)
    bounds.at(i, n1 + i) = basis.orders[static_cast<size_t>(i % k)];

  // express the coboundary lattice in the cocycle basis and read the
  // quotient off a final Smith reduction
  auto w = solve_columns(z2, bounds);
  if (!w)
    throw TheoremViolation("coboundary lattice does not lie inside the "
                           "cocycle lattice");
  SmithForm sw = smith_normal_form(*w);

  if (sw.rank < w->rows)
    throw TheoremViolation("second cohomology came out infinite");
  for (int i = 0; i < sw.rank; ++i) {
    long long s = sw.d.at(i, i);
    if (s > 1) {
      out.invariant_factors.push_back(s);
      out.order *= s;
    }
  }

  // representative for each invariant factor: cocycle vector z2 * u_inv e_i
  for (int i = 0; i < sw.rank; ++i) {
    if (sw.d.at(i, i) <= 1) continue;
    std::vector<long long> zvec(static_cast<size_t>(z2.cols), 0);
    for (int r = 0; r < z2.cols; ++r) zvec[static_cast<size_t>(r)] =
        sw.u_inv.at(r, i);
    std::vector<Elem> table(static_cast<size_t>(q.order()) * q.order(),
                            a.identity());
    for (int p1 = 0; p1 < nq; ++p1)
      for (int p2 = 0; p2 < nq; ++p2) {
        std::vector<int> coords(static_cast<size_t>(k), 0);
        for (int l = 0; l < k; ++l) {
          long long v = 0;
          for (int c = 0; c < z2.cols; ++c)
            v += z2.at(ci.pair_slot(p1, p2, l), c) * zvec[static_cast<size_t>(c)];
          long long d = basis.orders[static_cast<size_t>(l)];
          coords[static_cast<size_t>(l)] = static_cast<int>(((v % d) + d) % d);
        }
        Elem q1 = ci.non_identity[static_cast<size_t>(p1)];
        Elem q2 = ci.non_identity[static_cast<size_t>(p2)];
        table[static_cast<size_t>(q1) * q.order() + q2] =
            basis.element_of(coords);
      }
    out.representatives.push_back(std::move(table));
  }

  // canonical report order: lexicographic over table entries
  std::sort(out.representatives.begin(), out.representatives.end());

  // every representative must satisfy the cocycle identity
  for (const auto& table : out.representatives)
    for (Elem q1 = 0; q1 < q.order(); ++q1)
      for (Elem q2 = 0; q2 < q.order(); ++q2)
        for (Elem q3 = 0; q3 < q.order(); ++q3) {
          Elem lhs = a.mul(action.apply(q1, table[static_cast<size_t>(q2) *
                                                      q.order() +
                                                  q3]),
                           table[static_cast<size_t>(q1) * q.order() +
                                 q.mul(q2, q3)]);
          Elem rhs = a.mul(table[static_cast<size_t>(q.mul(q1, q2)) *
                                     q.order() +
                                 q3],
                           table[static_cast<size_t>(q1) * q.order() + q2]);
          if (lhs != rhs)
            throw TheoremViolation("computed representative violates the "
                                   "2-cocycle identity");
        }
  return out;
}

long long h2_order_bruteforce(const FiniteGroup& q, const FiniteGroup& a,
                              const GroupAction& action) {
  if (!a.is_abelian())
    throw ValidationError("h2_order_bruteforce: coefficients must be abelian");
  std::vector<Elem> non_identity;
  for (Elem x = 0; x < q.order(); ++x)
    if (x != q.identity()) non_identity.push_back(x);
  const int nq = static_cast<int>(non_identity.size());
  const int slots = nq * nq;

  long long tables = 1;
  for (int i = 0; i < slots; ++i) {
    tables *= a.order();
    if (tables > 2'000'000)
      throw BudgetError("h2_order_bruteforce: table space too large");
  }

  auto table_value = [&](const std::vector<Elem>& t, Elem x, Elem y) {
    if (x == q.identity() || y == q.identity()) return a.identity();
    int px = static_cast<int>(std::lower_bound(non_identity.begin(),
                                               non_identity.end(), x) -
                              non_identity.begin());
    int py = static_cast<int>(std::lower_bound(non_identity.begin(),
                                               non_identity.end(), y) -
                              non_identity.begin());
    return t[static_cast<size_t>(px * nq + py)];
  };

  auto is_cocycle = [&](const std::vector<Elem>& t) {
    for (Elem q1 = 0; q1 < q.order(); ++q1)
      for (Elem q2 = 0; q2 < q.order(); ++q2)
        for (Elem q3 = 0; q3 < q.order(); ++q3) {
          Elem lhs = a.mul(action.apply(q1, table_value(t, q2, q3)),
                           table_value(t, q1, q.mul(q2, q3)));
          Elem rhs = a.mul(table_value(t, q.mul(q1, q2), q3),
                           table_value(t, q1, q2));
          if (lhs != rhs) return false;
        }
    return true;
  };

  long long cocycles = 0;
  std::vector<Elem> t(static_cast<size_t>(std::max(slots, 1)), a.identity());
  if (slots == 0) return 1;
  std::vector<int> idx(static_cast<size_t>(slots), 0);
  while (true) {
    for (int i = 0; i < slots; ++i) t[static_cast<size_t>(i)] = idx[static_cast<size_t>(i)];
    if (is_cocycle(t)) ++cocycles;
    int pos = 0;
    while (pos < slots && ++idx[static_cast<size_t>(pos)] == a.order()) {
      idx[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == slots) break;
  }

  // distinct coboundaries of normalized 1-cochains
  std::vector<std::vector<Elem>> boundaries;
  std::vector<int> uidx(static_cast<size_t>(std::max(nq, 1)), 0);
  while (true) {
    std::vector<Elem> u(q.order(), a.identity());
    for (int i = 0; i < nq; ++i)
      u[static_cast<size_t>(non_identity[static_cast<size_t>(i)])] =
          uidx[static_cast<size_t>(i)];
    std::vector<Elem> der(static_cast<size_t>(std::max(slots, 1)),
                          a.identity());
    for (int p1 = 0; p1 < nq; ++p1)
      for (int p2 = 0; p2 < nq; ++p2) {
        Elem q1 = non_identity[static_cast<size_t>(p1)];
        Elem q2 = non_identity[static_cast<size_t>(p2)];
        Elem v = a.mul(action.apply(q1, u[static_cast<size_t>(q2)]),
                       a.mul(a.inverse(u[static_cast<size_t>(q.mul(q1, q2))]),
                             u[static_cast<size_t>(q1)]));
        der[static_cast<size_t>(p1 * nq + p2)] = v;
      }
    boundaries.push_back(std::move(der));
    if (nq == 0) break;
    int pos = 0;
    while (pos < nq && ++uidx[static_cast<size_t>(pos)] == a.order()) {
      uidx[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == nq) break;
  }
  std::sort(boundaries.begin(), boundaries.end());
  boundaries.erase(std::unique(boundaries.begin(), boundaries.end()),
                   boundaries.end());

  return cocycles / static_cast<long long>(boundaries.size());
}

ObstructionReport obstruction_report(
    const FiniteGroup& g, const FiniteGroup& q,
    const std::optional<GroupAction>& action_on_center,
    const SearchBudget& budget) {
  Subgroup z = center(g);
  if (z.order() == 1)
    return ObstructionReport{std::move(z), true, std::nullopt};

  EmbeddedGroup zg = subgroup_as_group(z, "Z(" + g.label() + ")");
  GroupAction action = action_on_center.has_value()
                           ? *action_on_center
                           : GroupAction::trivial(q, zg.group);
  if (!action.actor().same(q) || !action.target().same(zg.group))
    throw ValidationError("obstruction_report: action must act on the "
                          "center rebuilt as a group");
  TwoCohomologyGroup h2 = h2_abelian(q, zg.group, action, budget);
  return ObstructionReport{std::move(z), false, std::move(h2)};
}

}  // namespace galdesc
