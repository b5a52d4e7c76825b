#include "galdesc/twist.hpp"

#include <algorithm>
#include <map>

#include "galdesc/homsearch.hpp"

namespace galdesc {

namespace {

void require_same_site(const TwistModel& model, const PointClass& point,
                       const char* what) {
  if (!point.lift().domain().same(model.q) ||
      !point.lift().codomain().same(model.g))
    throw ValidationError(std::string(what) +
                          ": point and model live over different (G, Q)");
}

FiniteGroup product_group(const FiniteGroup& g, const FiniteGroup& q) {
  return semidirect_product(g, q, GroupAction::trivial(q, g)).total;
}

Subgroup graph_subgroup(const FiniteGroup& product, const TwistModel& model) {
  std::vector<Elem> elems;
  elems.reserve(model.q.order());
  for (Elem x = 0; x < model.q.order(); ++x)
    elems.push_back(pair_index(model.g, model.alpha(x), x));
  return Subgroup::from_elements(product, std::move(elems));
}

}  // namespace

TwistModel::TwistModel(FiniteGroup g_, FiniteGroup q_, Homomorphism alpha_)
    : g(std::move(g_)), q(std::move(q_)), alpha(std::move(alpha_)) {
  if (!alpha.domain().same(q) || !alpha.codomain().same(g))
    throw ValidationError("twist model: alpha must map Q into G");
}

PointClass::PointClass(Homomorphism phi)
    : phi_(std::move(phi)), canonical_(canonical_conjugate(phi_)) {}

TwistAction twist_action(const TwistModel& model) {
  const FiniteGroup& g = model.g;
  const FiniteGroup& q = model.q;
  FiniteGroup product = product_group(g, q);

  std::vector<std::vector<Elem>> perms(product.order());
  for (Elem y = 0; y < q.order(); ++y) {
    Elem a_inv = g.inverse(model.alpha(y));
    for (Elem x = 0; x < g.order(); ++x) {
      std::vector<Elem> p(g.order());
      for (Elem h = 0; h < g.order(); ++h)
        p[static_cast<size_t>(h)] = g.mul(g.mul(x, h), a_inv);
      perms[static_cast<size_t>(pair_index(g, x, y))] = std::move(p);
    }
  }

  // the assignment must be a homomorphism into Sym(G)
  for (Elem a = 0; a < product.order(); ++a)
    for (Elem b = 0; b < product.order(); ++b) {
      const auto& pa = perms[static_cast<size_t>(a)];
      const auto& pb = perms[static_cast<size_t>(b)];
      const auto& pab = perms[static_cast<size_t>(product.mul(a, b))];
      for (Elem h = 0; h < g.order(); ++h)
        if (pab[static_cast<size_t>(h)] !=
            pa[static_cast<size_t>(pb[static_cast<size_t>(h)])])
          throw TheoremViolation("twist action is not multiplicative");
    }

  // orbit of the identity of G
  std::vector<bool> reached(g.order(), false);
  std::vector<Elem> frontier{g.identity()};
  reached[static_cast<size_t>(g.identity())] = true;
  for (size_t i = 0; i < frontier.size(); ++i)
    for (const auto& p : perms) {
      Elem to = p[static_cast<size_t>(frontier[i])];
      if (!reached[static_cast<size_t>(to)]) {
        reached[static_cast<size_t>(to)] = true;
        frontier.push_back(to);
      }
    }
  bool transitive = static_cast<int>(frontier.size()) == g.order();

  return TwistAction{model, std::move(product), std::move(perms), transitive};
}

Subgroup identity_stabilizer(const TwistAction& action) {
  const FiniteGroup& g = action.model.g;
  std::vector<Elem> elems;
  for (Elem a = 0; a < action.product.order(); ++a)
    if (action.permutations[static_cast<size_t>(a)]
                           [static_cast<size_t>(g.identity())] ==
        g.identity())
      elems.push_back(a);
  return Subgroup::from_elements(action.product, std::move(elems));
}

long count_rational_points(const TwistModel& model, const PointClass& point) {
  require_same_site(model, point, "count_rational_points");
  const FiniteGroup& g = model.g;
  const FiniteGroup& q = model.q;
  const Homomorphism& phi = point.lift();

  long direct = 0;
  for (Elem h = 0; h < g.order(); ++h) {
    bool fixed = true;
    for (Elem y = 0; y < q.order(); ++y)
      if (g.mul(g.mul(phi(y), h), g.inverse(model.alpha(y))) != h) {
        fixed = false;
        break;
      }
    if (fixed) ++direct;
  }

  bool lift = canonical_conjugate(model.alpha) == point.canonical();
  long formula =
      lift ? centralizer(g, model.alpha.image().elements()).order() : 0;
  if (direct != formula)
    throw TheoremViolation("rational point count disagrees with the "
                           "centralizer formula");
  return direct;
}

bool is_twist_galois(const TwistModel& model) {
  Subgroup z = center(model.g);
  bool central = true;
  for (Elem y = 0; y < model.q.order(); ++y)
    if (!z.contains(model.alpha(y))) {
      central = false;
      break;
    }

  FiniteGroup product = product_group(model.g, model.q);
  bool graph_normal = is_normal(product, graph_subgroup(product, model));
  if (central != graph_normal)
    throw TheoremViolation("central-image and graph-normality criteria "
                           "disagree");
  return central;
}

Subgroup minimal_galois_subgroup(const TwistModel& model) {
  Subgroup result = model.alpha.preimage_of(center(model.g));
  if (!is_twist_galois(restrict_model(model, result)))
    throw TheoremViolation("restriction to alpha^-1(Z(G)) is not Galois");
  for (const auto& h : all_subgroups(model.q)) {
    if (h.order() <= result.order() || !h.contains_all(result)) continue;
    if (is_twist_galois(restrict_model(model, h)))
      throw TheoremViolation("a strictly larger subgroup than alpha^-1(Z(G)) "
                             "gives a Galois restriction");
  }
  return result;
}

Subgroup specialization_subgroup(const PointClass& point) {
  return point.lift().kernel();
}

CruxReport crux_check(const TwistModel& model, const PointClass& point) {
  require_same_site(model, point, "crux_check");
  if (canonical_conjugate(model.alpha) != point.canonical())
    throw ValidationError("crux_check: alpha is not a lift of the point's "
                          "homomorphism");

  Subgroup ker_phi = point.lift().kernel();
  Subgroup preimage = model.alpha.preimage_of(center(model.g));
  bool contained = preimage.contains_all(ker_phi);

  TwistModel restricted = restrict_model(model, ker_phi);
  std::vector<Elem> trivial_images(restricted.q.order(),
                                   model.g.identity());
  bool restriction_trivial =
      canonical_conjugate(restricted.alpha) == trivial_images;

  return CruxReport{std::move(ker_phi), std::move(preimage), contained,
                    restriction_trivial};
}

std::vector<ModelClass> classify_models(const FiniteGroup& g,
                                        const FiniteGroup& q,
                                        const SearchBudget& budget) {
  auto homs = enumerate_homs(q, g, budget);
  auto classes = conjugacy_partition_homs(homs);
  Subgroup z = center(g);

  std::vector<ModelClass> result;
  result.reserve(classes.size());
  for (auto& cls : classes) {
    bool galois = true;
    for (Elem v : cls.canonical.images())
      if (!z.contains(v)) {
        galois = false;
        break;
      }
    long d = centralizer(g, cls.canonical.image().elements()).order();
    int size = static_cast<int>(cls.members.size());
    if (static_cast<long>(size) * d != g.order())
      throw TheoremViolation("model class size differs from |G| divided by "
                             "the centralizer order");
    result.push_back(ModelClass{std::move(cls.canonical), size, galois, d});
  }
  return result;
}

std::vector<std::vector<int>> point_partition(
    const std::vector<PointClass>& points) {
  for (size_t i = 1; i < points.size(); ++i)
    if (!points[i].lift().domain().same(points[0].lift().domain()) ||
        !points[i].lift().codomain().same(points[0].lift().codomain()))
      throw ValidationError("point_partition: points live over different "
                            "(G, Q)");
  std::map<std::vector<Elem>, std::vector<int>> buckets;
  for (size_t i = 0; i < points.size(); ++i)
    buckets[points[i].canonical()].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> classes;
  classes.reserve(buckets.size());
  for (auto& [canon, members] : buckets) classes.push_back(std::move(members));
  // order by members so partitions compare as relations on the index set
  std::sort(classes.begin(), classes.end());
  return classes;
}

SpecializationReport specialization_report(
    const TwistModel& model, const std::vector<PointClass>& points,
    const SearchBudget& budget) {
  for (const auto& p : points)
    require_same_site(model, p, "specialization_report");

  auto partition = point_partition(points);
  SpecializationReport report;
  report.has_rational_point = false;
  report.d = 0;

  for (const auto& members : partition) {
    long count = count_rational_points(model, points[members[0]]);
    for (size_t i = 1; i < members.size(); ++i)
      if (count_rational_points(model, points[members[i]]) != count)
        throw TheoremViolation("fiber count varies inside one equivalence "
                               "class");
    report.classes.push_back(SpecializationClass{
        members, points[members[0]].canonical(), count,
        specialization_subgroup(points[members[0]])});
    if (count > 0) {
      report.has_rational_point = true;
      report.d = count;
    }
  }

  int nonzero = 0;
  for (const auto& cls : report.classes)
    if (cls.fiber_count > 0) ++nonzero;
  report.single_nonzero_class = nonzero <= 1;

  if (report.has_rational_point) {
    long z_order = center(model.g).order();
    report.center_divides_d = report.d % z_order == 0;
    report.d_divides_group = model.g.order() % report.d == 0;

    // conjugates of alpha among all homomorphisms Q -> G
    auto homs = enumerate_homs(model.q, model.g, budget);
    auto alpha_canon = canonical_conjugate(model.alpha);
    long conjugates = 0;
    for (const auto& h : homs)
      if (canonical_conjugate(h) == alpha_canon) ++conjugates;
    report.conjugate_models = conjugates;
    if (conjugates != model.g.order() / report.d)
      throw TheoremViolation("conjugate-model count differs from |G|/d");
  } else {
    report.center_divides_d = true;
    report.d_divides_group = true;
    report.conjugate_models = 0;
  }
  return report;
}

bool model_independence_check(const Homomorphism& alpha0,
                              const std::vector<PointClass>& points) {
  Subgroup z = center(alpha0.codomain());
  for (Elem v : alpha0.images())
    if (!z.contains(v))
      throw ValidationError("model_independence_check: alpha0 must have "
                            "central image");
  if (points.empty()) return true;

  const FiniteGroup& g = alpha0.codomain();
  const FiniteGroup& q = alpha0.domain();
  std::vector<PointClass> translated;
  translated.reserve(points.size());
  for (const auto& p : points) {
    if (!p.lift().domain().same(q) || !p.lift().codomain().same(g))
      throw ValidationError("model_independence_check: points live over a "
                            "different (G, Q)");
    std::vector<Elem> images(q.order());
    for (Elem x = 0; x < q.order(); ++x)
      images[static_cast<size_t>(x)] = g.mul(p.lift()(x), alpha0(x));
    translated.emplace_back(Homomorphism(q, g, std::move(images)));
  }
  return point_partition(points) == point_partition(translated);
}

TwistModel restrict_model(const TwistModel& model, const Subgroup& h) {
  if (!h.parent().same(model.q))
    throw ValidationError("restrict_model: subgroup must live in Q");
  EmbeddedGroup sub = subgroup_as_group(h);
  Homomorphism restricted = compose(model.alpha, sub.embedding);
  return TwistModel(model.g, sub.group, std::move(restricted));
}

}  // namespace galdesc
