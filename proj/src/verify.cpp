#include "galdesc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "galdesc/catalog.hpp"
#include "galdesc/cohomology.hpp"
#include "galdesc/descent.hpp"
#include "galdesc/extension.hpp"
#include "galdesc/homsearch.hpp"
#include "galdesc/twist.hpp"

namespace galdesc {

namespace {

struct Sweep {
  std::vector<FiniteGroup> g_all;      // full list
  std::vector<FiniteGroup> g_descent;  // without the twisting-only groups
  std::vector<FiniteGroup> q_list;
};

Sweep resolve_sweep(const VerifyOptions& opt) {
  Sweep sweep;
  for (const auto& name : opt.sweep_g) {
    FiniteGroup g = build_group(name);
    bool twisting_only =
        std::find(opt.twisting_only_g.begin(), opt.twisting_only_g.end(),
                  name) != opt.twisting_only_g.end();
    if (!twisting_only) sweep.g_descent.push_back(g);
    sweep.g_all.push_back(std::move(g));
  }
  for (const auto& name : opt.sweep_q)
    sweep.q_list.push_back(build_group(name));
  return sweep;
}

std::vector<GroupAction> actions_for(const FiniteGroup& q,
                                     const FiniteGroup& g,
                                     const VerifyOptions& opt) {
  if (g.order() <= opt.action_g_cap)
    return enumerate_actions(q, g, opt.budget);
  return {GroupAction::trivial(q, g)};
}

struct Failure {
  std::string text;
};

using Criterion = CriterionResult;

// ---- criterion 1: minimal descent over every split extension ----------

Criterion run_descent_suite(const Sweep& sweep, const VerifyOptions& opt) {
  Criterion c{1, "minimal-descent-suite", true, 0, ""};
  long long extensions = 0;
  try {
    for (const auto& g : sweep.g_descent)
      for (const auto& q : sweep.q_list) {
        if (static_cast<long long>(g.order()) * q.order() > opt.gamma_cap)
          continue;
        for (const auto& theta : actions_for(q, g, opt)) {
          SplitExtension se = split_extension(g, q, theta, opt.budget);
          const GroupExtension& ext = se.extension;
          auto sections = enumerate_sections(ext, opt.budget);
          if (static_cast<int>(sections.size()) > opt.section_cap)
            sections.erase(sections.begin() + opt.section_cap, sections.end());
          ++extensions;
          for (const auto& s : sections) {
            // V from the centralizer route equals the normal core
            if (!verify_normal_core_identity(ext, s))
              throw Failure{"normal-core identity failed over " +
                            ext.total_group().label()};
            DescentReport rep = minimal_descent(ext, s, opt.budget);
            if (!rep.aut_embedding.is_injective())
              throw Failure{"Gal(E/K) does not embed into Aut(G) over " +
                            ext.total_group().label()};
            if (!rep.galois_over_e)
              throw Failure{"restriction to E_subgroup is not Galois over " +
                            ext.total_group().label()};
            if (!rep.minimal)
              throw Failure{"E_subgroup is not minimal over " +
                            ext.total_group().label()};
            QuotientDecomposition dec = decompose_quotient(ext, s, opt.budget);
            if (!dec.kernel_is_v || !dec.bijective)
              throw Failure{"factor map is not an isomorphism onto the "
                            "semidirect product over " +
                            ext.total_group().label()};
            c.checks += 4;
          }
        }
      }
    std::ostringstream d;
    d << extensions << " extensions";
    c.detail = d.str();
  } catch (const Failure& f) {
    c.pass = false;
    c.detail = f.text;
  } catch (const Error& e) {
    c.pass = false;
    c.detail = e.what();
  }
  return c;
}

// ---- criterion 2: twisting point counts --------------------------------

Criterion run_twisting_count_suite(const Sweep& sweep,
                                   const VerifyOptions& opt) {
  Criterion c{2, "twisting-point-counts", true, 0, ""};
  try {
    for (const auto& g : sweep.g_all) {
      if (g.order() > opt.twist_g_cap) continue;
      for (const auto& q : sweep.q_list) {
        if (q.order() > opt.twist_q_cap) continue;
        auto homs = enumerate_homs(q, g, opt.budget);
        std::vector<std::vector<Elem>> canon(homs.size());
        std::vector<long> cent(homs.size());
        for (size_t i = 0; i < homs.size(); ++i) {
          canon[i] = canonical_conjugate(homs[i]);
          cent[i] = centralizer(g, homs[i].image().elements()).order();
        }
        for (size_t ai = 0; ai < homs.size(); ++ai)
          for (size_t pi = 0; pi < homs.size(); ++pi) {
            long direct = 0;
            for (Elem h = 0; h < g.order(); ++h) {
              bool fixed = true;
              for (Elem y = 0; y < q.order(); ++y)
                if (g.mul(g.mul(homs[pi](y), h),
                          g.inverse(homs[ai](y))) != h) {
                  fixed = false;
                  break;
                }
              if (fixed) ++direct;
            }
            long expected = canon[ai] == canon[pi] ? cent[ai] : 0;
            if (direct != expected)
              throw Failure{"fixed-point count off over (" + g.label() +
                            ", " + q.label() + ")"};
            ++c.checks;
          }
      }
    }
  } catch (const Failure& f) {
    c.pass = false;
    c.detail = f.text;
  } catch (const Error& e) {
    c.pass = false;
    c.detail = e.what();
  }
  return c;
}

// ---- criterion 3: three routes to the Galois criterion -----------------

Criterion run_galois_criterion_suite(const Sweep& sweep,
                                     const VerifyOptions& opt) {
  Criterion c{3, "galois-criterion-agreement", true, 0, ""};
  try {
    for (const auto& g : sweep.g_all) {
      if (g.order() > opt.twist_g_cap) continue;
      Subgroup z = center(g);
      for (const auto& q : sweep.q_list) {
        if (q.order() > opt.twist_q_cap) continue;
        if (static_cast<long long>(g.order()) * q.order() >
            opt.budget.max_total_order)
          continue;
        for (const auto& alpha : enumerate_homs(q, g, opt.budget)) {
          TwistModel model(g, q, alpha);

          bool central = true;
          for (Elem v : alpha.images())
            if (!z.contains(v)) {
              central = false;
              break;
            }

          TwistAction action = twist_action(model);
          Subgroup stab = identity_stabilizer(action);
          bool stab_normal = is_normal(action.product, stab);

          std::vector<Elem> graph_elems;
          for (Elem y = 0; y < q.order(); ++y)
            graph_elems.push_back(pair_index(g, alpha(y), y));
          bool graph_normal = is_normal(
              action.product,
              Subgroup::from_elements(action.product, graph_elems));

          if (central != graph_normal || central != stab_normal)
            throw Failure{"Galois criteria disagree over (" + g.label() +
                          ", " + q.label() + ")"};
          if (!action.transitive)
            throw Failure{"twist action is not transitive over (" +
                          g.label() + ", " + q.label() + ")"};
          ++c.checks;
        }
      }
    }
  } catch (const Failure& f) {
    c.pass = false;
    c.detail = f.text;
  } catch (const Error& e) {
    c.pass = false;
    c.detail = e.what();
  }
  return c;
}

// ---- criterion 4: specialization containment for lift pairs ------------

Criterion run_crux_suite(const Sweep& sweep, const VerifyOptions& opt) {
  Criterion c{4, "specialization-containment", true, 0, ""};
  try {
    for (const auto& g : sweep.g_all) {
      if (g.order() > opt.twist_g_cap) continue;
      for (const auto& q : sweep.q_list) {
        if (q.order() > opt.twist_q_cap) continue;
        auto homs = enumerate_homs(q, g, opt.budget);
        auto classes = conjugacy_partition_homs(homs);
        for (const auto& cls : classes)
          for (int ai : cls.members)
            for (int pi : cls.members) {
              TwistModel model(g, q, homs[static_cast<size_t>(ai)]);
              PointClass point(homs[static_cast<size_t>(pi)]);
              CruxReport rep = crux_check(model, point);
              if (!rep.kernel_contained)
                throw Failure{"ker(phi) escapes alpha^-1(Z(G)) over (" +
                              g.label() + ", " + q.label() + ")"};
              if (!rep.restriction_trivial)
                throw Failure{"alpha restricted to ker(phi) is not trivial "
                              "over (" +
                              g.label() + ", " + q.label() + ")"};
              ++c.checks;
            }
      }
    }
  } catch (const Failure& f) {
    c.pass = false;
    c.detail = f.text;
  } catch (const Error& e) {
    c.pass = false;
    c.detail = e.what();
  }
  return c;
}

// ---- criterion 5: fiber count divisibility and class sizes -------------

Criterion run_class_size_suite(const Sweep& sweep, const VerifyOptions& opt) {
  Criterion c{5, "fiber-count-divisibility", true, 0, ""};
  try {
    for (const auto& g : sweep.g_all) {
      if (g.order() > opt.twist_g_cap) continue;
      long z_order = center(g).order();
      for (const auto& q : sweep.q_list) {
        if (q.order() > opt.twist_q_cap) continue;
        auto classes = classify_models(g, q, opt.budget);
        for (const auto& cls : classes) {
          if (cls.fiber_count_d % z_order != 0)
            throw Failure{"|Z(G)| does not divide d over (" + g.label() +
                          ", " + q.label() + ")"};
          if (g.order() % cls.fiber_count_d != 0)
            throw Failure{"d does not divide |G| over (" + g.label() + ", " +
                          q.label() + ")"};
          if (static_cast<long>(cls.size) * cls.fiber_count_d != g.order())
            throw Failure{"class size differs from |G|/d over (" + g.label() +
                          ", " + q.label() + ")"};
          c.checks += 3;
        }
        // fibers over points from a different class are empty
        for (const auto& model_cls : classes) {
          TwistModel model(g, q, model_cls.canonical);
          for (const auto& point_cls : classes) {
            if (&model_cls == &point_cls) continue;
            if (count_rational_points(model, PointClass(point_cls.canonical)) !=
                0)
              throw Failure{"nonzero fiber over an inequivalent point over (" +
                            g.label() + ", " + q.label() + ")"};
            ++c.checks;
          }
        }
      }
    }
  } catch (const Failure& f) {
    c.pass = false;
    c.detail = f.text;
  } catch (const Error& e) {
    c.pass = false;
    c.detail = e.what();
  }
  return c;
}

// ---- criterion 6: the relation does not depend on the model ------------

Criterion run_model_independence_suite(const Sweep& sweep,
                                       const VerifyOptions& opt) {
  Criterion c{6, "model-independence", true, 0, ""};
  try {
    for (const auto& g : sweep.g_all) {
      if (g.order() > opt.twist_g_cap) continue;
      Subgroup z = center(g);
      for (const auto& q : sweep.q_list) {
        if (q.order() > opt.twist_q_cap) continue;
        auto homs = enumerate_homs(q, g, opt.budget);
        std::vector<PointClass> points;
        points.reserve(homs.size());
        for (const auto& h : homs) points.emplace_back(h);
        for (const auto& alpha0 : homs) {
          bool central = true;
          for (Elem v : alpha0.images())
            if (!z.contains(v)) {
              central = false;
              break;
            }
          if (!central) continue;
          if (!model_independence_check(alpha0, points))
            throw Failure{"translated partition differs over (" + g.label() +
                          ", " + q.label() + ")"};
          ++c.checks;
        }
      }
    }
  } catch (const Failure& f) {
    c.pass = false;
    c.detail = f.text;
  } catch (const Error& e) {
    c.pass = false;
    c.detail = e.what();
  }
  return c;
}

// ---- criterion 7: nonabelian sections that refuse to descend -----------

Criterion run_nondescent_suite(const VerifyOptions& opt) {
  Criterion c{7, "nondescending-construction", true, 0, ""};
  try {
    for (const char* name : {"S3", "D4", "Q8", "A4"}) {
      FiniteGroup g = build_group(name);
      SplitExtension se =
          split_extension(g, g, GroupAction::trivial(g, g), opt.budget);
      Section canonical(se.extension, se.canonical_section);
      Homomorphism eps = Homomorphism::identity(g);
      Section twisted =
          nondescending_model_construction(g, eps, canonical);
      if (is_model_galois(se.extension, twisted))
        throw Failure{std::string("constructed section is Galois for ") +
                      name};
      ++c.checks;
    }
    // abelian kernels must be rejected
    FiniteGroup c4 = build_group("C4");
    SplitExtension se =
        split_extension(c4, c4, GroupAction::trivial(c4, c4), opt.budget);
    Section canonical(se.extension, se.canonical_section);
    bool rejected = false;
    try {
      nondescending_model_construction(c4, Homomorphism::identity(c4),
                                       canonical);
    } catch (const ValidationError&) {
      rejected = true;
    }
    if (!rejected) throw Failure{"abelian kernel was not rejected"};
    ++c.checks;
  } catch (const Failure& f) {
    c.pass = false;
    c.detail = f.text;
  } catch (const Error& e) {
    c.pass = false;
    c.detail = e.what();
  }
  return c;
}

// ---- criterion 8: cohomology cross-checks ------------------------------

Criterion run_cohomology_suite(const Sweep& sweep, const VerifyOptions& opt) {
  Criterion c{8, "cohomology-cross-checks", true, 0, ""};
  try {
    for (const auto& g : sweep.g_descent)
      for (const auto& q : sweep.q_list) {
        if (static_cast<long long>(g.order()) * q.order() > opt.gamma_cap)
          continue;
        for (const auto& theta : actions_for(q, g, opt)) {
          auto cocycles = enumerate_one_cocycles(q, g, theta, opt.budget);
          SplitExtension se = split_extension(g, q, theta, opt.budget);
          auto sections = enumerate_sections(se.extension, opt.budget);
          if (cocycles.size() != sections.size())
            throw Failure{"|Z^1| differs from the section count over (" +
                          g.label() + ", " + q.label() + ")"};
          ++c.checks;
        }
        // trivial action: cocycle classes match the model classes
        auto classes =
            h1_classes(q, g, GroupAction::trivial(q, g), opt.budget);
        auto models = classify_models(g, q, opt.budget);
        if (classes.size() != models.size())
          throw Failure{"first-cohomology class count differs from the model "
                        "class count over (" +
                        g.label() + ", " + q.label() + ")"};
        ++c.checks;
      }

    // second cohomology against the exhaustive oracle
    FiniteGroup c2 = build_group("C2");
    FiniteGroup c3 = build_group("C3");
    auto h2_a = h2_abelian(c2, c2, GroupAction::trivial(c2, c2), opt.budget);
    long long brute_a =
        h2_order_bruteforce(c2, c2, GroupAction::trivial(c2, c2));
    if (h2_a.order != 2 || brute_a != 2)
      throw Failure{"second cohomology of (C2, C2) is not of order 2"};
    auto h2_b = h2_abelian(c3, c2, GroupAction::trivial(c3, c2), opt.budget);
    long long brute_b =
        h2_order_bruteforce(c3, c2, GroupAction::trivial(c3, c2));
    if (h2_b.order != 1 || brute_b != 1)
      throw Failure{"second cohomology of (C3, C2) is not trivial"};
    c.checks += 2;
  } catch (const Failure& f) {
    c.pass = false;
    c.detail = f.text;
  } catch (const Error& e) {
    c.pass = false;
    c.detail = e.what();
  }
  return c;
}

}  // namespace

std::vector<CriterionResult> verify_all(const VerifyOptions& options) {
  Sweep sweep = resolve_sweep(options);
  std::vector<CriterionResult> results;
  auto timed = [&](auto&& suite) {
    auto begin = std::chrono::steady_clock::now();
    CriterionResult r = suite();
    auto end = std::chrono::steady_clock::now();
    r.millis = std::chrono::duration<double, std::milli>(end - begin).count();
    results.push_back(std::move(r));
  };
  timed([&] { return run_descent_suite(sweep, options); });
  timed([&] { return run_twisting_count_suite(sweep, options); });
  timed([&] { return run_galois_criterion_suite(sweep, options); });
  timed([&] { return run_crux_suite(sweep, options); });
  timed([&] { return run_class_size_suite(sweep, options); });
  timed([&] { return run_model_independence_suite(sweep, options); });
  timed([&] { return run_nondescent_suite(options); });
  timed([&] { return run_cohomology_suite(sweep, options); });
  return results;
}

std::string verify_report_text(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name
        << "  checks=" << r.checks;
    if (!r.detail.empty()) out << "  " << r.detail;
    out << "\n";
  }
  out << (all_passed(results) ? "all suites passed" : "suite failures present")
      << "\n";
  return out.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace galdesc
