#pragma once

#include <vector>

#include "galdesc/common.hpp"
#include "galdesc/extension.hpp"
#include "galdesc/group.hpp"
#include "galdesc/hom.hpp"

namespace galdesc {

/// A mere-cover model of the standard G-Galois model, encoded by the
/// homomorphism alpha: Q -> G that twists it. The associated section of
/// G x Q -> Q is the graph q -> (alpha(q), q).
struct TwistModel {
  FiniteGroup g;
  FiniteGroup q;
  Homomorphism alpha;

  TwistModel(FiniteGroup g_, FiniteGroup q_, Homomorphism alpha_);
};

/// A specialization datum: a homomorphism Q -> G considered up to
/// conjugation by G. Two points compare equal exactly when their
/// canonical (lexicographically smallest conjugate) forms agree.
class PointClass {
public:
  explicit PointClass(Homomorphism phi);

  const Homomorphism& lift() const noexcept { return phi_; }
  const std::vector<Elem>& canonical() const noexcept { return canonical_; }

  bool operator==(const PointClass& other) const {
    return canonical_ == other.canonical_;
  }

private:
  Homomorphism phi_;
  std::vector<Elem> canonical_;
};

/// The permutation table of the twisted cover: the pair (g, q) acts on G
/// by h -> g h alpha(q)^-1. The assignment is a homomorphism
/// G x Q -> Sym(G), verified on construction.
struct TwistAction {
  TwistModel model;
  FiniteGroup product;  // G x Q, pair index q*|G| + g
  std::vector<std::vector<Elem>> permutations;
  bool transitive;
};

TwistAction twist_action(const TwistModel& model);

/// Stabilizer of the identity of G under the twist action, as a subgroup
/// of G x Q. Equals the graph of alpha.
Subgroup identity_stabilizer(const TwistAction& action);

/// Number of elements of G fixed by every phi(q) . alpha(q)^-1 twist,
/// i.e. rational points of the model above the given point. Computed
/// directly and checked against the centralizer-order formula.
long count_rational_points(const TwistModel& model, const PointClass& point);

/// True when img(alpha) lies in the center of G. Cross-checked against
/// normality of the graph subgroup in G x Q.
bool is_twist_galois(const TwistModel& model);

/// alpha^-1(Z(G)): the subgroup of Q below which the model is Galois and
/// above which it never is. Minimality is verified by scanning all
/// strictly larger subgroups.
Subgroup minimal_galois_subgroup(const TwistModel& model);

/// ker(phi), well defined on the conjugacy class.
Subgroup specialization_subgroup(const PointClass& point);

struct CruxReport {
  Subgroup ker_phi;                    // of Q
  Subgroup alpha_preimage_center;      // of Q
  bool kernel_contained;               // ker(phi) inside alpha^-1(Z(G))
  bool restriction_trivial;            // alpha on ker(phi) conjugate to 1
};

/// Requires alpha conjugate to phi (a lift); throws ValidationError
/// otherwise.
CruxReport crux_check(const TwistModel& model, const PointClass& point);

/// One isomorphism class of mere-cover models over (G, Q).
struct ModelClass {
  Homomorphism canonical;
  int size;            // number of conjugate homomorphisms, = |G|/d
  bool galois;         // image central
  long fiber_count_d;  // |C_G(img alpha)|
};

std::vector<ModelClass> classify_models(const FiniteGroup& g,
                                        const FiniteGroup& q,
                                        const SearchBudget& budget = {});

/// Groups point indices by equality of canonical forms; classes and
/// members are sorted.
std::vector<std::vector<int>> point_partition(
    const std::vector<PointClass>& points);

struct SpecializationClass {
  std::vector<int> members;       // indices into the point list
  std::vector<Elem> canonical;    // shared canonical form
  long fiber_count;               // rational points of the model per fiber
  Subgroup specialization_kernel; // ker(phi) for the class
};

struct SpecializationReport {
  std::vector<SpecializationClass> classes;
  bool has_rational_point;  // some class has nonzero fiber count
  long d;                   // the nonzero fiber count, 0 if none
  long conjugate_models;    // |G|/d when d > 0, else 0
  bool center_divides_d;
  bool d_divides_group;
  bool single_nonzero_class;
};

SpecializationReport specialization_report(const TwistModel& model,
                                           const std::vector<PointClass>& points,
                                           const SearchBudget& budget = {});

/// Lemma-level independence of the point equivalence relation from the
/// chosen Galois model: translating every point by a central alpha0 must
/// leave the partition unchanged. Requires img(alpha0) central.
bool model_independence_check(const Homomorphism& alpha0,
                              const std::vector<PointClass>& points);

/// The model over (G, H) with alpha restricted to a subgroup H of Q.
TwistModel restrict_model(const TwistModel& model, const Subgroup& h);

}  // namespace galdesc
