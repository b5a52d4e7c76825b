#include "doctest.h"

#include "galdesc/catalog.hpp"
#include "galdesc/descent.hpp"

using namespace galdesc;

namespace {

SplitExtension s3_as_semidirect() {
  FiniteGroup c3 = build_group("C3");
  FiniteGroup c2 = build_group("C2");
  GroupAction inversion(c2, c3, {{0, 1, 2}, {0, 2, 1}});
  return split_extension(c3, c2, inversion);
}

SplitExtension direct_with_kernel(const char* g_name, const char* q_name) {
  FiniteGroup g = build_group(g_name);
  FiniteGroup q = build_group(q_name);
  return split_extension(g, q, GroupAction::trivial(q, g));
}

Elem first_involution(const FiniteGroup& g) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) == 2) return x;
  return -1;
}

}  // namespace

TEST_CASE("descent through the canonical section of C3 by C2") {
  SplitExtension se = s3_as_semidirect();
  Section s(se.extension, se.canonical_section);
  DescentReport rep = minimal_descent(se.extension, s);

  // the centralizer of the rotations meets the section image trivially
  CHECK(rep.v.order() == 1);
  CHECK(rep.e_subgroup.order() == 1);
  CHECK(rep.galois_group_e.order() == 2);
  CHECK(rep.aut_kernel.group.order() == 2);  // Aut(C3)
  CHECK(rep.aut_embedding.is_injective());
  CHECK(rep.galois_over_e);
  CHECK(rep.minimal);
  // V is trivial, so GV is just the embedded rotation subgroup
  CHECK(rep.gv.order() == 3);
  CHECK(!is_model_galois(se.extension, s));
}

TEST_CASE("descent through the trivial graph of a direct product") {
  SplitExtension se = direct_with_kernel("S3", "C2");
  Section s(se.extension, se.canonical_section);
  DescentReport rep = minimal_descent(se.extension, s);

  // already Galois over the base: V is the whole section image
  CHECK(rep.v == s.image());
  CHECK(rep.e_subgroup == Subgroup::whole(se.extension.quotient_group()));
  CHECK(rep.galois_group_e.order() == 1);
  CHECK(is_model_galois(se.extension, s));
  CHECK(rep.galois_over_e);
  CHECK(rep.minimal);
}

TEST_CASE("descent through a transposition graph in S3 x C2") {
  SplitExtension se = direct_with_kernel("S3", "C2");
  FiniteGroup s3 = build_group("S3");
  Elem t = first_involution(s3);
  std::vector<Elem> images{se.extension.total_group().identity(),
                           pair_index(s3, t, 1)};
  Section s(se.extension,
            Homomorphism(se.extension.quotient_group(),
                         se.extension.total_group(), images));
  DescentReport rep = minimal_descent(se.extension, s);

  CHECK(rep.v.order() == 1);
  CHECK(rep.e_subgroup.order() == 1);
  CHECK(rep.galois_group_e.order() == 2);
  CHECK(rep.aut_embedding.is_injective());
  CHECK(!is_model_galois(se.extension, s));
  CHECK(rep.galois_over_e);
  CHECK(rep.minimal);
}

TEST_CASE("the centralizer route to V equals the normal core") {
  {
    SplitExtension se = s3_as_semidirect();
    Section s(se.extension, se.canonical_section);
    CHECK(verify_normal_core_identity(se.extension, s));
  }
  {
    SplitExtension se = direct_with_kernel("S3", "C2");
    Section s(se.extension, se.canonical_section);
    CHECK(verify_normal_core_identity(se.extension, s));
    CHECK(normal_core(se.extension.total_group(), s.image()) == s.image());
  }
  {
    SplitExtension se = direct_with_kernel("Q8", "V4");
    for (const auto& s : enumerate_sections(se.extension))
      CHECK(verify_normal_core_identity(se.extension, s));
  }
}

TEST_CASE("quotient decomposition over the canonical S3 section") {
  SplitExtension se = s3_as_semidirect();
  Section s(se.extension, se.canonical_section);
  QuotientDecomposition dec = decompose_quotient(se.extension, s);

  CHECK(dec.v.order() == 1);
  CHECK(dec.quotient.order() == 6);
  CHECK(dec.semidirect.order() == 6);
  CHECK(dec.kernel_is_v);
  CHECK(dec.bijective);
  CHECK(dec.factor_map.kernel().order() == 1);
}

TEST_CASE("quotient decomposition collapses a Galois direct product") {
  SplitExtension se = direct_with_kernel("S3", "C2");
  Section s(se.extension, se.canonical_section);
  QuotientDecomposition dec = decompose_quotient(se.extension, s);

  CHECK(dec.v.order() == 2);
  CHECK(dec.quotient.order() == 6);
  CHECK(dec.semidirect.order() == 6);
  CHECK(dec.factor_map.kernel() == dec.v);
}

TEST_CASE("quotient decomposition of the twisted graph in S3 x C2") {
  SplitExtension se = direct_with_kernel("S3", "C2");
  FiniteGroup s3 = build_group("S3");
  std::vector<Elem> images{se.extension.total_group().identity(),
                           pair_index(s3, first_involution(s3), 1)};
  Section s(se.extension,
            Homomorphism(se.extension.quotient_group(),
                         se.extension.total_group(), images));
  QuotientDecomposition dec = decompose_quotient(se.extension, s);

  CHECK(dec.v.order() == 1);
  CHECK(dec.quotient.order() == 12);
  CHECK(dec.semidirect.order() == 12);
  CHECK(dec.bijective);
}

TEST_CASE("nondescending sections exist for nonabelian kernels") {
  for (const char* name : {"S3", "D4", "Q8", "A4"}) {
    FiniteGroup g = build_group(name);
    SplitExtension se = split_extension(g, g, GroupAction::trivial(g, g));
    Section canonical(se.extension, se.canonical_section);
    REQUIRE(is_model_galois(se.extension, canonical));

    Section twisted = nondescending_model_construction(
        g, Homomorphism::identity(g), canonical);
    CHECK(!is_model_galois(se.extension, twisted));
    // the construction is the graph of the identity map
    for (Elem x = 0; x < g.order(); ++x)
      CHECK(twisted(x) == pair_index(g, x, x));
  }
}

TEST_CASE("nondescending construction with a projection surjection") {
  FiniteGroup s3 = build_group("S3");
  FiniteGroup q = build_group("S3xC2");
  auto se = split_extension(s3, q, GroupAction::trivial(q, s3));
  Section canonical(se.extension, se.canonical_section);

  // the projection S3 x C2 -> S3 on pair indices
  std::vector<Elem> eps_images(q.order());
  for (Elem i = 0; i < q.order(); ++i) eps_images[i] = i % 6;
  Homomorphism eps(q, s3, eps_images);
  REQUIRE(eps.is_surjective());

  Section twisted = nondescending_model_construction(s3, eps, canonical);
  CHECK(!is_model_galois(se.extension, twisted));
}

TEST_CASE("nondescending construction rejects abelian kernels") {
  FiniteGroup c4 = build_group("C4");
  auto se = split_extension(c4, c4, GroupAction::trivial(c4, c4));
  Section canonical(se.extension, se.canonical_section);
  CHECK_THROWS_AS(nondescending_model_construction(
                      c4, Homomorphism::identity(c4), canonical),
                  ValidationError);
}

TEST_CASE("nondescending construction rejects non-surjective maps") {
  FiniteGroup s3 = build_group("S3");
  auto se = split_extension(s3, s3, GroupAction::trivial(s3, s3));
  Section canonical(se.extension, se.canonical_section);
  CHECK_THROWS_AS(nondescending_model_construction(
                      s3, Homomorphism::trivial(s3, s3), canonical),
                  ValidationError);
}

TEST_CASE("descent reports are consistent across every section of a sweep "
          "of small extensions") {
  std::vector<SplitExtension> cases;
  cases.push_back(s3_as_semidirect());
  cases.push_back(direct_with_kernel("S3", "C2"));
  cases.push_back(direct_with_kernel("Q8", "C2"));
  cases.push_back(direct_with_kernel("D4", "V4"));
  {
    FiniteGroup d4 = build_group("D4");
    FiniteGroup c2 = build_group("C2");
    for (const auto& theta : enumerate_actions(c2, d4))
      cases.push_back(split_extension(d4, c2, theta));
  }
  for (const auto& se : cases)
    for (const auto& s : enumerate_sections(se.extension)) {
      DescentReport rep = minimal_descent(se.extension, s);
      CHECK(verify_normal_core_identity(se.extension, s));
      CHECK(rep.galois_over_e);
      CHECK(rep.minimal);
      CHECK(rep.aut_embedding.is_injective());
      CHECK(is_normal(se.extension.total_group(), rep.v));
      CHECK(is_normal(se.extension.quotient_group(), rep.e_subgroup));
      CHECK(rep.galois_group_e.order() * rep.v.order() ==
            se.extension.quotient_group().order());
      // Galois over the base exactly when E_subgroup is everything
      CHECK(is_model_galois(se.extension, s) ==
            (rep.e_subgroup.order() ==
             se.extension.quotient_group().order()));
      QuotientDecomposition dec = decompose_quotient(se.extension, s);
      CHECK(dec.kernel_is_v);
      CHECK(dec.bijective);
    }
}
