#include "doctest.h"

#include "galdesc/catalog.hpp"
#include "galdesc/group.hpp"
#include "galdesc/hom.hpp"

#include "oracles.hpp"

using namespace galdesc;

namespace {

Subgroup rotation_subgroup(const FiniteGroup& s3) {
  // the three even permutations form the unique subgroup of order 3
  std::vector<Elem> elems;
  for (Elem x = 0; x < s3.order(); ++x)
    if (s3.element_order(x) != 2) elems.push_back(x);
  return Subgroup::from_elements(s3, elems);
}

}  // namespace

TEST_CASE("centralizer of the order-3 subgroup of S3 is itself") {
  FiniteGroup s3 = build_group("S3");
  Subgroup a3 = rotation_subgroup(s3);
  Subgroup c = centralizer(s3, a3);
  CHECK(c.elements() == oracle::commuting_with(s3, a3.elements()));
  CHECK(c == a3);
}

TEST_CASE("centralizer of the identity is everything") {
  for (const char* name : {"S3", "D4", "Q8"}) {
    FiniteGroup g = build_group(name);
    CHECK(centralizer(g, std::vector<Elem>{g.identity()}).order() ==
          g.order());
  }
}

TEST_CASE("centralizer of S3 in S3 is the trivial center") {
  FiniteGroup s3 = build_group("S3");
  CHECK(centralizer(s3, Subgroup::whole(s3)).order() == 1);
}

TEST_CASE("centralizer of a normal subgroup is normal") {
  for (const char* name : {"S3", "D4", "Q8", "A4"}) {
    FiniteGroup g = build_group(name);
    for (const auto& j : all_subgroups(g)) {
      if (!is_normal(g, j)) continue;
      CHECK(is_normal(g, centralizer(g, j)));
    }
  }
}

TEST_CASE("centralizer rejects out-of-range elements") {
  FiniteGroup s3 = build_group("S3");
  CHECK_THROWS_AS(centralizer(s3, std::vector<Elem>{17}), ValidationError);
}

TEST_CASE("normal core of a transposition subgroup of S3 is trivial") {
  FiniteGroup s3 = build_group("S3");
  Elem t = -1;
  for (Elem x = 0; x < 6; ++x)
    if (s3.element_order(x) == 2) {
      t = x;
      break;
    }
  Subgroup h = Subgroup::generated(s3, {t});

  // oracle: intersect the conjugates directly
  std::vector<Elem> expected;
  for (Elem x = 0; x < 6; ++x) {
    bool in_all = true;
    for (Elem g = 0; g < 6; ++g)
      if (!h.contains(s3.conjugate(g, x))) {
        in_all = false;
        break;
      }
    if (in_all) expected.push_back(x);
  }
  Subgroup core = normal_core(s3, h);
  CHECK(core.elements() == expected);
  CHECK(core.order() == 1);
}

TEST_CASE("normal core fixes normal subgroups and the whole group") {
  FiniteGroup s3 = build_group("S3");
  Subgroup a3 = rotation_subgroup(s3);
  CHECK(normal_core(s3, a3) == a3);
  CHECK(normal_core(s3, Subgroup::whole(s3)) == Subgroup::whole(s3));
}

TEST_CASE("normal core is the largest normal subgroup inside H") {
  for (const char* name : {"S3", "D4", "Q8", "A4", "S4"}) {
    FiniteGroup g = build_group(name);
    auto subgroups = all_subgroups(g);
    for (const auto& h : subgroups) {
      Subgroup core = normal_core(g, h);
      REQUIRE(is_normal(g, core));
      REQUIRE(h.contains_all(core));
      for (const auto& s : subgroups) {
        if (!h.contains_all(s) || !is_normal(g, s)) continue;
        REQUIRE(core.contains_all(s));
      }
    }
  }
}

TEST_CASE("quotient of S3 by its rotation subgroup has order 2") {
  FiniteGroup s3 = build_group("S3");
  auto quo = quotient_group(s3, rotation_subgroup(s3));
  CHECK(quo.group.order() == 2);
  CHECK(quo.projection.is_surjective());
  CHECK(quo.projection.kernel() == rotation_subgroup(s3));
}

TEST_CASE("quotient by the trivial subgroup reproduces the group") {
  FiniteGroup d4 = build_group("D4");
  auto quo = quotient_group(d4, Subgroup::trivial(d4));
  CHECK(quo.group.order() == 8);
  CHECK(quo.projection.is_injective());
}

TEST_CASE("quotient by the whole group is trivial") {
  FiniteGroup d4 = build_group("D4");
  auto quo = quotient_group(d4, Subgroup::whole(d4));
  CHECK(quo.group.order() == 1);
}

TEST_CASE("quotient kernels recover the normal subgroup exactly") {
  for (const char* name : {"D4", "Q8", "A4", "C6"}) {
    FiniteGroup g = build_group(name);
    for (const auto& n : all_subgroups(g)) {
      if (!is_normal(g, n)) continue;
      auto quo = quotient_group(g, n);
      CHECK(quo.projection.kernel() == n);
      CHECK(quo.group.order() * n.order() == g.order());
    }
  }
}

TEST_CASE("quotient by a non-normal subgroup is reported") {
  FiniteGroup s3 = build_group("S3");
  Elem t = -1;
  for (Elem x = 0; x < 6; ++x)
    if (s3.element_order(x) == 2) t = x;
  CHECK_THROWS_AS(quotient_group(s3, Subgroup::generated(s3, {t})),
                  ValidationError);
}

TEST_CASE("subgroup validation catches non-closed sets") {
  FiniteGroup s3 = build_group("S3");
  Elem t = -1, r = -1;
  for (Elem x = 0; x < 6; ++x) {
    if (s3.element_order(x) == 2 && t < 0) t = x;
    if (s3.element_order(x) == 3 && r < 0) r = x;
  }
  CHECK_THROWS_AS(Subgroup::from_elements(s3, {0, t, r}), ValidationError);
  CHECK_THROWS_AS(Subgroup::from_elements(s3, {t}), ValidationError);
  CHECK(Subgroup::generated(s3, {t, r}).order() == 6);
}

TEST_CASE("subgroup lattices have the known sizes") {
  CHECK(all_subgroups(build_group("S3")).size() == 6);
  CHECK(all_subgroups(build_group("V4")).size() == 5);
  CHECK(all_subgroups(build_group("Q8")).size() == 6);
  CHECK(all_subgroups(build_group("D4")).size() == 10);
  CHECK(all_subgroups(build_group("A4")).size() == 10);
  CHECK(all_subgroups(build_group("S4")).size() == 30);
}

TEST_CASE("subgroup as group keeps the multiplication") {
  FiniteGroup s3 = build_group("S3");
  Subgroup a3 = rotation_subgroup(s3);
  EmbeddedGroup sub = subgroup_as_group(a3, "A3");
  CHECK(sub.group.order() == 3);
  for (Elem x = 0; x < 3; ++x)
    for (Elem y = 0; y < 3; ++y)
      CHECK(sub.embedding(sub.group.mul(x, y)) ==
            s3.mul(sub.embedding(x), sub.embedding(y)));
}
