#include "doctest.h"

#include "galdesc/catalog.hpp"
#include "galdesc/cohomology.hpp"
#include "galdesc/homsearch.hpp"
#include "galdesc/extension.hpp"
#include "galdesc/twist.hpp"

using namespace galdesc;

namespace {

GroupAction inversion_on_c3(const FiniteGroup& c2, const FiniteGroup& c3) {
  return GroupAction(c2, c3, {{0, 1, 2}, {0, 2, 1}});
}

}  // namespace

TEST_CASE("cocycles for the trivial action are homomorphisms") {
  FiniteGroup c2 = build_group("C2");
  FiniteGroup s3 = build_group("S3");
  auto cocycles =
      enumerate_one_cocycles(c2, s3, GroupAction::trivial(c2, s3));
  CHECK(cocycles.size() == 4);
  auto classes = h1_classes(c2, s3, GroupAction::trivial(c2, s3));
  CHECK(classes.size() == 2);
}

TEST_CASE("trivial coefficients leave one class") {
  FiniteGroup q = build_group("S3");
  FiniteGroup c1 = build_group("C1");
  auto classes = h1_classes(q, c1, GroupAction::trivial(q, c1));
  CHECK(classes.size() == 1);
}

TEST_CASE("the inversion action on C3 has three cohomologous cocycles") {
  FiniteGroup c2 = build_group("C2");
  FiniteGroup c3 = build_group("C3");
  GroupAction theta = inversion_on_c3(c2, c3);
  auto cocycles = enumerate_one_cocycles(c2, c3, theta);
  CHECK(cocycles.size() == 3);
  auto classes = h1_classes(c2, c3, theta);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].members.size() == 3);
}

TEST_CASE("every enumerated cocycle satisfies the cocycle identity") {
  FiniteGroup v4 = build_group("V4");
  FiniteGroup d4 = build_group("D4");
  GroupAction theta = GroupAction::trivial(v4, d4);
  for (const auto& z : enumerate_one_cocycles(v4, d4, theta))
    for (Elem a = 0; a < v4.order(); ++a)
      for (Elem b = 0; b < v4.order(); ++b)
        REQUIRE(z.values[static_cast<size_t>(v4.mul(a, b))] ==
                d4.mul(z.values[static_cast<size_t>(a)],
                       theta.apply(a, z.values[static_cast<size_t>(b)])));
}

TEST_CASE("cocycle counts equal section counts of the matching semidirect "
          "product") {
  struct Triple {
    const char* g;
    const char* q;
  };
  for (Triple t : {Triple{"C3", "C2"}, Triple{"S3", "C2"}, Triple{"V4", "C3"},
                   Triple{"Q8", "C2"}, Triple{"D4", "V4"}}) {
    FiniteGroup g = build_group(t.g);
    FiniteGroup q = build_group(t.q);
    for (const auto& theta : enumerate_actions(q, g)) {
      auto cocycles = enumerate_one_cocycles(q, g, theta);
      auto sections =
          enumerate_sections(split_extension(g, q, theta).extension);
      REQUIRE(cocycles.size() == sections.size());
    }
  }
}

TEST_CASE("class sizes in first cohomology partition the cocycles") {
  FiniteGroup v4 = build_group("V4");
  FiniteGroup s3 = build_group("S3");
  GroupAction theta = GroupAction::trivial(v4, s3);
  auto cocycles = enumerate_one_cocycles(v4, s3, theta);
  auto classes = h1_classes(v4, s3, theta);
  size_t total = 0;
  for (const auto& c : classes) total += c.members.size();
  CHECK(total == cocycles.size());
}

TEST_CASE("first cohomology classes match model classes for trivial actions") {
  struct Pair {
    const char* g;
    const char* q;
  };
  for (Pair p : {Pair{"S3", "C2"}, Pair{"D4", "C2"}, Pair{"Q8", "V4"},
                 Pair{"A4", "C3"}}) {
    FiniteGroup g = build_group(p.g);
    FiniteGroup q = build_group(p.q);
    auto classes = h1_classes(q, g, GroupAction::trivial(q, g));
    auto models = classify_models(g, q);
    CHECK(classes.size() == models.size());
  }
}

TEST_CASE("abelian groups decompose into cyclic factors") {
  SUBCASE("cyclic stays cyclic") {
    AbelianBasis basis = abelian_basis(build_group("C6"));
    CHECK(basis.orders == std::vector<int>{6});
  }
  SUBCASE("V4 splits into two factors of order 2") {
    AbelianBasis basis = abelian_basis(build_group("V4"));
    CHECK(basis.orders == std::vector<int>{2, 2});
  }
  SUBCASE("C2 x C4 keeps the invariant factors") {
    AbelianBasis basis = abelian_basis(build_group("C2xC4"));
    CHECK(basis.orders == std::vector<int>{4, 2});
  }
  SUBCASE("coordinates determine elements uniquely") {
    FiniteGroup a = build_group("C2xC2xC3");
    AbelianBasis basis = abelian_basis(a);
    for (Elem x = 0; x < a.order(); ++x)
      CHECK(basis.element_of(basis.coords[static_cast<size_t>(x)]) == x);
  }
  SUBCASE("nonabelian input is rejected") {
    CHECK_THROWS_AS(abelian_basis(build_group("S3")), ValidationError);
  }
}

TEST_CASE("second cohomology of (C2, C2) has order 2") {
  FiniteGroup c2 = build_group("C2");
  GroupAction trivial = GroupAction::trivial(c2, c2);
  TwoCohomologyGroup h2 = h2_abelian(c2, c2, trivial);
  CHECK(h2.order == 2);
  CHECK(h2.invariant_factors == std::vector<long long>{2});
  CHECK(h2.representatives.size() == 1);
  CHECK(h2_order_bruteforce(c2, c2, trivial) == 2);
}

TEST_CASE("second cohomology of (C3, C2) is trivial") {
  FiniteGroup c3 = build_group("C3");
  FiniteGroup c2 = build_group("C2");
  GroupAction trivial = GroupAction::trivial(c3, c2);
  TwoCohomologyGroup h2 = h2_abelian(c3, c2, trivial);
  CHECK(h2.order == 1);
  CHECK(h2.invariant_factors.empty());
  CHECK(h2_order_bruteforce(c3, c2, trivial) == 1);
}

TEST_CASE("second cohomology agrees with the exhaustive oracle on tiny data") {
  struct Case {
    const char* q;
    const char* a;
  };
  for (Case c : {Case{"C2", "C2"}, Case{"C2", "C3"}, Case{"C2", "C4"},
                 Case{"C3", "C2"}, Case{"C3", "C3"}, Case{"C2", "V4"},
                 Case{"V4", "C2"}}) {
    FiniteGroup q = build_group(c.q);
    FiniteGroup a = build_group(c.a);
    GroupAction trivial = GroupAction::trivial(q, a);
    TwoCohomologyGroup h2 = h2_abelian(q, a, trivial);
    CHECK(h2.order == h2_order_bruteforce(q, a, trivial));
  }
}

TEST_CASE("second cohomology with a trivial quotient group is trivial") {
  FiniteGroup c1 = build_group("C1");
  FiniteGroup v4 = build_group("V4");
  TwoCohomologyGroup h2 =
      h2_abelian(c1, v4, GroupAction::trivial(c1, v4));
  CHECK(h2.order == 1);
}

TEST_CASE("second cohomology with a nontrivial action") {
  // C2 acting on C3 by inversion kills the cohomology
  FiniteGroup c2 = build_group("C2");
  FiniteGroup c3 = build_group("C3");
  GroupAction theta = inversion_on_c3(c2, c3);
  TwoCohomologyGroup h2 = h2_abelian(c2, c3, theta);
  CHECK(h2.order == h2_order_bruteforce(c2, c3, theta));
  CHECK(h2.order == 1);
}

TEST_CASE("second cohomology with an action mixing the cyclic factors") {
  // C2 swapping the two factors of the Klein group
  FiniteGroup c2 = build_group("C2");
  FiniteGroup v4 = build_group("V4");
  GroupAction swap(c2, v4, {{0, 1, 2, 3}, {0, 2, 1, 3}});
  TwoCohomologyGroup h2 = h2_abelian(c2, v4, swap);
  CHECK(h2.order == h2_order_bruteforce(c2, v4, swap));
  CHECK(h2.order == 1);
}

TEST_CASE("h2 rejects nonabelian coefficients") {
  FiniteGroup c2 = build_group("C2");
  FiniteGroup s3 = build_group("S3");
  CHECK_THROWS_AS(h2_abelian(c2, s3, GroupAction::trivial(c2, s3)),
                  ValidationError);
}

TEST_CASE("obstruction reports") {
  FiniteGroup c2 = build_group("C2");
  SUBCASE("centerless groups have no obstruction group") {
    ObstructionReport rep = obstruction_report(build_group("S3"), c2);
    CHECK(rep.centerless);
    CHECK(!rep.h2.has_value());
  }
  SUBCASE("C2 over C2 gives the order-2 group") {
    ObstructionReport rep = obstruction_report(c2, c2);
    CHECK(!rep.centerless);
    REQUIRE(rep.h2.has_value());
    CHECK(rep.h2->order == 2);
  }
  SUBCASE("Q8 has central order 2, so the same obstruction group") {
    ObstructionReport rep = obstruction_report(build_group("Q8"), c2);
    CHECK(!rep.centerless);
    CHECK(rep.center_subgroup.order() == 2);
    REQUIRE(rep.h2.has_value());
    CHECK(rep.h2->order == 2);
  }
}
