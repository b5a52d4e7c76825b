#include "doctest.h"

#include "galdesc/catalog.hpp"
#include "galdesc/homsearch.hpp"

#include "oracles.hpp"

using namespace galdesc;

TEST_CASE("hom counts match the full map scan") {
  struct Pair {
    const char* q;
    const char* g;
  };
  // every pair stays inside the |G|^|Q| <= 2e6 scan bound
  for (Pair p : {Pair{"C2", "S3"}, Pair{"C3", "C3"}, Pair{"V4", "C4"},
                 Pair{"C4", "D4"}, Pair{"S3", "S3"}, Pair{"V4", "S4"},
                 Pair{"C6", "D4"}, Pair{"S3", "D4"}, Pair{"C2", "Q8"}}) {
    FiniteGroup q = build_group(p.q);
    FiniteGroup g = build_group(p.g);
    auto scan = oracle::all_homs_scan(q, g);
    auto homs = enumerate_homs(q, g);
    REQUIRE(homs.size() == scan.size());
    for (size_t i = 0; i < homs.size(); ++i)
      REQUIRE(homs[i].images() == scan[i]);
  }
}

TEST_CASE("Hom(C2, S3) consists of the trivial map and the transpositions") {
  auto homs = enumerate_homs(build_group("C2"), build_group("S3"));
  CHECK(homs.size() == 4);
  int trivial = 0, involutive = 0;
  for (const auto& h : homs) {
    if (h.image().order() == 1) ++trivial;
    if (h.image().order() == 2) ++involutive;
  }
  CHECK(trivial == 1);
  CHECK(involutive == 3);
}

TEST_CASE("maps into the trivial group are unique") {
  auto homs = enumerate_homs(build_group("S4"), build_group("C1"));
  CHECK(homs.size() == 1);
}

TEST_CASE("Hom(C2, C2) has both maps") {
  auto homs = enumerate_homs(build_group("C2"), build_group("C2"));
  CHECK(homs.size() == 2);
}

TEST_CASE("hom enumeration respects the budget") {
  SearchBudget tight;
  tight.max_candidates = 3;
  CHECK_THROWS_AS(enumerate_homs(build_group("C4"), build_group("D4"), tight),
                  BudgetError);
}

TEST_CASE("the four maps C2 -> S3 fall into two conjugacy classes") {
  auto homs = enumerate_homs(build_group("C2"), build_group("S3"));
  auto classes = conjugacy_partition_homs(homs);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].members.size() + classes[1].members.size() == 4);
  std::vector<size_t> sizes{classes[0].members.size(),
                            classes[1].members.size()};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 3});
}

TEST_CASE("a single trivial hom forms one class") {
  FiniteGroup q = build_group("C2"), g = build_group("S3");
  std::vector<Homomorphism> homs{Homomorphism::trivial(q, g)};
  CHECK(conjugacy_partition_homs(homs).size() == 1);
}

TEST_CASE("abelian codomains split into singleton classes") {
  auto homs = enumerate_homs(build_group("C2"), build_group("C2"));
  auto classes = conjugacy_partition_homs(homs);
  CHECK(classes.size() == 2);
  for (const auto& c : classes) CHECK(c.members.size() == 1);
}

TEST_CASE("class sizes equal the centralizer index of the image") {
  struct Pair {
    const char* q;
    const char* g;
  };
  for (Pair p : {Pair{"C2", "S3"}, Pair{"V4", "D4"}, Pair{"S3", "S4"},
                 Pair{"C4", "Q8"}}) {
    FiniteGroup q = build_group(p.q);
    FiniteGroup g = build_group(p.g);
    auto homs = enumerate_homs(q, g);
    auto classes = conjugacy_partition_homs(homs);
    size_t total = 0;
    for (const auto& c : classes) {
      long cent = centralizer(g, c.canonical.image().elements()).order();
      CHECK(static_cast<long>(c.members.size()) * cent == g.order());
      total += c.members.size();
    }
    CHECK(total == homs.size());
  }
}

TEST_CASE("automorphism groups of small groups") {
  CHECK(automorphism_group(build_group("C2")).group.order() == 1);
  CHECK(automorphism_group(build_group("S3")).group.order() ==
        oracle::aut_count_scan(build_group("S3")));
  CHECK(automorphism_group(build_group("S3")).group.order() == 6);
  CHECK(automorphism_group(build_group("V4")).group.order() ==
        oracle::aut_count_scan(build_group("V4")));
  CHECK(automorphism_group(build_group("V4")).group.order() == 6);
  CHECK(automorphism_group(build_group("C6")).group.order() == 2);
  CHECK(automorphism_group(build_group("Q8")).group.order() == 24);
  CHECK(automorphism_group(build_group("A4")).group.order() == 24);
}

TEST_CASE("automorphism realization composes like the abstract group") {
  auto aut = automorphism_group(build_group("S3"));
  const FiniteGroup& g = build_group("S3");
  for (Elem i = 0; i < aut.group.order(); ++i)
    for (Elem j = 0; j < aut.group.order(); ++j) {
      const auto& pi = aut.perms[static_cast<size_t>(i)];
      const auto& pj = aut.perms[static_cast<size_t>(j)];
      const auto& pij =
          aut.perms[static_cast<size_t>(aut.group.mul(i, j))];
      for (Elem x = 0; x < g.order(); ++x)
        REQUIRE(pij[static_cast<size_t>(x)] ==
                pi[static_cast<size_t>(pj[static_cast<size_t>(x)])]);
    }
}

TEST_CASE("the semidirect product C3 by C2 with inversion is S3") {
  FiniteGroup c3 = build_group("C3");
  FiniteGroup c2 = build_group("C2");
  GroupAction inversion(c2, c3, {{0, 1, 2}, {0, 2, 1}});
  auto sd = semidirect_product(c3, c2, inversion);
  CHECK(sd.total.order() == 6);
  CHECK(is_isomorphic(sd.total, build_group("S3")));
  CHECK(!sd.total.is_abelian());
}

TEST_CASE("trivial actions give direct products with central kernels only "
          "for abelian kernels") {
  FiniteGroup c2 = build_group("C2");
  {
    FiniteGroup c3 = build_group("C3");
    auto sd = semidirect_product(c3, c2, GroupAction::trivial(c2, c3));
    Subgroup z = center(sd.total);
    for (Elem x = 0; x < c3.order(); ++x) CHECK(z.contains(sd.iota(x)));
  }
  {
    FiniteGroup s3 = build_group("S3");
    auto sd = semidirect_product(s3, c2, GroupAction::trivial(c2, s3));
    Subgroup z = center(sd.total);
    bool all_central = true;
    for (Elem x = 0; x < s3.order(); ++x)
      if (!z.contains(sd.iota(x))) all_central = false;
    CHECK(!all_central);
  }
}

TEST_CASE("semidirect products have order |G| |Q| and exact structure maps") {
  for (const char* gn : {"C4", "S3", "Q8"})
    for (const char* qn : {"C2", "V4"}) {
      FiniteGroup g = build_group(gn);
      FiniteGroup q = build_group(qn);
      auto sd = semidirect_product(g, q, GroupAction::trivial(q, g));
      CHECK(sd.total.order() == g.order() * q.order());
      CHECK(sd.iota.is_injective());
      CHECK(sd.pi.is_surjective());
      CHECK(sd.pi.kernel() == sd.iota.image());
      for (Elem y = 0; y < q.order(); ++y)
        CHECK(sd.pi(sd.canonical_section(y)) == y);
    }
}

TEST_CASE("semidirect product rejects oversized totals") {
  SearchBudget tiny;
  tiny.max_total_order = 5;
  FiniteGroup s3 = build_group("S3");
  FiniteGroup c2 = build_group("C2");
  CHECK_THROWS_AS(semidirect_product(s3, c2, GroupAction::trivial(c2, s3), tiny),
                  BudgetError);
}

TEST_CASE("action enumeration finds every action of V4 on C3") {
  auto actions = enumerate_actions(build_group("V4"), build_group("C3"));
  // Aut(C3) = C2, and V4 has four maps onto it
  CHECK(actions.size() == 4);
  int trivial = 0;
  for (const auto& a : actions)
    if (a.is_trivial()) ++trivial;
  CHECK(trivial == 1);
}

TEST_CASE("isomorphism testing by brute force") {
  CHECK(is_isomorphic(build_group("C2xC3"), build_group("C6")));
  CHECK(!is_isomorphic(build_group("C6"), build_group("S3")));
  CHECK(!is_isomorphic(build_group("D4"), build_group("Q8")));
  CHECK(is_isomorphic(build_group("V4"), build_group("C2xC2")));
}
