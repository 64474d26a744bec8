#include <doctest.h>

#include <random>

#include "stonework/bisection_monoid.hpp"
#include "stonework/errors.hpp"
#include "stonework/groupoid.hpp"
#include "stonework/morphism.hpp"

using namespace stonework;

namespace {

  ElementSet arrows(FiniteGroupoid const& G, std::initializer_list<Arrow> members) {
    ElementSet A(G.size());
    for (auto g : members) {
      A.insert(g);
    }
    return A;
  }

  // pair groupoid on k points: arrow (i, j) has index (i-1) k + (j-1)
  Arrow pa(std::size_t k, std::size_t i, std::size_t j) {
    return static_cast<Arrow>((i - 1) * k + (j - 1));
  }

  std::vector<FiniteGroupoid> small_groupoids() {
    return {discrete_groupoid(1), discrete_groupoid(3), pair_groupoid(2), pair_groupoid(3),
            cyclic_group(2),      cyclic_group(3),
            disjoint_union(cyclic_group(2), cyclic_group(3)),
            disjoint_union(pair_groupoid(2), cyclic_group(2))};
  }

}  // namespace

TEST_CASE("pair groupoid structure") {
  auto G = pair_groupoid(2);
  CHECK(G.size() == 4);
  CHECK(G.identities().count() == 2);
  CHECK(G.label(pa(2, 1, 2)) == "(1,2)");
  CHECK(G.compose(pa(2, 1, 2), pa(2, 2, 1)) == pa(2, 1, 1));
  CHECK_FALSE(G.compose(pa(2, 1, 2), pa(2, 1, 2)).has_value());
  CHECK(G.inv(pa(2, 1, 2)) == pa(2, 2, 1));
}

TEST_CASE("constructor rejects non-groupoids") {
  auto t = pair_groupoid(2).table();
  SUBCASE("inverse mismatch") {
    t.inv[1] = 1;
    CHECK_THROWS_AS(FiniteGroupoid{t}, InvalidInput);
  }
  SUBCASE("missing composite") {
    t.compose[1 * 4 + 2] = -1;
    CHECK_THROWS_AS(FiniteGroupoid{t}, InvalidInput);
  }
  SUBCASE("composite where undefined") {
    t.compose[1 * 4 + 1] = 0;
    CHECK_THROWS_AS(FiniteGroupoid{t}, InvalidInput);
  }
  SUBCASE("short table") {
    t.compose.pop_back();
    CHECK_THROWS_AS(FiniteGroupoid{t}, InvalidInput);
  }
}

TEST_CASE("bisection tests agree") {
  for (auto const& G : small_groupoids()) {
    if (G.size() > 12) {
      continue;
    }
    std::size_t n = 0;
    for (std::uint32_t mask = 0; mask < (1u << G.size()); ++mask) {
      ElementSet A(G.size());
      for (Arrow g = 0; g < G.size(); ++g) {
        if (mask >> g & 1u) {
          A.insert(g);
        }
      }
      CHECK(is_bisection(G, A) == is_bisection_by_products(G, A));
      n += is_bisection(G, A);
    }
    CHECK(bisections_by_subsets(G).size() == n);
    CHECK(bisections_by_injections(G) == bisections_by_subsets(G));
  }
}

TEST_CASE("bisection products") {
  auto G = pair_groupoid(2);
  Bisection A(G, arrows(G, {pa(2, 1, 2)}));
  Bisection B(G, arrows(G, {pa(2, 2, 1)}));
  CHECK(bisection_product(A, B).members() == arrows(G, {pa(2, 1, 1)}));
  Bisection empty(G, ElementSet(G.size()));
  CHECK(bisection_product(A, empty).members().empty());
  Bisection units(G, G.identities());
  CHECK(bisection_product(A, units) == A);
  CHECK_THROWS_AS(Bisection(G, arrows(G, {pa(2, 1, 1), pa(2, 1, 2)})), InvalidInput);

  // random products of bisections stay bisections
  auto           H   = disjoint_union(pair_groupoid(3), cyclic_group(2));
  auto           all = bisections_by_injections(H);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int i = 0; i < 200; ++i) {
    auto P = set_product(H, all[pick(rng)], all[pick(rng)]);
    CHECK(is_bisection(H, P));
  }
}

TEST_CASE("bisection monoid sizes") {
  CHECK(BisectionMonoid(discrete_groupoid(1)).size() == 2);
  CHECK(BisectionMonoid(pair_groupoid(2)).size() == 7);
  CHECK(BisectionMonoid(pair_groupoid(3)).size() == 34);
  CHECK(BisectionMonoid(cyclic_group(2)).size() == 3);
  CHECK_THROWS_AS(BisectionMonoid(pair_groupoid(5)), BoundExceeded);
}

TEST_CASE("bisection monoids are boolean, ordered by inclusion") {
  for (auto const& G : small_groupoids()) {
    BisectionMonoid AG(G);
    auto const&     S = AG.monoid();
    CHECK(check_boolean(S).is_boolean);
    auto const& B = AG.bisections();
    for (Element a = 0; a < S.size(); ++a) {
      CHECK(B[S.inv(a)] == set_inverse(G, B[a]));
      for (Element b = 0; b < S.size(); ++b) {
        CHECK(S.leq(a, b) == B[a].is_subset_of(B[b]));
        CHECK(B[S.mul(a, b)] == set_product(G, B[a], B[b]));
        auto m = meet(S, a, b);
        REQUIRE(m.has_value());
        CHECK(B[*m] == (B[a] & B[b]));
        if (orthogonal(S, a, b)) {
          auto j = join(S, a, b);
          REQUIRE(j.has_value());
          CHECK(B[*j] == (B[a] | B[b]));
        }
      }
    }
  }
}

TEST_CASE("point ultrafilters") {
  auto            G = pair_groupoid(2);
  BisectionMonoid AG(G);
  auto const&     S = AG.monoid();
  for (Arrow g = 0; g < G.size(); ++g) {
    auto F = ultrafilter_of_point(AG, g);
    CHECK(F.is_ultra());
    CHECK(F.is_idempotent() == G.is_identity(g));
    for (Element a = 0; a < S.size(); ++a) {
      CHECK(F.contains(a) == AG.bisections()[a].contains(g));
    }
    for (Arrow h = 0; h < G.size(); ++h) {
      CHECK((ultrafilter_of_point(AG, h) == F) == (g == h));
      if (auto gh = G.compose(g, h)) {
        CHECK(filter_product(F, ultrafilter_of_point(AG, h)) == ultrafilter_of_point(AG, *gh));
      }
    }
    CHECK(filter_product(filter_inverse(F), F) == ultrafilter_of_point(AG, G.dom(g)));
  }
  // the bisections through (1,2): {(1,2)} and {(1,2),(2,1)}
  CHECK(ultrafilter_of_point(AG, pa(2, 1, 2)).members().count() == 2);
  // every ultrafilter of A(G) is a point ultrafilter
  auto U = enumerate_ultrafilters(S);
  CHECK(U.size() == G.size());
  for (auto const& F : U) {
    bool found = false;
    for (Arrow g = 0; g < G.size(); ++g) {
      found = found || ultrafilter_of_point(AG, g) == F;
    }
    CHECK(found);
  }
}

TEST_CASE("covering functors") {
  auto G = pair_groupoid(2);
  CoveringFunctor id{&G, &G, {0, 1, 2, 3}};
  CHECK(check_covering(id).ok);

  auto            T = discrete_groupoid(1);
  CoveringFunctor proj{&G, &T, {0, 0, 0, 0}};
  CHECK(check_functor(proj).ok);
  auto r = check_covering(proj);
  CHECK_FALSE(r.ok);
  CHECK(r.property == "star-injectivity");
  CHECK(r.witness == std::vector<Arrow>{pa(2, 1, 1), pa(2, 2, 1)});

  auto            Z2 = cyclic_group(2);
  CoveringFunctor zid{&Z2, &Z2, {0, 1}};
  CHECK(check_covering(zid).ok);
  CoveringFunctor zero{&Z2, &T, {0, 0}};
  CHECK(check_covering(zero).property == "star-injectivity");

  CoveringFunctor not_functor{&Z2, &Z2, {1, 0}};
  CHECK(check_functor(not_functor).property == "functor");
}

TEST_CASE("pulling back bisections") {
  // functors must point at the groupoids held by the bisection monoids
  BisectionMonoid AG(pair_groupoid(2));
  BisectionMonoid AH(disjoint_union(pair_groupoid(2), discrete_groupoid(1)));
  auto const&     G = AG.groupoid();
  // inclusion of the first orbit
  CoveringFunctor inc{&G, &AH.groupoid(), {0, 1, 2, 3}};
  REQUIRE(check_covering(inc).ok);
  auto theta = pullback_bisections(inc, AG, AH);
  CHECK(validate_morphism(theta).ok);
  CHECK(theta(AH.monoid().zero()) == AG.monoid().zero());
  CHECK(theta(AH.monoid().one()) == AG.monoid().one());

  CoveringFunctor id{&G, &G, {0, 1, 2, 3}};
  auto            same = pullback_bisections(id, AG, AG);
  for (Element a = 0; a < AG.size(); ++a) {
    CHECK(same(a) == a);
  }

  BisectionMonoid AT(discrete_groupoid(1));
  CoveringFunctor proj{&G, &AT.groupoid(), {0, 0, 0, 0}};
  CHECK_THROWS_AS(pullback_bisections(proj, AG, AT), PreconditionError);
  CHECK_THROWS_AS(pullback_bisections(inc, AG, AG), PreconditionError);
}

TEST_CASE("functor composition") {
  auto G = pair_groupoid(2);
  auto H = disjoint_union(pair_groupoid(2), discrete_groupoid(1));
  CoveringFunctor inc{&G, &H, {0, 1, 2, 3}};
  CoveringFunctor swap{&G, &G, {3, 2, 1, 0}};
  auto            c = compose_functors(swap, inc);  // inc after swap
  CHECK(c.source == &G);
  CHECK(c.target == &H);
  CHECK(c.arrow_map == std::vector<Arrow>{3, 2, 1, 0});
  CHECK(check_covering(c).ok);
  CHECK_THROWS_AS(compose_functors(inc, swap), PreconditionError);
}

TEST_CASE("dot output") {
  auto dot = to_dot(pair_groupoid(2), "pair2");
  CHECK(dot.rfind("digraph \"pair2\" {", 0) == 0);
  CHECK(dot.find("[label=\"(1,2)\"]") != std::string::npos);
}
