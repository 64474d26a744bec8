#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "stonework/errors.hpp"
#include "stonework/monoid_catalog.hpp"
#include "stonework/serialization.hpp"

using namespace stonework;

namespace {

  std::filesystem::path scratch_dir(std::string const& name) {
    auto dir = std::filesystem::temp_directory_path() / ("stonework-test-" + name);
    std::filesystem::remove_all(dir);
    return dir;
  }

}  // namespace

TEST_CASE("monoid JSON round trip is lossless") {
  for (auto const& S : {symmetric_inverse_monoid(3), clifford_example(), boolean_algebra(2),
                        non_boolean_semilattice()}) {
    auto j    = to_json(S);
    auto back = monoid_from_json(Json::parse(j.dump()));
    CHECK(back == S);
    CHECK(back.labels() == S.labels());
  }
  auto j = to_json(symmetric_inverse_monoid(2));
  CHECK(j.at("n") == 7);
  CHECK(j.at("mul").size() == 7);
  CHECK(j.at("mul")[0].size() == 7);
}

TEST_CASE("malformed monoid JSON") {
  auto j = to_json(symmetric_inverse_monoid(2));
  SUBCASE("missing key") {
    j.erase("inv");
    CHECK_THROWS_AS(monoid_from_json(j), InvalidInput);
  }
  SUBCASE("wrong type") {
    j["n"] = "seven";
    CHECK_THROWS_AS(monoid_from_json(j), InvalidInput);
  }
  SUBCASE("short row") {
    j["mul"][2].erase(0);
    CHECK_THROWS_AS(monoid_from_json(j), InvalidInput);
  }
  SUBCASE("broken table") {
    j["mul"][3][4] = 0;
    CHECK_THROWS_AS(monoid_from_json(j), InvalidInput);
  }
  SUBCASE("bad labels") {
    j["labels"] = {"x"};
    CHECK_THROWS_AS(monoid_from_json(j), InvalidInput);
  }
}

TEST_CASE("groupoid JSON round trip is lossless") {
  for (auto const& G : {pair_groupoid(3), disjoint_union(cyclic_group(2), cyclic_group(3))}) {
    auto back = groupoid_from_json(Json::parse(to_json(G).dump()));
    auto a = G.table(), b = back.table();
    CHECK(a.dom == b.dom);
    CHECK(a.ran == b.ran);
    CHECK(a.inv == b.inv);
    CHECK(a.compose == b.compose);
    CHECK(a.labels == b.labels);
  }
  auto j = to_json(pair_groupoid(2));
  j["identities"] = {0, 1};
  CHECK_THROWS_AS(groupoid_from_json(j), InvalidInput);
}

TEST_CASE("ultrafilter groupoid export") {
  auto const          S = symmetric_inverse_monoid(2);
  UltrafilterGroupoid GS(S);
  auto                j = to_json(GS);
  CHECK(j.at("ultrafilters").size() == 4);
  CHECK(j.at("d").size() == 4);
  CHECK(j.at("r").size() == 4);
  // 2 points: every arrow composes with the 2 arrows ending at its domain
  CHECK(j.at("compose").size() == 8);
  for (auto const& t : j.at("compose")) {
    auto c = GS.groupoid().compose(t[0].get<Arrow>(), t[1].get<Arrow>());
    REQUIRE(c.has_value());
    CHECK(*c == t[2].get<Arrow>());
  }
}

TEST_CASE("morphisms, functors and C_n elements") {
  auto S = boolean_algebra(2);
  auto T = boolean_algebra(1);
  MonoidMorphism theta{&S, &T, {0, 1, 0, 1}};
  auto           m = morphism_from_json(Json::parse(to_json(theta).dump()));
  CHECK(*m.source == S);
  CHECK(*m.target == T);
  CHECK(m.morphism.map == theta.map);
  CHECK(m.morphism.source == m.source.get());

  auto            G = pair_groupoid(2);
  auto            H = discrete_groupoid(1);
  CoveringFunctor f{&G, &H, {0, 0, 0, 0}};
  auto            fj = functor_from_json(to_json(f));
  CHECK(fj.functor.arrow_map == f.arrow_map);
  CHECK(fj.functor.target == fj.target.get());

  auto j = to_json(theta);
  j["map"] = {0, 1, 5, 1};
  CHECK_THROWS_AS(morphism_from_json(j), InvalidInput);

  auto A = poly::parse_cn("{a1/a1a1, a2a1/a1a2, a2a2/a2}", 2);
  CHECK(cn_from_json(to_json(A)) == A);
  CHECK_THROWS_AS(cn_from_json(Json{{"n", 2}, {"expr", "{a1/a3}"}}), InvalidInput);
}

TEST_CASE("reports serialize") {
  auto S    = non_boolean_semilattice();
  auto cert = to_json(check_boolean(S), S);
  CHECK(cert.at("boolean") == false);
  CHECK(cert.at("witness").at("axiom") == "BM1");
  CHECK(cert.at("witness").at("elements") == Json{"g"});

  LawReport report;
  report.add("law").check(false, [] { return std::string("why"); });
  auto lj = to_json(report);
  CHECK(lj[0].at("failures") == 1);
  CHECK(lj[0].at("witnesses") == Json{"why"});
}

TEST_CASE("corpus store") {
  auto        dir = scratch_dir("store");
  CorpusStore store(dir);
  CHECK(store.names().empty());
  store.save({"ix2", "monoid", to_json(symmetric_inverse_monoid(2))});
  store.save({"pair2", "groupoid", to_json(pair_groupoid(2))});
  CHECK(store.contains("ix2"));
  CHECK(store.names() == std::vector<std::string>{"ix2", "pair2"});
  auto e = store.load("ix2");
  CHECK(e.kind == "monoid");
  CHECK(monoid_from_json(e.payload) == symmetric_inverse_monoid(2));

  CHECK_THROWS_AS(store.load("missing"), InvalidInput);
  CHECK_THROWS_AS(store.path_of("../escape"), InvalidInput);
  CHECK_THROWS_AS(store.path_of(".hidden"), InvalidInput);
  CHECK_THROWS_AS(store.save({"odd", "nonsense", Json::object()}), InvalidInput);

  {
    std::ofstream bad(dir / "broken.json");
    bad << "{ not json";
  }
  CHECK_THROWS_AS(store.load("broken"), InvalidInput);
  {
    std::ofstream renamed(dir / "other.json");
    renamed << to_json(CorpusEntry{"ix2", "monoid", to_json(symmetric_inverse_monoid(2))});
  }
  CHECK_THROWS_AS(store.load("other"), InvalidInput);
  std::filesystem::remove_all(dir);
}
