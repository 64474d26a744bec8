#include <doctest.h>

#include "stonework/laws.hpp"
#include "stonework/monoid_catalog.hpp"

using namespace stonework;

namespace {

  void require_real(LawReport const& report) {
    CHECK(report.ok());
    for (auto const& law : report.laws) {
      INFO(law.name);
      CHECK(law.failures == 0);
      CHECK(law.instances > 0);
    }
  }

}  // namespace

TEST_CASE("order and filter laws on the corpus") {
  for (auto const& S :
       {symmetric_inverse_monoid(1), symmetric_inverse_monoid(2), symmetric_inverse_monoid(3),
        boolean_algebra(1), boolean_algebra(2), boolean_algebra(3), boolean_algebra(4),
        group_with_zero(2), group_with_zero(3), clifford_example()}) {
    INFO("size " << S.size());
    auto order = check_order_laws(S);
    CHECK(order.laws.size() == 10);
    require_real(order);
    auto filters = check_filter_laws(S);
    CHECK(filters.laws.size() == 14);
    require_real(filters);
  }
}

TEST_CASE("instance counts on I(3)") {
  auto S     = symmetric_inverse_monoid(3);
  auto order = check_order_laws(S);
  CHECK(order.find("order.matches-definition")->instances == 34 + 2);
  CHECK(order.find("order.below-iff-restriction")->instances == 34 * 34);
  CHECK(order.find("meet.distributes-over-products")->instances >= 34 * 34);
  auto filters = check_filter_laws(S);
  // one filter per element, all principal
  CHECK(filters.find("filter.is-coset")->instances == 34);
  CHECK(filters.find("ultrafilter.prime")->instances == 9);
}

TEST_CASE("non-boolean inputs fail the precondition") {
  for (auto const& S : {non_boolean_semilattice(), brandt_monoid()}) {
    auto order = check_order_laws(S);
    CHECK_FALSE(order.ok());
    REQUIRE(order.find("boolean-precondition") != nullptr);
    CHECK(order.find("boolean-precondition")->failures == 1);
    // the plain order laws still run
    CHECK(order.find("order.partial-order")->ok());

    auto filters = check_filter_laws(S);
    CHECK_FALSE(filters.ok());
    CHECK(filters.find("boolean-precondition") != nullptr);
  }
}

TEST_CASE("law results keep the first five witnesses") {
  LawReport report;
  auto&     law = report.add("demo");
  for (int i = 0; i < 8; ++i) {
    law.check(i % 2 == 0, [i] { return std::to_string(i); });
  }
  report.add("other").check(true, [] { return std::string(); });
  CHECK(law.instances == 8);
  CHECK(law.failures == 4);
  CHECK(law.witnesses == std::vector<std::string>{"1", "3", "5", "7"});
  CHECK(report.failures() == 4);
  CHECK(report.find("other")->ok());
  CHECK(report.find("missing") == nullptr);
}
