#include <gtest/gtest.h>

#include "properties.hpp"

namespace {

void expect_ok(const props::Outcome& o, int min_cases = 200) {
  EXPECT_GE(o.cases, min_cases);
  for (const auto& f : o.failures) ADD_FAILURE() << f;
}

}  // namespace

TEST(Properties, ClosureLaws) { expect_ok(props::closure_laws()); }
TEST(Properties, MembershipOracles) { expect_ok(props::membership()); }
TEST(Properties, FacetReconstruction) { expect_ok(props::facet_reconstruction()); }
TEST(Properties, CitLaws) { expect_ok(props::cit_laws()); }
TEST(Properties, StarCompatibility) { expect_ok(props::compat()); }
TEST(Properties, FiveWayEquivalence) { expect_ok(props::five_way()); }
TEST(Properties, FibonacciPointBases) { expect_ok(props::fibonacci()); }
TEST(Properties, ChainSupportedNonnegative) { expect_ok(props::chain_nonnegative()); }
TEST(Properties, IndexOrderTree) { expect_ok(props::index_order_laws()); }
TEST(Properties, PointBasisAdditivity) { expect_ok(props::point_basis_additivity()); }
TEST(Properties, OrderOneShape) { expect_ok(props::order_one()); }
TEST(Properties, SerializationRoundTrip) { expect_ok(props::serialization(), 1000); }
