#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace monideal;

namespace {

MonomialIdeal ideal(std::initializer_list<std::initializer_list<Exponent>> gens) {
  std::vector<ExponentVector> g;
  for (auto e : gens) g.emplace_back(e);
  return MonomialIdeal::minimalize(g);
}

}  // namespace

TEST(SpecialP, Small) {
  EXPECT_EQ(special_p({3, {}}), MonomialIdeal::maximal_power(3, 1));
  EXPECT_EQ(special_p({3, {2}}), ideal({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
  EXPECT_EQ(special_p({3, {0, 0}}), ideal({{3, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(special_p({2, {0, 1}}), ideal({{3, 0}, {2, 1}, {0, 2}}));
}

TEST(BasePoints, Chain) {
  auto P = special_p({3, {0, 1, 1, 2}});
  auto t = base_point_tree(P);
  ASSERT_EQ(t.size(), 5u);
  EXPECT_TRUE(t.is_chain());
  EXPECT_EQ(t.nodes().back().path, (NodePath{0, 1, 1, 2}));
  EXPECT_EQ(t.root().order, 5);
  EXPECT_EQ(order_at(P, {0, 1}), 2);
  EXPECT_EQ(order_at(P, {1}), 0);
}

TEST(BasePoints, NotFinitelySupported) {
  // x R + (y, z)^2: transform in x keeps a non-primary ideal
  auto I = ideal({{1, 0, 0}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
  try {
    base_point_tree(I);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotFinitelySupported);
  }
}

TEST(BasePoints, DepthLimit) {
  auto P = special_p({2, {0, 0, 0, 0, 0}});
  EXPECT_NO_THROW(base_point_tree(P, 5));
  try {
    base_point_tree(P, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DepthExceeded);
  }
}

TEST(PointBasis, SpecialIdeals) {
  auto b = point_basis(special_p({3, {0, 1, 1, 2}}));
  std::vector<Exponent> orders;
  for (const auto& [p, o] : b) orders.push_back(o);
  EXPECT_EQ(orders, (std::vector<Exponent>{5, 2, 2, 1, 1}));
}

TEST(IndexOrder, Pairs) {
  EXPECT_EQ(index_order(MonomialIdeal::maximal_power(3, 1)), (IndexOrderPair{1, 1}));
  EXPECT_EQ(index_order(special_p({3, {0, 1, 1, 2}})), (IndexOrderPair{7, 5}));
  auto levels = index_order_tree(3);
  ASSERT_EQ(levels.size(), 4u);
  EXPECT_EQ(levels[3].size(), 4u);
  EXPECT_EQ(levels[3][0].pair, (IndexOrderPair{5, 3}));
  EXPECT_EQ(pair_tree_branch({3, {0, 1, 1, 2}}), (std::vector<bool>{true, false, true}));
  EXPECT_THROW(index_order_tree(0), Error);
}

TEST(Factor, SpecialIsItsOwnFactor) {
  auto P = special_p({3, {0, 1}});
  auto f = lipman_factor(P);
  ASSERT_EQ(f.nonzero().size(), 1u);
  EXPECT_EQ(f.at({0, 1}), 1);
  auto r = is_special_star_simple(P);
  EXPECT_TRUE(r.special);
  EXPECT_EQ(r.path, (NodePath{0, 1}));
  EXPECT_FALSE(is_special_star_simple(MonomialIdeal::maximal_power(3, 2)).special);
}

TEST(Factor, PowerOfMaximal) {
  auto f = lipman_factor(MonomialIdeal::maximal_power(4, 3));
  EXPECT_EQ(f.nonzero(), (std::vector<std::pair<NodePath, Exponent>>{{{}, 3}}));
}

TEST(Factor, NegativeExponentAtRoot) {
  auto I = ideal({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  auto f = lipman_factor(I);
  EXPECT_EQ(f.at({}), -1);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(f.at({j}), 1);
}
