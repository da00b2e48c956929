#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace monideal;

namespace {

MonomialIdeal ideal(std::initializer_list<std::initializer_list<Exponent>> gens) {
  std::vector<ExponentVector> g;
  for (auto e : gens) g.emplace_back(e);
  return MonomialIdeal::minimalize(g);
}

const MonomialIdeal kJ1 = ideal({{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {0, 3, 0}, {0, 0, 3}});

}  // namespace

TEST(Transform, OfMaximalPower) {
  auto m2 = MonomialIdeal::maximal_power(3, 2);
  EXPECT_TRUE(transform_dir(m2, 0).is_unit());
  // (x^2, y) -> x-direction: (x, y)
  EXPECT_EQ(transform_dir(ideal({{2, 0}, {0, 1}}), 0), ideal({{1, 0}, {0, 1}}));
  EXPECT_THROW(transform_dir(ideal({{1, 0, 0}}), 0), Error);
  EXPECT_THROW(transform_dir(m2, 3), Error);
}

TEST(Transform, Delta) {
  EXPECT_EQ(delta(kJ1, 0), 3);
  EXPECT_EQ(delta(ideal({{1, 0, 0}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}}), 0), 2);
}

TEST(Cit, TwoByTwoTables) {
  auto expect = MonomialIdeal::minimalize([&] {
    auto g = ideal({{5, 0, 0}, {3, 1, 0}, {3, 0, 1}, {2, 2, 0}, {1, 1, 1}, {2, 0, 2}}).gens();
    auto m3 = MonomialIdeal::maximal_power(3, 3);
    for (const auto& v : m3.gens())
      if (v[0] == 0) g.push_back(v);
    return g;
  }());
  EXPECT_EQ(cit(kJ1, 0), expect);
  EXPECT_EQ(cit_by_membership(kJ1, 0), expect);
  CitOptions opt;
  opt.verify = true;
  EXPECT_EQ(cit(kJ1, 0, opt), expect);
  EXPECT_EQ(transform_dir(expect, 0), kJ1);
}

TEST(Cit, OtherDirections) {
  // conjugating by a variable swap carries the x-direction result along
  auto swapped = [](const MonomialIdeal& I) {
    std::vector<ExponentVector> g;
    for (const auto& a : I.gens()) g.push_back(ExponentVector{a[1], a[0], a[2]});
    return MonomialIdeal::minimalize(g);
  };
  EXPECT_EQ(cit(swapped(kJ1), 1), swapped(cit(kJ1, 0)));
}

TEST(Cit, RejectsIncompleteInput) {
  auto I = ideal({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}});
  try {
    cit(I, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotComplete);
  }
}

TEST(Expansion, Matrices) {
  DirectionSequence s{3, {0, 1, 1, 2}};
  auto E = expansion_matrix(s);
  EXPECT_EQ(E.rows, (std::vector<std::vector<Exponent>>{{1, 2, 3}, {1, 3, 4}, {1, 4, 6}}));
  auto product = E * inverse_expansion_matrix(s);
  EXPECT_EQ(product, ExpansionMatrix::identity(3));
  EXPECT_EQ(expansion_matrix({3, {}}), ExpansionMatrix::identity(3));
}

TEST(Expansion, OrdWeights) {
  DirectionSequence s{3, {0, 1, 1, 2}};
  std::vector<std::vector<Exponent>> rows;
  for (std::size_t i = 0; i <= 4; ++i) rows.push_back(ord_weights(s, i).weights);
  EXPECT_EQ(rows, (std::vector<std::vector<Exponent>>{{1, 1, 1}, {1, 2, 2}, {2, 3, 4}, {3, 4, 6}, {6, 8, 11}}));
  EXPECT_THROW(ord_weights(s, 5), Error);
}

TEST(Expansion, ChangeAndProximate) {
  EXPECT_TRUE(is_change_of_direction({3, {0, 1}}));
  EXPECT_FALSE(is_change_of_direction({3, {0, 0}}));
  EXPECT_TRUE(is_proximate({3, {0}}));
  EXPECT_FALSE(is_proximate({3, {0, 0}}));
  EXPECT_TRUE(is_proximate({3, {0, 1, 2}}));
  EXPECT_TRUE(is_proximate({3, {0, 1, 1}}));
  EXPECT_FALSE(is_proximate({3, {0, 1, 0}}));
  EXPECT_THROW(is_change_of_direction({3, {}}), Error);
}
