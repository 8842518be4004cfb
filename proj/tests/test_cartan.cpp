#include <gtest/gtest.h>

#include "qbruhat/cartan.hpp"
#include "qbruhat/weyl.hpp"

namespace qbruhat {
namespace {

TEST(Cartan, PositiveRootCounts) {
  const std::vector<std::pair<std::string, std::size_t>> table = {
      {"A1", 1}, {"A2", 3},  {"A3", 6},  {"B2", 4},  {"B3", 9},   {"C3", 9},  {"D4", 12},
      {"G2", 6}, {"F4", 24}, {"E6", 36}, {"E7", 63}, {"E8", 120}, {"A1xA1", 2}};
  for (const auto& [label, n] : table) EXPECT_EQ(build_cartan(label).positive_roots().size(), n) << label;
}

TEST(Cartan, A2Roots) {
  auto d = build_cartan("A2");
  EXPECT_EQ(d.rank(), 2);
  std::vector<std::vector<int>> expect = {{0, 1}, {1, 0}, {1, 1}};
  auto roots = d.positive_roots();
  std::sort(roots.begin(), roots.end());
  EXPECT_EQ(roots, expect);
}

TEST(Cartan, RejectsUnknownLabels) {
  EXPECT_THROW(build_cartan("Q3"), std::invalid_argument);
  EXPECT_THROW(build_cartan("E5"), std::invalid_argument);
  EXPECT_THROW(build_cartan("B1"), std::invalid_argument);
  EXPECT_THROW(build_cartan(""), std::invalid_argument);
}

TEST(Cartan, InnerProductExamples) {
  auto d = build_cartan("A2");
  const Weight a = d.simple_root(0), b = d.simple_root(1);
  EXPECT_EQ(d.inner(d.fundamental(0), a), 1);
  EXPECT_EQ(d.inner(a, b), -1);
  EXPECT_EQ(d.inner(a, Weight::zero(2)), 0);
  EXPECT_EQ(d.inner(d.fundamental(0), d.fundamental(0)), Rational(2, 3));
}

TEST(Cartan, FormIdentities) {
  for (const char* label : {"A2", "B2", "C3", "G2", "F4", "D4", "B3"}) {
    auto d = build_cartan(label);
    const int n = d.rank();
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(d.inner(d.simple_root(i), d.simple_root(i)), 2 * d.d(i));
      for (int j = 0; j < n; ++j) {
        EXPECT_EQ(d.inner(d.simple_root(i), d.simple_root(j)), d.d(i) * d.a(i, j));
        EXPECT_EQ(d.inner(d.fundamental(i), d.simple_root(j)), i == j ? d.d(j) : 0);
      }
    }
    // short roots have (alpha, alpha) = 2
    EXPECT_EQ(*std::min_element(d.symmetrizers().begin(), d.symmetrizers().end()), 1) << label;
  }
}

TEST(Cartan, RootCoordinatesRoundTrip) {
  auto d = build_cartan("B2");
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y) {
      Weight mu{x, y};
      auto n = d.root_coords(mu);
      Weight back = Weight::zero(2);
      for (int i = 0; i < 2; ++i) {
        Rational s = 0;
        for (int j = 0; j < 2; ++j) s += Rational(d.a(i, j)) * n[j];
        back[i] = CartanDatum::to_int(s);
      }
      EXPECT_EQ(back, mu);
    }
  EXPECT_EQ(d.from_root_coords({1, 1}), d.simple_root(0) + d.simple_root(1));
}

TEST(Cartan, DominanceExamples) {
  auto d = build_cartan("A2");
  WeylGroup W(d);
  const Weight wa = d.fundamental(0), wb = d.fundamental(1);
  EXPECT_TRUE(d.dominance_leq(wa, wa));
  EXPECT_EQ(W.act(W.longest(), wa), -wb);
  EXPECT_TRUE(d.dominance_leq(-wb, wa));
  EXPECT_FALSE(d.dominance_leq(wa, wb));
  EXPECT_FALSE(d.dominance_leq(wb, wa));
}

TEST(Cartan, FormIsWeylInvariant) {
  for (const char* label : {"A2", "B2", "G2", "A3"}) {
    auto d = build_cartan(label);
    const int n = d.rank();
    std::vector<Weight> sample;
    for (int k = 0; k < 12; ++k) {
      Weight w = Weight::zero(n);
      for (int i = 0; i < n; ++i) w[i] = (k * (i + 3) + 2 * i) % 5 - 2;
      sample.push_back(w);
    }
    for (int i = 0; i < n; ++i)
      for (const auto& mu : sample)
        for (const auto& nu : sample) EXPECT_EQ(d.inner(d.reflect(i, mu), d.reflect(i, nu)), d.inner(mu, nu));
  }
}

TEST(Cartan, RootSystemClosedUnderReflections) {
  for (const char* label : {"A3", "B3", "C3", "G2", "F4", "D4"}) {
    auto d = build_cartan(label);
    std::set<Weight> roots;
    for (const auto& r : d.positive_roots()) {
      roots.insert(d.from_root_coords(r));
      roots.insert(-d.from_root_coords(r));
    }
    for (int i = 0; i < d.rank(); ++i)
      for (const auto& r : roots) EXPECT_TRUE(roots.count(d.reflect(i, r))) << label;
  }
}

TEST(Cartan, ParseWeight) {
  EXPECT_EQ(parse_weight("1,0", 2), (Weight{1, 0}));
  EXPECT_EQ(parse_weight(" 2 -1 ", 2), (Weight{2, -1}));
  EXPECT_THROW(parse_weight("1", 2), std::invalid_argument);
  EXPECT_THROW(parse_weight("1,x", 2), std::invalid_argument);
}

}  // namespace
}  // namespace qbruhat
