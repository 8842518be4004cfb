#include <gtest/gtest.h>

#include <set>

#include "qbruhat/strata.hpp"

namespace qbruhat {
namespace {

TEST(Strata, PairCounts) {
  WeylGroup A1(build_cartan("A1")), A2(build_cartan("A2"));
  DiamondPoset p1(A1);
  ASSERT_EQ(p1.size(), 3);
  EXPECT_TRUE(p1.contains({A1.identity(), A1.identity()}));
  EXPECT_TRUE(p1.contains({A1.identity(), A1.longest()}));
  EXPECT_TRUE(p1.contains({A1.longest(), A1.longest()}));
  EXPECT_EQ(DiamondPoset(A2).size(), 19);
  DiamondPoset anchored(A2, A2.longest());
  EXPECT_EQ(anchored.size(), 6);
  for (const auto& p : anchored.pairs()) EXPECT_EQ(p.z, A2.longest());
}

TEST(Strata, BruteForceMembership) {
  for (const char* label : {"A2", "B2", "G2"}) {
    WeylGroup W(build_cartan(label));
    DiamondPoset full(W);
    int count = 0;
    for (WeylElem y : W.elements())
      for (WeylElem z : W.elements()) {
        const bool comparable = W.bruhat_leq(y, z);
        count += comparable;
        EXPECT_EQ(full.contains({y, z}), comparable);
      }
    EXPECT_EQ(full.size(), count);
    for (WeylElem w : W.elements()) {
      DiamondPoset a(W, w);
      for (const auto& p : a.pairs()) {
        EXPECT_TRUE(full.contains(p));
        EXPECT_TRUE(W.bruhat_leq(p.y, w) && W.bruhat_leq(w, p.z));
      }
      int expect = 0;
      for (const auto& p : full.pairs()) expect += W.bruhat_leq(p.y, w) && W.bruhat_leq(w, p.z);
      EXPECT_EQ(a.size(), expect);
    }
  }
}

TEST(Strata, ClosureExamples) {
  WeylGroup W(build_cartan("A2"));
  DiamondPoset P(W);
  EXPECT_EQ(P.closure({W.identity(), W.longest()}).size(), 19U);
  auto top = P.closure({W.longest(), W.longest()});
  ASSERT_EQ(top.size(), 1U);
  WeylElem sa = W.parse("s1");
  auto c = P.closure({sa, sa});
  ASSERT_EQ(c.size(), 1U);
  EXPECT_EQ(c[0], (StratPair{sa, sa}));
  EXPECT_THROW(P.closure({W.longest(), W.identity()}), std::invalid_argument);
}

TEST(Strata, ExtremesAndClosureProperties) {
  for (const char* label : {"A2", "B2"}) {
    WeylGroup W(build_cartan(label));
    DiamondPoset P(W);
    const int top = *P.index_of({W.identity(), W.longest()});
    for (int i = 0; i < P.size(); ++i) {
      EXPECT_TRUE(P.succeq(top, i));
      if (i != top) {
        EXPECT_FALSE(P.succeq(i, top));
      }
    }
    for (WeylElem w : W.elements()) {
      const int k = *P.index_of({w, w});
      for (int i = 0; i < P.size(); ++i) {
        if (i != k) {
          EXPECT_FALSE(P.succeq(k, i)) << "(w,w) is minimal";
        }
      }
    }
    for (const auto& p : P.pairs()) {
      auto cl = P.closure(p);
      std::set<StratPair> cs(cl.begin(), cl.end());
      for (const auto& q : cl) {
        for (const auto& r : P.closure(q)) EXPECT_TRUE(cs.count(r)) << "closure is downward closed";
        std::set<StratPair> sub;
        for (const auto& r : P.closure(q)) sub.insert(r);
        EXPECT_TRUE(std::includes(cs.begin(), cs.end(), sub.begin(), sub.end())) << "monotone";
      }
    }
  }
}

TEST(Strata, HasseGeneratesOrder) {
  for (const char* label : {"A2", "B2", "G2"}) {
    WeylGroup W(build_cartan(label));
    DiamondPoset P(W);
    const int n = P.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) reach[i][i] = true;
    for (auto [i, j] : P.hasse()) reach[i][j] = true;
    for (int m = 0; m < n; ++m)
      for (int i = 0; i < n; ++i)
        if (reach[i][m])
          for (int j = 0; j < n; ++j)
            if (reach[m][j]) reach[i][j] = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) EXPECT_EQ(reach[i][j], P.succeq(i, j)) << label;
  }
}

TEST(Strata, Ranks) {
  WeylGroup W(build_cartan("A2"));
  DiamondPoset P(W);
  EXPECT_EQ(P.rank({W.identity(), W.identity()}), 2);
  EXPECT_EQ(P.rank({W.identity(), W.longest()}), 1);
  EXPECT_EQ(P.rank({W.parse("s1"), W.parse("s2 s1")}), 1);
  for (const auto& p : P.pairs()) {
    WeylElem x = W.multiply(W.inverse(p.y), p.z);
    EXPECT_EQ(P.rank(p), W.fixed_lattice(x).dim());
  }
}

TEST(Strata, SortedByLengths) {
  WeylGroup W(build_cartan("B2"));
  DiamondPoset P(W);
  for (int i = 1; i < P.size(); ++i) {
    auto a = P.pair(i - 1), b = P.pair(i);
    EXPECT_LE(std::make_pair(W.length(a.y), W.length(a.z)), std::make_pair(W.length(b.y), W.length(b.z)));
  }
}

}  // namespace
}  // namespace qbruhat
