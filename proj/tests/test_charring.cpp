#include <gtest/gtest.h>

#include "qbruhat/charring.hpp"

namespace qbruhat {
namespace {

// Number of ways to write -eta as a nonnegative combination of positive roots,
// for every eta of depth <= N, by enumerating all multiplicity vectors.
std::map<Weight, long long> kostant_brute_force(const CartanDatum& d, int N) {
  const auto& roots = d.positive_roots();
  std::map<Weight, long long> counts;
  std::vector<int> m(roots.size(), 0);
  while (true) {
    std::vector<int> sum(d.rank(), 0);
    for (std::size_t k = 0; k < roots.size(); ++k)
      for (int i = 0; i < d.rank(); ++i) sum[i] -= m[k] * roots[k][i];
    Weight eta = d.from_root_coords(sum);
    if (d.depth(eta) <= N) ++counts[eta];
    std::size_t k = 0;
    while (k < m.size() && ++m[k] > N) m[k++] = 0;
    if (k == m.size()) break;
  }
  return counts;
}

TEST(Characters, SwExamples) {
  WeylGroup W(build_cartan("A2"));
  const auto& d = W.datum();
  const Weight a = d.simple_root(0), b = d.simple_root(1);
  for (WeylElem w : W.elements()) EXPECT_EQ(char_Sw(W, w, 3)[Weight::zero(2)], 1);
  auto ch = char_Sw(W, W.identity(), 4);
  EXPECT_EQ(ch[-(a + b)], 2);
  EXPECT_EQ(ch[-a], 1);
  EXPECT_EQ(ch[a], 0);
  EXPECT_EQ(ch.window(), 4);
}

TEST(Characters, SwMatchesKostantCounts) {
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    WeylGroup W(build_cartan(label));
    const int N = 6;
    auto oracle = kostant_brute_force(W.datum(), N);
    auto ch = char_Sw(W, W.identity(), N);
    EXPECT_EQ(ch.terms(), oracle) << label;
  }
}

TEST(Characters, SwSupportInCone) {
  for (const char* label : {"A2", "B2"}) {
    WeylGroup W(build_cartan(label));
    const auto& d = W.datum();
    for (WeylElem w : W.elements()) {
      auto ch = char_Sw(W, w, 5);
      // every support weight is w applied to an element of Q^-
      WeylElem winv = W.inverse(w);
      for (const auto& [eta, c] : ch.terms()) {
        EXPECT_GT(c, 0);
        EXPECT_LE(d.depth(eta), 5);
        EXPECT_TRUE(d.dominance_leq(W.act(winv, eta), Weight::zero(d.rank())));
      }
      // twisting e by w: counts agree with the Kostant function transported by w
      auto base = char_Sw(W, W.identity(), 20);
      for (const auto& [eta, c] : ch.terms()) EXPECT_EQ(base[W.act(winv, eta)], c);
    }
  }
}

TEST(Characters, DemazureExamples) {
  WeylGroup W(build_cartan("A2"));
  const auto& d = W.datum();
  const Weight wa = d.fundamental(0);
  auto e = demazure_character(W, W.identity(), wa);
  EXPECT_EQ(e.mass(), 1);
  EXPECT_EQ(e[wa], 1);
  EXPECT_EQ(demazure_character(W, W.parse("s1"), wa).mass(), 2);
  EXPECT_EQ(demazure_character(W, W.longest(), wa).mass(), 3);
  EXPECT_THROW(demazure_character(W, W.identity(), Weight{-1, 0}), std::invalid_argument);
}

TEST(Characters, WeylDimension) {
  auto a2 = build_cartan("A2"), a1 = build_cartan("A1"), b2 = build_cartan("B2");
  EXPECT_EQ(weyl_dim(a2, Weight{0, 0}), 1);
  EXPECT_EQ(weyl_dim(a2, Weight{1, 1}), 8);
  for (int n = 0; n < 6; ++n) EXPECT_EQ(weyl_dim(a1, Weight{n}), n + 1);
  // B2 with alpha_1 long: omega_1 is the 5-dimensional, omega_2 the spin module.
  EXPECT_EQ(weyl_dim(b2, Weight{1, 0}), 5);
  EXPECT_EQ(weyl_dim(b2, Weight{0, 1}), 4);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      const int c = 2 * x + y;  // coordinates in the short-coroot normalization
      EXPECT_EQ(weyl_dim(b2, Weight{x, y}), (x + 1) * (y + 1) * (x + y + 2) * (c + 3) / 6);
      EXPECT_EQ(weyl_dim(a2, Weight{x, y}), (x + 1) * (y + 1) * (x + y + 2) / 2);
    }
}

TEST(Characters, DemazureProperties) {
  for (const char* label : {"A2", "B2", "A1", "G2"}) {
    WeylGroup W(build_cartan(label));
    const auto& d = W.datum();
    std::vector<Weight> lambdas;
    for (int x = 0; x <= 2; ++x)
      for (int y = 0; y <= (d.rank() > 1 ? 2 : 0); ++y)
        lambdas.push_back(d.rank() > 1 ? Weight{x, y} : Weight{x});
    for (const auto& lam : lambdas) {
      auto full = demazure_character(W, W.longest(), lam);
      EXPECT_EQ(full.mass(), weyl_dim(d, lam));
      for (WeylElem y : W.elements()) {
        auto ch = demazure_character(W, y, lam);
        EXPECT_TRUE(ch.nonnegative());
        for (const auto& word : W.reduced_words(y)) EXPECT_EQ(demazure_character(W, word, lam), ch);
        for (WeylElem z : W.elements()) {
          if (W.bruhat_leq(y, z)) {
            EXPECT_TRUE(ch.leq(demazure_character(W, z, lam)));
          }
        }
      }
    }
  }
}

TEST(Characters, Arithmetic) {
  auto a = FormalCharacter::monomial(Weight{1, 0}) + FormalCharacter::monomial(Weight{0, 1});
  auto sq = a * a;
  EXPECT_EQ(sq[(Weight{1, 1})], 2);
  EXPECT_EQ(sq.mass(), 4);
  FormalCharacter t3(3), t5(5);
  EXPECT_EQ((t3 * t5).window(), 3);
  EXPECT_EQ((t5 + a).window(), 5);
}

}  // namespace
}  // namespace qbruhat
