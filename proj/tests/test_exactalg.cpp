#include <gtest/gtest.h>

#include <random>

#include "qbruhat/linalg.hpp"
#include "qbruhat/scalar.hpp"

namespace qbruhat {
namespace {

const RatFunc q = RatFunc::q_power(1);

TEST(Laurent, NormalizesAndPrints) {
  Laurent a = Laurent::q_power(-1) + Laurent(2) + Laurent::q_power(1);
  EXPECT_EQ(a.str(), "q^-1 + 2 + q");
  EXPECT_EQ(a.low(), -1);
  EXPECT_EQ(a.high(), 1);
  Laurent z = a - a;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z, Laurent());
  EXPECT_EQ((Laurent::monomial(Rational(-3), 2) + Laurent::monomial(Rational(1, 2), 1)).str(), "1/2*q - 3*q^2");
  EXPECT_EQ(Laurent::q_power(0).str(), "1");
}

TEST(Laurent, QIntegers) {
  EXPECT_EQ(q_int(2), Laurent::q_power(-1) + Laurent::q_power(1));
  EXPECT_EQ(q_int(3, 2).str(), "q^-4 + 1 + q^4");
  EXPECT_EQ(q_int(-2), -q_int(2));
  EXPECT_EQ(q_binomial(4, 2), Laurent::q_power(-4) + Laurent::q_power(-2) + Laurent(2) + Laurent::q_power(2) +
                                  Laurent::q_power(4));
  // [n] (q - q^-1) = q^n - q^-n
  for (int n = 0; n < 6; ++n)
    EXPECT_EQ(q_int(n) * (Laurent::q_power(1) - Laurent::q_power(-1)), Laurent::q_power(n) - Laurent::q_power(-n));
}

TEST(RatFunc, CanonicalForm) {
  RatFunc a = (q * q - RatFunc(1)) / (q - RatFunc(1));
  EXPECT_TRUE(a.is_laurent());
  EXPECT_EQ(a, q + RatFunc(1));
  RatFunc b = RatFunc(1) / (RatFunc(2) * q + RatFunc(2));
  EXPECT_EQ(b.den().str(), "1 + q");
  EXPECT_EQ(b.num(), Laurent(Rational(1, 2)));
  EXPECT_EQ(b * (RatFunc(2) * q + RatFunc(2)), RatFunc(1));
  RatFunc c = RatFunc(1) / q;
  EXPECT_TRUE(c.is_laurent());
  EXPECT_EQ(c.str(), "q^-1");
  EXPECT_EQ((q / (q * q + q)).str(), "(1)/(1 + q)");
}

TEST(Linalg, RrefExamples) {
  auto id = Matrix<RatFunc>::identity(3);
  auto e = rref(id);
  EXPECT_EQ(e.rank, 3);
  EXPECT_EQ(e.matrix, id);
  EXPECT_EQ(rref(Matrix<RatFunc>(2, 4)).rank, 0);
  Matrix<RatFunc> m{{q, RatFunc(1)}, {q * q, q}};
  auto r = rref(m);
  EXPECT_EQ(r.rank, 1);
  EXPECT_EQ(r.matrix(0, 0), RatFunc(1));
  EXPECT_EQ(r.matrix(0, 1), RatFunc(1) / q);
}

TEST(Linalg, KernelExamples) {
  EXPECT_EQ(kernel(Matrix<RatFunc>::identity(3)).dim(), 0);
  EXPECT_TRUE(kernel(Matrix<RatFunc>(3, 3)).is_full());
  Matrix<RatFunc> m{{q, RatFunc(-1)}};
  auto k = kernel(m);
  ASSERT_EQ(k.dim(), 1);
  EXPECT_TRUE(k.contains(Vec<RatFunc>{RatFunc(1), q}));
}

TEST(Linalg, SolveExamples) {
  Vec<RatFunc> b{q, RatFunc(3), RatFunc(0)};
  EXPECT_EQ(*solve(Matrix<RatFunc>::identity(3), b), b);
  Matrix<RatFunc> col{{RatFunc(1)}, {RatFunc(0)}};
  EXPECT_FALSE(solve(col, Vec<RatFunc>{RatFunc(0), RatFunc(1)}).has_value());
  Matrix<RatFunc> s{{q}};
  auto x = solve(s, Vec<RatFunc>{q * q * q});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], q * q);
}

TEST(Linalg, SubspaceExamples) {
  using S = Subspace<Rational>;
  auto e = [](int i) {
    Vec<Rational> v(3, 0);
    v[i] = 1;
    return v;
  };
  S u = S::span(3, {e(0), e(1)});
  S v = S::span(3, {e(1), e(2)});
  EXPECT_EQ(u.intersect(v), S::span(3, {e(1)}));
  EXPECT_EQ(u + S::zero(3), u);
  EXPECT_TRUE(S::full(3).orthogonal_complement().is_zero_space());
  EXPECT_TRUE((u + v).is_full());
}

// Random matrices over Q(q) with small Laurent entries.
class RandomField {
 public:
  explicit RandomField(unsigned seed) : rng_(seed) {}
  RatFunc scalar() {
    std::uniform_int_distribution<int> coin(0, 3);
    if (coin(rng_) == 0) return RatFunc(0);
    std::uniform_int_distribution<int> c(-2, 2), e(-2, 2);
    Laurent l = Laurent::monomial(Rational(c(rng_)), e(rng_)) + Laurent::monomial(Rational(c(rng_)), e(rng_));
    if (coin(rng_) == 1) return RatFunc(l, Laurent(1) + Laurent::q_power(1));
    return RatFunc(l);
  }
  Matrix<RatFunc> matrix(int r, int c) {
    Matrix<RatFunc> m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = scalar();
    return m;
  }
  // Low-rank product to exercise dependent rows.
  Matrix<RatFunc> low_rank(int r, int c, int k) { return matrix(r, k) * matrix(k, c); }
  int size(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::mt19937 rng_;
};

TEST(LinalgProperty, RankNullityAndSolve) {
  RandomField gen(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = gen.size(1, 5), c = gen.size(1, 5);
    auto a = trial % 2 ? gen.matrix(r, c) : gen.low_rank(r, c, gen.size(1, 3));
    const int rk = rank(a);
    EXPECT_EQ(rk + kernel(a).dim(), c);
    auto ker = kernel(a);
    for (int k = 0; k < ker.dim(); ++k)
      for (const auto& x : a.apply(ker.vector(k))) EXPECT_TRUE(x.is_zero());
    Vec<RatFunc> x(c);
    for (auto& v : x) v = gen.scalar();
    auto b = a.apply(x);
    auto sol = solve(a, b);
    ASSERT_TRUE(sol);
    EXPECT_EQ(a.apply(*sol), b);
  }
}

TEST(LinalgProperty, SubspaceLattice) {
  RandomField gen(11);
  using S = Subspace<RatFunc>;
  for (int trial = 0; trial < 16; ++trial) {
    const int n = gen.size(1, 8);
    auto pick = [&] { return S::span(gen.low_rank(gen.size(1, 4), n, gen.size(1, 3))); };
    S u = pick(), v = pick(), w = pick();
    EXPECT_EQ(u + v, v + u);
    EXPECT_EQ(u.intersect(v), v.intersect(u));
    EXPECT_EQ((u + v) + w, u + (v + w));
    EXPECT_EQ(u.intersect(v).intersect(w), u.intersect(v.intersect(w)));
    EXPECT_EQ(u + u, u);
    EXPECT_EQ(u.intersect(u), u);
    EXPECT_EQ((u + v).dim() + u.intersect(v).dim(), u.dim() + v.dim());
    EXPECT_EQ(u.orthogonal_complement().orthogonal_complement(), u);
    EXPECT_EQ(u.orthogonal_complement().dim(), n - u.dim());
    EXPECT_TRUE((u + v).contains(u));
    EXPECT_TRUE(u.contains(u.intersect(v)));
  }
}

}  // namespace
}  // namespace qbruhat
