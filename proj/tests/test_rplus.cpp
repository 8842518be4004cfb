#include <gtest/gtest.h>

#include <random>

#include "qbruhat/rplus.hpp"

namespace qbruhat {
namespace {

Weight w2(int a, int b) { return Weight{a, b}; }

// Right weights of the black nodes: weights where the piece is nonzero.
std::vector<Weight> support(const GradedSubspace& s) {
  std::vector<Weight> out;
  for (const auto& [w, p] : s.parts) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> sorted(std::vector<Weight> v) {
  std::sort(v.begin(), v.end());
  return v;
}

class A2Model : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    ctx_ = new RepContext("A2");
    R_ = new RPlus(*ctx_);
  }
  static void TearDownTestSuite() {
    delete R_;
    delete ctx_;
  }
  static RepContext* ctx_;
  static RPlus* R_;
  const WeylGroup& W() const { return ctx_->weyl(); }
  const CartanDatum& d() const { return ctx_->datum(); }
};
RepContext* A2Model::ctx_ = nullptr;
RPlus* A2Model::R_ = nullptr;

TEST_F(A2Model, UnitAndWeights) {
  const MatrixCoeff one{w2(0, 0), Vec<RatFunc>{RatFunc(1)}};
  const MatrixCoeff a = R_->basis_coeff(w2(1, 1), 3);
  EXPECT_EQ(R_->multiply(one, a).xi, a.xi);
  EXPECT_EQ(R_->multiply(a, one).xi, a.xi);
  const MatrixCoeff x = R_->extreme(w2(1, 0), W().parse("s1"));
  const MatrixCoeff y = R_->extreme(w2(0, 1), W().parse("s2"));
  EXPECT_EQ(R_->rwt(R_->multiply(x, y)), w2(0, 0));
}

TEST_F(A2Model, ExtremeProductsAreExtreme) {
  for (WeylElem w : W().elements()) {
    const MatrixCoeff p = R_->multiply(R_->extreme(w2(1, 0), w), R_->extreme(w2(0, 1), w));
    const MatrixCoeff c = R_->extreme(w2(1, 1), w);
    EXPECT_EQ(Subspace<RatFunc>::span(8, {p.xi}), Subspace<RatFunc>::span(8, {c.xi})) << W().word_str(w);
  }
}

TEST_F(A2Model, MultiplicationIsAssociative) {
  std::mt19937 rng(5);
  const std::vector<Weight> lams = {w2(1, 0), w2(0, 1), w2(1, 1)};
  for (int trial = 0; trial < 12; ++trial) {
    MatrixCoeff t[3];
    for (auto& c : t) {
      const Weight l = lams[rng() % lams.size()];
      c = R_->basis_coeff(l, static_cast<int>(rng() % R_->V(l)->dim()));
    }
    EXPECT_EQ(R_->multiply(R_->multiply(t[0], t[1]), t[2]).xi, R_->multiply(t[0], R_->multiply(t[1], t[2])).xi);
  }
}

TEST_F(A2Model, MultiplicationMatricesMatchProducts) {
  const MatrixCoeff c = R_->extreme(w2(1, 1), W().parse("s2"));
  auto N = R_->V(w2(1, 0));
  for (const Weight& om : N->weights())
    for (Side side : {Side::left, Side::right}) {
      const Matrix<RatFunc> m = R_->mult_matrix(c, side, w2(1, 0), om);
      for (int k : N->weight_space(om)) {
        const MatrixCoeff x = R_->basis_coeff(w2(1, 0), k);
        const MatrixCoeff p = side == Side::left ? R_->multiply(c, x) : R_->multiply(x, c);
        const Weight target = R_->rwt(c) + om;
        EXPECT_EQ(R_->V(w2(2, 1))->restrict_to(target, p.xi), m.column(N->local(k)));
      }
    }
}

TEST_F(A2Model, ExampleIdealPieces) {
  const WeylElem sa = W().parse("s1"), sab = W().parse("s1 s2");
  const Weight a = d().simple_root(0), b = d().simple_root(1);
  const GradedIdeal qm = R_->ideal_Q(sa, Sign::minus);
  const GradedIdeal qp = R_->ideal_Q(sab, Sign::plus);
  EXPECT_EQ(qm.piece(w2(1, 0)).dim(), 1);
  EXPECT_EQ(support(qm.piece(w2(1, 0))), (std::vector<Weight>{w2(1, 0)}));
  EXPECT_EQ(qm.piece(w2(0, 1)).dim(), 0);
  EXPECT_EQ(qm.piece(w2(1, 1)).dim(), 3);
  EXPECT_EQ(support(qm.piece(w2(1, 1))), sorted({Weight::zero(2), a, a + b}));
  EXPECT_EQ(qp.piece(w2(1, 0)).dim(), 1);
  EXPECT_EQ(support(qp.piece(w2(1, 0))), (std::vector<Weight>{W().act(W().longest(), w2(1, 0))}));
  EXPECT_EQ(qp.piece(w2(0, 1)).dim(), 0);
  EXPECT_EQ(qp.piece(w2(1, 1)).dim(), 3);
  EXPECT_EQ(support(qp.piece(w2(1, 1))), sorted({Weight::zero(2), -b, -(a + b)}));
  // The zero weight line of each is c_1 resp. c_2, and the two lines differ.
  EXPECT_EQ(qm.piece(w2(1, 1)).dim_at(Weight::zero(2)), 1);
  EXPECT_NE(qm.piece(w2(1, 1)).parts.at(Weight::zero(2)), qp.piece(w2(1, 1)).parts.at(Weight::zero(2)));

  const MatrixCoeff prod = R_->multiply(R_->extreme(w2(1, 0), sa), R_->extreme(w2(0, 1), W().parse("s2")));
  auto V = R_->V(w2(1, 1));
  EXPECT_TRUE(graded_contains(*V, R_->qtilde_piece(sa, sab, w2(1, 1)), prod.xi));
  EXPECT_FALSE(graded_contains(*V, R_->q_piece(sa, Sign::minus, w2(1, 1)), prod.xi));
  EXPECT_FALSE(graded_contains(*V, R_->q_piece(sab, Sign::plus, w2(1, 1)), prod.xi));

  const MatrixCoeff cb = R_->extreme(w2(0, 1), W().parse("s2"));
  EXPECT_EQ(R_->qtilde_piece(sa, sab, w2(0, 1)).dim(), 0);
  for (int bound : {1, 2}) {
    const SaturationResult sat = R_->saturate(sa, sab, w2(0, 1), bound);
    EXPECT_TRUE(graded_contains(*R_->V(w2(0, 1)), sat.piece, cb.xi));
    const SaturationResult sat_y = R_->saturate(sa, sab, w2(0, 1), bound, sa);
    EXPECT_EQ(sat.piece, sat_y.piece);
  }
}

TEST_F(A2Model, LeftIdealPieces) {
  const Weight wa = w2(1, 0);
  auto V = R_->V(wa);
  const Weight low = W().act(W().longest(), wa);
  EXPECT_EQ(R_->left_ideal_piece(wa, low, Sign::plus, wa).dim(), 0);
  EXPECT_EQ(R_->left_ideal_piece(wa, wa, Sign::minus, wa).dim(), 0);
  const GradedSubspace j = R_->left_ideal_piece(wa, W().act(W().parse("s1"), wa), Sign::plus, wa);
  EXPECT_EQ(j.dim(), 1);
  EXPECT_EQ(support(j), (std::vector<Weight>{low}));
  const GradedSubspace big = R_->left_ideal_piece(wa, wa, Sign::plus, w2(2, 1));
  auto T = R_->V(w2(2, 1));
  EXPECT_FALSE(graded_contains(*T, big, T->basis_vector(0)));
  EXPECT_TRUE(graded_contains(*T, big, R_->extreme(w2(2, 1), W().longest()).xi));
  // Two-sided: right multiples of the generators stay inside.
  const MatrixCoeff gen = R_->multiply(R_->extreme(wa, W().longest()), R_->basis_coeff(w2(1, 1), 2));
  EXPECT_TRUE(graded_contains(*T, big, gen.xi));
}

TEST_F(A2Model, CommutationRelations) {
  const CommutationReport r = R_->check_commutation(w2(1, 0), w2(-1, 1), w2(1, 0), w2(1, 0));
  EXPECT_EQ(r.exponent, 1);
  EXPECT_TRUE(r.ok());
  for (int wrong : {-1, 0, 2}) EXPECT_FALSE(R_->check_commutation(w2(1, 0), w2(-1, 1), w2(1, 0), w2(1, 0), wrong).ok());
  for (const Weight& nu : {w2(1, 0), w2(0, 1), w2(1, 1)})
    for (const Weight& lambda : {w2(0, 0), w2(1, 0), w2(0, 1), w2(1, 1)}) {
      EXPECT_TRUE(R_->exact_relation_ce(lambda, nu));
      for (const Weight& mu : R_->V(nu)->weights())
        for (const Weight& eta : R_->V(lambda)->weights())
          EXPECT_TRUE(R_->check_commutation(nu, mu, lambda, eta).ok())
              << nu.str() << " " << mu.str() << " " << lambda.str() << " " << eta.str();
    }
}

TEST_F(A2Model, PhiOnExtremeCells) {
  const Weight lambda = w2(1, 1);
  auto V = R_->V(lambda);
  for (const Weight& nu : {w2(1, 0), w2(0, 1)})
    for (const Weight& mu : V->weights()) {
      const Weight eta_e = mu - lambda;
      const Matrix<RatFunc> e = R_->phi_w(W().identity(), nu, w2(0, 0), eta_e, lambda);
      const int m = V->multiplicity(mu);
      EXPECT_EQ(e, Matrix<RatFunc>::identity(m).scaled(RatFunc::q_power(d().inner_int(nu, eta_e))));
      const WeylElem w0 = W().longest();
      const Weight eta0 = mu - W().act(w0, lambda);
      const Matrix<RatFunc> f = R_->phi_w(w0, nu, w2(0, 0), eta0, lambda);
      EXPECT_EQ(f, Matrix<RatFunc>::identity(m).scaled(RatFunc::q_power(-d().inner_int(W().act(w0, nu), eta0))));
    }
}

TEST_F(A2Model, PhiInverseAndCommuting) {
  const WeylElem w = W().parse("s1");
  const Weight lambda = w2(2, 2);
  for (const Weight& mu : R_->V(lambda)->weights()) {
    const Weight eta = mu - W().act(w, lambda);
    if (!R_->sufficiently_large(w, eta, lambda)) continue;
    const Matrix<RatFunc> a = R_->phi_w(w, w2(1, 0), w2(0, 0), eta, lambda);
    const Matrix<RatFunc> ainv = R_->phi_w(w, w2(0, 0), w2(1, 0), eta, lambda);
    const Matrix<RatFunc> b = R_->phi_w(w, w2(0, 1), w2(0, 0), eta, lambda);
    EXPECT_EQ(a * ainv, Matrix<RatFunc>::identity(a.rows()));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(R_->phi_w(w, w2(1, 1), w2(0, 0), eta, lambda), a * b);
  }
}

TEST_F(A2Model, TwistedSplitMatchesQwPlus) {
  for (WeylElem w : W().elements())
    for (const Weight& lambda : {w2(1, 1), w2(2, 1), w2(2, 2)}) {
      auto V = R_->V(lambda);
      const GradedSubspace qw = R_->q_piece(w, Sign::plus, lambda);
      for (const Weight& mu : V->weights()) {
        const Weight eta = mu - W().act(w, lambda);
        if (!R_->sufficiently_large(w, eta, lambda)) continue;
        const auto pieces = R_->wt_w_decompose(w, eta, lambda);
        Subspace<RatFunc> nonzero = Subspace<RatFunc>::zero(V->multiplicity(mu));
        for (const auto& p : pieces) {
          EXPECT_TRUE(d().dominance_leq(p.mu, Weight::zero(2)));
          if (!p.mu.is_zero()) nonzero = nonzero + p.space;
          for (int k = 0; k < p.space.dim(); ++k) {
            const Vec<RatFunc> xi = V->extend_from(mu, p.space.vector(k));
            EXPECT_EQ(qw.contains_local(mu, p.space.vector(k)), !p.mu.is_zero());
            const Vec<RatFunc> top = string_along(*ctx_, *V, xi, w, StringKind::y_star);
            ASSERT_TRUE(V->weight_of(top).has_value());
            EXPECT_EQ(p.mu, 2 * (*V->weight_of(top) - lambda));
          }
        }
        const Subspace<RatFunc> q = qw.parts.count(mu) ? qw.parts.at(mu) : Subspace<RatFunc>::zero(V->multiplicity(mu));
        EXPECT_EQ(nonzero, q) << W().word_str(w) << " " << mu.str();
      }
    }
}

TEST_F(A2Model, SaturatedStrata) {
  DiamondPoset P(W());
  for (const StratPair& p : P.pairs()) {
    const GradedIdeal q = R_->ideal_Qsat(p.y, p.z, 2);
    for (const Weight& nu : {w2(1, 0), w2(0, 1), w2(1, 1)}) {
      const ExtremeSets s = R_->D_pm(q, nu);
      EXPECT_EQ(s.minus, (std::vector<Weight>{W().act(p.y, nu)}));
      EXPECT_EQ(s.plus, (std::vector<Weight>{W().act(p.z, nu)}));
    }
    const StratumResult r = R_->stratum_of(q);
    ASSERT_TRUE(r.pair.has_value()) << r.note;
    EXPECT_EQ(*r.pair, p);
  }
  const StratumResult zero = R_->stratum_of(RPlus::zero_ideal());
  ASSERT_TRUE(zero.pair.has_value());
  EXPECT_EQ(*zero.pair, (StratPair{W().identity(), W().longest()}));
}

TEST(RPlusB2, CommutationAndExactRelation) {
  RepContext ctx("B2");
  RPlus R(ctx);
  for (const Weight& nu : {w2(1, 0), w2(0, 1)})
    for (const Weight& lambda : {w2(1, 0), w2(0, 1)}) {
      EXPECT_TRUE(R.exact_relation_ce(lambda, nu));
      for (const Weight& mu : R.V(nu)->weights())
        for (const Weight& eta : R.V(lambda)->weights()) EXPECT_TRUE(R.check_commutation(nu, mu, lambda, eta).ok());
    }
}

TEST(RPlusA1, CommutationAndExactRelation) {
  RepContext ctx("A1");
  RPlus R(ctx);
  for (int n = 1; n <= 2; ++n)
    for (int l = 0; l <= 2; ++l) {
      EXPECT_TRUE(R.exact_relation_ce(Weight{l}, Weight{n}));
      for (const Weight& mu : R.V(Weight{n})->weights())
        for (const Weight& eta : R.V(Weight{l})->weights())
          EXPECT_TRUE(R.check_commutation(Weight{n}, mu, Weight{l}, eta).ok());
    }
}

}  // namespace
}  // namespace qbruhat
