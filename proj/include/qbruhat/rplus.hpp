#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qbruhat/charring.hpp"
#include "qbruhat/errors.hpp"
#include "qbruhat/strata.hpp"
#include "qbruhat/uqrep.hpp"

namespace qbruhat {

// c^lambda_xi for a functional xi on V(lambda), stored in the dual coordinates of the module basis.
struct MatrixCoeff {
  Weight lambda;
  Vec<RatFunc> xi;
};

enum class Side { left, right };

inline bool graded_contains(const UqModule& V, const GradedSubspace& s, const Vec<RatFunc>& v) {
  for (const Weight& mu : V.weights())
    if (!s.contains_local(mu, V.restrict_to(mu, v))) return false;
  return true;
}

// Piece of an ideal of R^+ in each V^+(lambda), memoized per lambda.
class GradedIdeal {
 public:
  using Evaluator = std::function<GradedSubspace(const Weight&)>;
  GradedIdeal(std::string label, Evaluator eval) : label_(std::move(label)), eval_(std::move(eval)) {}

  const std::string& label() const { return label_; }
  GradedSubspace piece(const Weight& lambda) const {
    {
      std::lock_guard<std::mutex> lock(*mu_);
      auto it = memo_->find(lambda);
      if (it != memo_->end()) return it->second;
    }
    GradedSubspace p = eval_(lambda);
    std::lock_guard<std::mutex> lock(*mu_);
    return memo_->emplace(lambda, std::move(p)).first->second;
  }

 private:
  std::string label_;
  Evaluator eval_;
  std::shared_ptr<std::mutex> mu_ = std::make_shared<std::mutex>();
  std::shared_ptr<std::map<Weight, GradedSubspace>> memo_ = std::make_shared<std::map<Weight, GradedSubspace>>();
};

struct CommutationReport {
  int exponent = 0;
  bool plus_holds = true;   // c^nu_mu c^lambda_eta - q^e c^lambda_eta c^nu_mu in J^+_lambda(eta)
  bool minus_holds = true;  // c^lambda_eta c^nu_mu - q^e c^nu_mu c^lambda_eta in J^-_lambda(eta)
  bool ok() const { return plus_holds && minus_holds; }
};

struct EigenPiece {
  Weight mu;  // in 2Q^-
  Subspace<RatFunc> space;
};

struct SaturationResult {
  GradedSubspace piece;
  std::vector<int> dims;  // dimension of the union after each step k = 0..bound
  bool stabilized = false;
};

struct ExtremeSets {
  std::vector<Weight> minus;  // maximal elements of C(nu)
  std::vector<Weight> plus;   // minimal elements of C(nu)
};

struct StratumResult {
  std::optional<StratPair> pair;
  ExtremeSets sets;
  std::string note;
};

// Desk-scale graded model of R^+ = sum over lambda of V^+(lambda).
class RPlus {
 public:
  explicit RPlus(const RepContext& ctx) : ctx_(&ctx) {}

  const RepContext& context() const { return *ctx_; }
  const WeylGroup& weyl() const { return ctx_->weyl(); }
  const CartanDatum& datum() const { return ctx_->datum(); }
  std::shared_ptr<const UqModule> V(const Weight& lambda) const { return ctx_->module(lambda); }

  MatrixCoeff basis_coeff(const Weight& lambda, int k) const { return {lambda, V(lambda)->basis_vector(k)}; }
  // c^lambda_w, the functional dual to the divided-power extreme vector u_{w lambda}.
  MatrixCoeff extreme(const Weight& lambda, WeylElem w) const {
    auto M = V(lambda);
    return {lambda, extreme_dual(*ctx_, *M, w)};
  }
  Weight rwt(const MatrixCoeff& a) const {
    auto w = V(a.lambda)->weight_of(a.xi);
    if (!w) throw std::invalid_argument("matrix coefficient is not a nonzero weight vector");
    return *w;
  }

  // Cartan product: (xi_a (x) xi_b) restricted along V(lambda_a + lambda_b) -> V(lambda_a) (x) V(lambda_b).
  MatrixCoeff multiply(const MatrixCoeff& a, const MatrixCoeff& b) const {
    auto T = V(a.lambda + b.lambda);
    auto e = ctx_->embedding(a.lambda, b.lambda);
    MatrixCoeff r{a.lambda + b.lambda, Vec<RatFunc>(T->dim())};
    for (int k = 0; k < T->dim(); ++k)
      for (const auto& t : e->image[k])
        if (!a.xi[t.a].is_zero() && !b.xi[t.b].is_zero()) r.xi[k] += t.value * a.xi[t.a] * b.xi[t.b];
    return r;
  }

  // Matrix of x -> a x (Side::left) or x -> x a (Side::right) from V(mu)^*_omega to
  // V(lambda_a + mu)^*_{rwt a + omega}, in local weight-space coordinates.
  Matrix<RatFunc> mult_matrix(const MatrixCoeff& a, Side side, const Weight& mu, const Weight& omega) const {
    auto A = V(a.lambda);
    auto B = V(mu);
    auto T = V(a.lambda + mu);
    const Weight target = rwt(a) + omega;
    auto e = side == Side::left ? ctx_->embedding(a.lambda, mu) : ctx_->embedding(mu, a.lambda);
    const auto& rows = T->weight_space(target);
    Matrix<RatFunc> m(static_cast<int>(rows.size()), B->multiplicity(omega));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& t : e->image[rows[r]]) {
        const int fixed = side == Side::left ? t.a : t.b;
        const int var = side == Side::left ? t.b : t.a;
        if (a.xi[fixed].is_zero()) continue;
        m(static_cast<int>(r), B->local(var)) += t.value * a.xi[fixed];
      }
    return m;
  }

  GradedSubspace demazure(const Weight& lambda, WeylElem y, Sign sign) const {
    const auto key = std::make_tuple(lambda, y.id, sign == Sign::plus);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = demazure_.find(key);
      if (it != demazure_.end()) return it->second;
    }
    GradedSubspace s = demazure_submodule(*ctx_, *V(lambda), y, sign);
    std::lock_guard<std::mutex> lock(mu_);
    return demazure_.emplace(key, std::move(s)).first->second;
  }

  // Q(y)^+- intersected with V^+(lambda): the orthogonal of V_y^+-(lambda).
  GradedSubspace q_piece(WeylElem y, Sign sign, const Weight& lambda) const {
    return graded_orthogonal(*V(lambda), demazure(lambda, y, sign));
  }
  // Q(y)^- + Q(z)^+ intersected with V^+(lambda).
  GradedSubspace qtilde_piece(WeylElem y, WeylElem z, const Weight& lambda) const {
    return graded_sum(q_piece(y, Sign::minus, lambda), q_piece(z, Sign::plus, lambda));
  }

  // J^+-_lambda(eta) intersected with V^+(target): V^+(target - lambda) times c^lambda_{eta'}, eta' < eta (+) or > eta (-).
  GradedSubspace left_ideal_piece(const Weight& lambda, const Weight& eta, Sign side, const Weight& target) const {
    const Weight nu = target - lambda;
    if (!nu.is_dominant()) throw std::invalid_argument("target - lambda must be dominant");
    auto L = V(lambda);
    auto N = V(nu);
    auto T = V(target);
    const CartanDatum& d = datum();
    std::map<Weight, std::vector<Vec<RatFunc>>> gens;
    for (const Weight& e2 : L->weights()) {
      const bool take = side == Sign::plus ? d.dominance_lt(e2, eta) : d.dominance_lt(eta, e2);
      if (!take) continue;
      for (int k : L->weight_space(e2)) {
        const MatrixCoeff g = basis_coeff(lambda, k);
        for (const Weight& om : N->weights()) {
          const Matrix<RatFunc> m = mult_matrix(g, Side::right, nu, om);
          for (int c = 0; c < m.cols(); ++c) gens[om + e2].push_back(m.column(c));
        }
      }
    }
    GradedSubspace out;
    for (auto& [w, vs] : gens) out.set(w, Subspace<RatFunc>::span(T->multiplicity(w), vs));
    return out;
  }

  // Relations c^nu_mu c^lambda_eta = q^{(lambda,nu)-(eta,mu)} c^lambda_eta c^nu_mu modulo J^+_lambda(eta),
  // and the mirrored relation modulo J^-_lambda(eta), on all basis functionals of the given weights.
  // An explicit exponent replaces q^{(lambda,nu)-(eta,mu)}.
  CommutationReport check_commutation(const Weight& nu, const Weight& mu, const Weight& lambda,
                                      const Weight& eta, std::optional<int> exponent = {}) const {
    const CartanDatum& d = datum();
    CommutationReport rep;
    rep.exponent = exponent.value_or(CartanDatum::to_int(d.inner(lambda, nu) - d.inner(eta, mu)));
    auto Nm = V(nu);
    auto Lm = V(lambda);
    auto T = V(lambda + nu);
    if (!Nm->has_weight(mu) || !Lm->has_weight(eta)) throw std::invalid_argument("weight not in the module");
    const GradedSubspace jp = left_ideal_piece(lambda, eta, Sign::plus, lambda + nu);
    const GradedSubspace jm = left_ideal_piece(lambda, eta, Sign::minus, lambda + nu);
    const RatFunc qe = RatFunc::q_power(rep.exponent);
    for (int ka : Nm->weight_space(mu))
      for (int kb : Lm->weight_space(eta)) {
        const MatrixCoeff a = basis_coeff(nu, ka), b = basis_coeff(lambda, kb);
        const Vec<RatFunc> ab = multiply(a, b).xi, ba = multiply(b, a).xi;
        Vec<RatFunc> d1(T->dim()), d2(T->dim());
        for (int k = 0; k < T->dim(); ++k) {
          d1[k] = ab[k] - qe * ba[k];
          d2[k] = ba[k] - qe * ab[k];
        }
        if (!graded_contains(*T, jp, d1)) rep.plus_holds = false;
        if (!graded_contains(*T, jm, d2)) rep.minus_holds = false;
      }
    return rep;
  }

  // c^lambda_xi c^nu_e = q^{(nu, rwt xi - lambda)} c^nu_e c^lambda_xi with zero remainder, for all basis xi.
  bool exact_relation_ce(const Weight& lambda, const Weight& nu) const {
    const CartanDatum& d = datum();
    auto Lm = V(lambda);
    const MatrixCoeff top = basis_coeff(nu, 0);
    for (int k = 0; k < Lm->dim(); ++k) {
      const MatrixCoeff a = basis_coeff(lambda, k);
      const RatFunc qe = RatFunc::q_power(d.inner_int(nu, Lm->weight(k) - lambda));
      const Vec<RatFunc> lhs = multiply(a, top).xi, rhs = multiply(top, a).xi;
      for (std::size_t t = 0; t < lhs.size(); ++t)
        if (lhs[t] != qe * rhs[t]) return false;
    }
    return true;
  }

  // lambda is sufficiently large for eta: c_w^{-lambda} V^+(lambda)|_{w lambda + eta} fills R^w_0|_eta,
  // whose dimension is the coefficient of e^eta in ch S^w.
  bool sufficiently_large(WeylElem w, const Weight& eta, const Weight& lambda) const {
    const CartanDatum& d = datum();
    auto n = d.integral_root_coords(eta);
    if (!n) return false;
    const long long want = char_Sw(weyl(), w, d.depth(eta))[eta];
    const Weight mu = weyl().act(w, lambda) + eta;
    return want > 0 && V(lambda)->multiplicity(mu) == want;
  }

  // Matrix of phi_w^nu : a -> c_w^{-nu} a c_w^{nu} on V^+(lambda)|_{w lambda + eta}, nu = nu_plus - nu_minus.
  Matrix<RatFunc> phi_w(WeylElem w, const Weight& nu_plus, const Weight& nu_minus, const Weight& eta,
                        const Weight& lambda) const {
    if (!nu_plus.is_dominant() || !nu_minus.is_dominant())
      throw std::invalid_argument("nu must be given as a difference of dominant weights");
    const Weight omega = weyl().act(w, lambda) + eta;
    auto M = V(lambda);
    if (!M->has_weight(omega)) throw std::invalid_argument("eta does not index a weight of V(lambda)");
    const int m = M->multiplicity(omega);
    Matrix<RatFunc> X = Matrix<RatFunc>::identity(m);
    auto step = [&](const Weight& nu, bool inverse_side) {
      if (nu.is_zero()) return;
      const MatrixCoeff c = extreme(nu, w);
      const Matrix<RatFunc> L = mult_matrix(c, Side::left, lambda, omega);
      const Matrix<RatFunc> R = mult_matrix(c, Side::right, lambda, omega);
      auto x = inverse_side ? solve(R, L) : solve(L, R);
      if (!x)
        throw not_sufficiently_large("V(" + lambda.str() + ") is not sufficiently large for eta = " + eta.str());
      X = *x * X;
    };
    step(nu_minus, true);
    step(nu_plus, false);
    return X;
  }

  // Joint generalized eigenspaces L(w,mu)|_eta of the twisted automorphisms q^{(w^-1 eta, omega_i)} phi_w^{omega_i}.
  std::vector<EigenPiece> wt_w_decompose(WeylElem w, const Weight& eta, const Weight& lambda) const {
    const CartanDatum& d = datum();
    const WeylGroup& W = weyl();
    const int n = d.rank();
    const Weight weta = W.act(W.inverse(w), eta);
    const auto box = d.integral_root_coords(weta);
    if (!box) throw std::invalid_argument("eta is not in the root lattice");
    const int m = V(lambda)->multiplicity(W.act(w, lambda) + eta);
    std::vector<std::vector<std::pair<int, Subspace<RatFunc>>>> per_gen(n);
    for (int i = 0; i < n; ++i) {
      Matrix<RatFunc> X = phi_w(w, d.fundamental(i), Weight::zero(n), eta, lambda);
      X = X.scaled(RatFunc::q_power(d.inner_int(weta, d.fundamental(i))));
      int total = 0;
      // mu = wt_w a + w^-1 eta lies between 2 w^-1 eta and 0; search that box with a margin of 2.
      for (int c = 2 * (*box)[i] - 2; c <= 2; ++c) {
        const RatFunc s = RatFunc::q_power(d.d(i) * c);
        Matrix<RatFunc> shifted = X - Matrix<RatFunc>::identity(m).scaled(s);
        Matrix<RatFunc> power = Matrix<RatFunc>::identity(m);
        for (int t = 0; t < m; ++t) power = power * shifted;
        Subspace<RatFunc> g = kernel(power);
        if (g.dim() == 0) continue;
        total += g.dim();
        per_gen[i].emplace_back(c, std::move(g));
      }
      if (total != m)
        throw invariant_violation("eigenvalues of phi_w are integer powers of q",
                                  "generalized eigenspaces of phi_w^{omega_" + std::to_string(i + 1) +
                                      "} miss part of the piece");
    }
    std::vector<EigenPiece> out;
    std::vector<int> coords(n);
    std::function<void(int, const Subspace<RatFunc>&)> rec = [&](int i, const Subspace<RatFunc>& acc) {
      if (acc.dim() == 0) return;
      if (i == n) {
        out.push_back({d.from_root_coords(coords), acc});
        return;
      }
      for (const auto& [c, g] : per_gen[i]) {
        coords[i] = c;
        rec(i + 1, acc.intersect(g));
      }
    };
    rec(0, Subspace<RatFunc>::full(m));
    int total = 0;
    for (const auto& p : out) total += p.space.dim();
    if (total != m) throw invariant_violation("L(w,mu) decomposition", "joint eigenspaces do not fill the piece");
    return out;
  }

  // Q(y,z) intersected with V^+(nu): elements a with c_along^{k rho} a in Q(y)^- + Q(z)^+ for some k <= bound.
  SaturationResult saturate(WeylElem y, WeylElem z, const Weight& nu, int bound, std::optional<WeylElem> along = {}) const {
    if (!weyl().bruhat_leq(y, z)) throw std::invalid_argument("saturation needs y <= z");
    if (bound < 1) throw std::invalid_argument("saturation bound must be at least 1");
    const WeylElem c = along.value_or(z);
    const CartanDatum& d = datum();
    auto N = V(nu);
    SaturationResult res;
    res.piece = qtilde_piece(y, z, nu);
    res.dims.push_back(res.piece.dim());
    GradedSubspace previous = res.piece;
    for (int k = 1; k <= bound; ++k) {
      const Weight lam = k * d.rho();
      const MatrixCoeff ck = extreme(lam, c);
      const GradedSubspace big = qtilde_piece(y, z, lam + nu);
      auto T = V(lam + nu);
      GradedSubspace step;
      for (const Weight& om : N->weights()) {
        const Matrix<RatFunc> M = mult_matrix(ck, Side::left, nu, om);
        const Weight target = rwt(ck) + om;
        auto it = big.parts.find(target);
        Matrix<RatFunc> annihilators;
        if (it == big.parts.end()) {
          annihilators = Matrix<RatFunc>::identity(T->multiplicity(target));
        } else {
          const Subspace<RatFunc> perp = it->second.orthogonal_complement();
          annihilators = Matrix<RatFunc>(0, T->multiplicity(target));
          for (int r = 0; r < perp.dim(); ++r) annihilators.append_row(perp.vector(r));
        }
        step.set(om, annihilators.rows() == 0 ? Subspace<RatFunc>::full(N->multiplicity(om))
                                               : kernel(annihilators * M));
      }
      previous = res.piece;
      res.piece = graded_sum(res.piece, step);
      res.dims.push_back(res.piece.dim());
    }
    res.stabilized = previous == res.piece;
    return res;
  }

  // C(nu) = weights where the piece misses part of V(nu)^*; D^- its maximal and D^+ its minimal elements.
  ExtremeSets extreme_sets(const GradedSubspace& piece, const Weight& nu) const {
    const CartanDatum& d = datum();
    auto N = V(nu);
    std::vector<Weight> C;
    for (const Weight& mu : N->weights())
      if (piece.dim_at(mu) < N->multiplicity(mu)) C.push_back(mu);
    ExtremeSets s;
    for (const Weight& mu : C) {
      bool maximal = true, minimal = true;
      for (const Weight& o : C) {
        if (d.dominance_lt(mu, o)) maximal = false;
        if (d.dominance_lt(o, mu)) minimal = false;
      }
      if (maximal) s.minus.push_back(mu);
      if (minimal) s.plus.push_back(mu);
    }
    return s;
  }

  ExtremeSets D_pm(const GradedIdeal& ideal, const Weight& nu) const { return extreme_sets(ideal.piece(nu), nu); }

  // Reads (y_-, y_+) off D^-(rho) = {y_- rho}, D^+(rho) = {y_+ rho}.
  StratumResult stratum_of(const GradedIdeal& ideal) const {
    const WeylGroup& W = weyl();
    const Weight rho = datum().rho();
    StratumResult r;
    r.sets = D_pm(ideal, rho);
    if (r.sets.minus.size() != 1 || r.sets.plus.size() != 1) {
      r.note = "extreme sets at rho are not singletons";
      return r;
    }
    std::optional<WeylElem> ym, yp;
    for (WeylElem w : W.elements()) {
      if (W.act(w, rho) == r.sets.minus[0]) ym = w;
      if (W.act(w, rho) == r.sets.plus[0]) yp = w;
    }
    if (!ym || !yp) {
      r.note = "extreme weights at rho are not extremal weights of V(rho)";
      return r;
    }
    if (!W.bruhat_leq(*ym, *yp)) {
      r.note = "extreme weights give a pair outside the Bruhat diamond";
      return r;
    }
    r.pair = StratPair{*ym, *yp};
    return r;
  }

  GradedIdeal ideal_Q(WeylElem y, Sign sign) const {
    const std::string name = std::string("Q(") + weyl().word_str(y) + ")" + (sign == Sign::plus ? "+" : "-");
    return GradedIdeal(name, [this, y, sign](const Weight& l) { return q_piece(y, sign, l); });
  }
  GradedIdeal ideal_Qtilde(WeylElem y, WeylElem z) const {
    return GradedIdeal("Qtilde(" + weyl().word_str(y) + "; " + weyl().word_str(z) + ")",
                       [this, y, z](const Weight& l) { return qtilde_piece(y, z, l); });
  }
  GradedIdeal ideal_Qsat(WeylElem y, WeylElem z, int bound) const {
    return GradedIdeal("Qsat(" + weyl().word_str(y) + "; " + weyl().word_str(z) + ")",
                       [this, y, z, bound](const Weight& l) { return saturate(y, z, l, bound).piece; });
  }
  static GradedIdeal zero_ideal() {
    return GradedIdeal("0", [](const Weight&) { return GradedSubspace{}; });
  }

 private:
  const RepContext* ctx_;
  mutable std::mutex mu_;
  mutable std::map<std::tuple<Weight, int, bool>, GradedSubspace> demazure_;
};

}  // namespace qbruhat
