#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qbruhat/centre.hpp"
#include "qbruhat/charring.hpp"
#include "qbruhat/errors.hpp"
#include "qbruhat/rplus.hpp"
#include "qbruhat/strata.hpp"

namespace qbruhat {

struct CheckResult {
  std::string name;
  std::string anchor;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

namespace detail {

class Recorder {
 public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

  // Runs one check; exceptions count as failures and are reported in the detail.
  void check(const std::string& name, const std::string& anchor, const std::function<bool(std::string&)>& body) {
    CheckResult r{name, anchor, false, ""};
    try {
      r.passed = body(r.detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    report_.checks.push_back(std::move(r));
  }
  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

inline std::vector<Weight> box2(int hi) {
  std::vector<Weight> out;
  for (int a = 0; a <= hi; ++a)
    for (int b = 0; b <= hi; ++b) out.push_back(Weight{a, b});
  return out;
}

inline std::vector<Weight> support_of(const GradedSubspace& s) {
  std::vector<Weight> out;
  for (const auto& [w, sub] : s.parts)
    if (sub.dim() > 0) out.push_back(w);
  return out;
}

inline SuiteReport suite_example_sl3() {
  Recorder rec("example-sl3");
  RepContext ctx("A2");
  RPlus R(ctx);
  const WeylGroup& W = ctx.weyl();
  const CartanDatum& d = ctx.datum();
  const WeylElem sa = W.parse("s1"), sb = W.parse("s2"), sab = W.parse("s1 s2");
  const Weight oa{1, 0}, ob{0, 1}, rho{1, 1}, zero{0, 0};
  const Weight a = d.simple_root(0), b = d.simple_root(1);
  auto sorted = [](std::vector<Weight> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  rec.check("Q(s_a)^- pieces", "sl3 example: Q(s_alpha)^- diagram", [&](std::string& why) {
    const GradedSubspace p1 = R.q_piece(sa, Sign::minus, oa), p2 = R.q_piece(sa, Sign::minus, ob),
                         p3 = R.q_piece(sa, Sign::minus, rho);
    why = "dims " + std::to_string(p1.dim()) + "," + std::to_string(p2.dim()) + "," + std::to_string(p3.dim());
    return p1.dim() == 1 && p2.dim() == 0 && p3.dim() == 3 && support_of(p1) == std::vector<Weight>{oa} &&
           support_of(p3) == sorted({zero, a, a + b});
  });
  rec.check("Q(s_a s_b)^+ pieces", "sl3 example: Q(s_alpha s_beta)^+ diagram", [&](std::string& why) {
    const GradedSubspace p1 = R.q_piece(sab, Sign::plus, oa), p2 = R.q_piece(sab, Sign::plus, ob),
                         p3 = R.q_piece(sab, Sign::plus, rho);
    why = "dims " + std::to_string(p1.dim()) + "," + std::to_string(p2.dim()) + "," + std::to_string(p3.dim());
    return p1.dim() == 1 && p2.dim() == 0 && p3.dim() == 3 &&
           support_of(p1) == std::vector<Weight>{W.act(W.longest(), oa)} &&
           support_of(p3) == sorted({zero, -b, -(a + b)});
  });
  rec.check("product in Qtilde", "sl3 example: c_{s_alpha} c_{s_beta} in K c_1 + K c_2", [&](std::string&) {
    const MatrixCoeff prod = R.multiply(R.extreme(oa, sa), R.extreme(ob, sb));
    auto V = R.V(rho);
    return graded_contains(*V, R.qtilde_piece(sa, sab, rho), prod.xi) &&
           !graded_contains(*V, R.q_piece(sa, Sign::minus, rho), prod.xi) &&
           !graded_contains(*V, R.q_piece(sab, Sign::plus, rho), prod.xi);
  });
  rec.check("saturation adds c_{s_b}", "sl3 example: c^{omega_beta}_{s_beta} in Q(s_alpha, s_alpha s_beta)",
            [&](std::string& why) {
              const MatrixCoeff cb = R.extreme(ob, sb);
              auto V = R.V(ob);
              const SaturationResult sat = R.saturate(sa, sab, ob, 3);
              why = "stabilized=" + std::to_string(sat.stabilized);
              return !graded_contains(*V, R.qtilde_piece(sa, sab, ob), cb.xi) &&
                     graded_contains(*V, sat.piece, cb.xi) && sat.stabilized;
            });
  return rec.take();
}

inline SuiteReport suite_commutation(const std::string& label) {
  Recorder rec("commutation-" + label);
  RepContext ctx(label);
  RPlus R(ctx);
  const int n = ctx.datum().rank();
  std::vector<Weight> weights;
  if (n == 1) {
    weights = {Weight{1}, Weight{2}};
  } else {
    weights = {Weight{1, 0}, Weight{0, 1}};
    if (label == "A2") weights.push_back(Weight{1, 1});
  }
  for (const Weight& nu : weights)
    for (const Weight& lambda : weights) {
      const std::string tag = "nu=" + nu.str() + " lambda=" + lambda.str();
      rec.check("q-commutation " + tag, "commutation relations modulo J^+ and J^-", [&](std::string& why) {
        for (const Weight& mu : R.V(nu)->weights())
          for (const Weight& eta : R.V(lambda)->weights())
            if (!R.check_commutation(nu, mu, lambda, eta).ok()) {
              why = "fails at mu=" + mu.str() + " eta=" + eta.str();
              return false;
            }
        return true;
      });
      rec.check("c_e relation " + tag, "exact commutation with c_e", [&](std::string&) {
        return R.exact_relation_ce(lambda, nu);
      });
    }
  return rec.take();
}

// phi_w^{omega_i} on every sufficiently large piece of V^+(lambda), A2, lambda <= 2 rho.
inline SuiteReport suite_eigen_qpowers() {
  Recorder rec("eigen-qpowers");
  RepContext ctx("A2");
  RPlus R(ctx);
  const WeylGroup& W = ctx.weyl();
  for (const Weight& lambda : box2(2)) {
    if (lambda.is_zero()) continue;
    for (WeylElem w : W.elements()) {
      rec.check("w=" + W.word_str(w) + " lambda=" + lambda.str(), "eigenvalues of phi_w are integer powers of q",
                [&](std::string& why) {
                  int pieces = 0;
                  for (const Weight& mu : R.V(lambda)->weights()) {
                    const Weight eta = mu - W.act(w, lambda);
                    if (!R.sufficiently_large(w, eta, lambda)) continue;
                    R.wt_w_decompose(w, eta, lambda);
                    const auto x = R.phi_w(w, Weight{1, 0}, Weight{0, 0}, eta, lambda);
                    const auto y = R.phi_w(w, Weight{0, 1}, Weight{0, 0}, eta, lambda);
                    if (x * y != y * x) {
                      why = "phi matrices do not commute at eta=" + eta.str();
                      return false;
                    }
                    ++pieces;
                  }
                  why = std::to_string(pieces) + " pieces";
                  return true;
                });
    }
  }
  return rec.take();
}

inline SuiteReport suite_wt_split() {
  Recorder rec("wt-split");
  RepContext ctx("A2");
  RPlus R(ctx);
  const WeylGroup& W = ctx.weyl();
  for (const Weight& lambda : box2(2)) {
    if (lambda.is_zero()) continue;
    for (WeylElem w : W.elements()) {
      rec.check("w=" + W.word_str(w) + " lambda=" + lambda.str(),
                "L(w,0) and Q(w)^+ split each piece; wt_w criterion matches orthogonality", [&](std::string& why) {
                  auto V = R.V(lambda);
                  const GradedSubspace qw = R.q_piece(w, Sign::plus, lambda);
                  for (const Weight& mu : V->weights()) {
                    const Weight eta = mu - W.act(w, lambda);
                    if (!R.sufficiently_large(w, eta, lambda)) continue;
                    int zero_dim = 0;
                    for (const EigenPiece& p : R.wt_w_decompose(w, eta, lambda)) {
                      if (p.mu.is_zero()) zero_dim += p.space.dim();
                      for (int k = 0; k < p.space.dim(); ++k)
                        if (qw.contains_local(mu, p.space.vector(k)) == p.mu.is_zero()) {
                          why = "criteria disagree at eta=" + eta.str();
                          return false;
                        }
                    }
                    if (zero_dim + qw.dim_at(mu) != V->multiplicity(mu)) {
                      why = "dimensions do not add up at eta=" + eta.str();
                      return false;
                    }
                  }
                  return true;
                });
    }
  }
  return rec.take();
}

inline SuiteReport suite_strata_a2(int bound) {
  Recorder rec("strata-A2");
  RepContext ctx("A2");
  RPlus R(ctx);
  const WeylGroup& W = ctx.weyl();
  DiamondPoset P(W);
  for (const StratPair& p : P.pairs()) {
    rec.check("(" + W.word_str(p.y) + "; " + W.word_str(p.z) + ")", "D^-(nu) = {y nu}, D^+(nu) = {z nu}",
              [&](std::string& why) {
                for (const Weight& nu : {Weight{1, 0}, Weight{0, 1}, Weight{1, 1}}) {
                  const SaturationResult s = R.saturate(p.y, p.z, nu, bound);
                  if (!s.stabilized) {
                    why = "not stabilized at nu=" + nu.str();
                    return false;
                  }
                  const ExtremeSets e = R.extreme_sets(s.piece, nu);
                  if (e.minus != std::vector<Weight>{W.act(p.y, nu)} || e.plus != std::vector<Weight>{W.act(p.z, nu)}) {
                    why = "extreme sets differ at nu=" + nu.str();
                    return false;
                  }
                }
                return true;
              });
  }
  return rec.take();
}

inline SuiteReport suite_centre() {
  Recorder rec("centre");
  for (const char* label : {"A1", "A2", "A3", "B2", "B3"}) {
    WeylGroup W(build_cartan(label));
    rec.check(std::string("scan ") + label, "centres of different dimension away from e and w0",
              [&](std::string& why) {
                const NonisomorphismReport r = nonisomorphism_scan(W);
                why = r.note;
                return r.passed;
              });
  }
  WeylGroup a2(build_cartan("A2"));
  rec.check("centrality exponent A2", "z_nu commutes with c_e^{-lambda} c^lambda_mu", [&](std::string& why) {
    for (int k = -3; k <= 3; ++k)
      for (const Weight& lambda : box2(3))
        for (int a = -3; a <= 3; ++a)
          for (int b = -3; b <= 3; ++b)
            if (centrality_exponent(a2, Weight{k, k}, lambda, Weight{a, b}) != 0) {
              why = "nonzero exponent";
              return false;
            }
    return true;
  });
  return rec.take();
}

inline SuiteReport suite_ranks() {
  Recorder rec("ranks");
  for (const char* label : {"A2", "B2"}) {
    WeylGroup W(build_cartan(label));
    DiamondPoset P(W);
    rec.check(std::string("stratum ranks ") + label, "rank of the stratum Laurent ring is r(y^-1 z)",
              [&](std::string& why) {
                for (const StratPair& p : P.pairs()) {
                  const WeylElem z = W.multiply(W.inverse(p.y), p.z);
                  if (P.rank(p) != W.fixed_rank(z)) {
                    why = W.word_str(p.y) + "; " + W.word_str(p.z);
                    return false;
                  }
                }
                return true;
              });
  }
  return rec.take();
}

inline SuiteReport suite_demazure() {
  Recorder rec("demazure");
  for (const char* label : {"A1", "A2", "B2"}) {
    RepContext ctx(label);
    const WeylGroup& W = ctx.weyl();
    rec.check(std::string("dimensions and inclusions ") + label, "Demazure modules: character and Bruhat order",
              [&](std::string& why) {
                std::vector<Weight> lambdas;
                if (W.rank() == 1) {
                  for (int a = 0; a <= 2; ++a) lambdas.push_back(Weight{a});
                } else {
                  lambdas = box2(2);
                }
                for (const Weight& lambda : lambdas) {
                  auto V = ctx.module(lambda);
                  std::vector<GradedSubspace> plus;
                  for (WeylElem y : W.elements()) {
                    plus.push_back(demazure_submodule(ctx, *V, y, Sign::plus));
                    if (plus.back().dim() != demazure_character(W, y, lambda).mass()) {
                      why = "dimension at " + W.word_str(y) + " lambda=" + lambda.str();
                      return false;
                    }
                  }
                  if (lambda == ctx.datum().rho())
                    for (WeylElem y : W.elements())
                      for (WeylElem z : W.elements())
                        if (plus[z.id].contains(plus[y.id]) != W.bruhat_leq(y, z)) {
                          why = "inclusion differs from Bruhat order";
                          return false;
                        }
                }
                return true;
              });
  }
  return rec.take();
}

inline SuiteReport suite_characters() {
  Recorder rec("characters");
  for (const char* label : {"A1", "A2", "B2"}) {
    RepContext ctx(label);
    rec.check(std::string("weyl_dim ") + label, "Weyl dimension formula", [&](std::string& why) {
      std::vector<Weight> lambdas;
      if (ctx.datum().rank() == 1) {
        for (int a = 0; a <= 3; ++a) lambdas.push_back(Weight{a});
      } else {
        lambdas = box2(2);
      }
      for (const Weight& lambda : lambdas)
        if (ctx.module(lambda)->dim() != weyl_dim(ctx.datum(), lambda)) {
          why = "lambda=" + lambda.str();
          return false;
        }
      return true;
    });
  }
  return rec.take();
}

}  // namespace detail

struct SuiteInfo {
  std::string name;
  std::string description;
  std::function<SuiteReport()> run;
};

inline std::vector<SuiteInfo> verify_suites() {
  using namespace detail;
  return {
      {"example-sl3", "worked sl3 example: ideal pieces, membership and saturation", suite_example_sl3},
      {"commutation-A1", "commutation relations in the A1 graded model", [] { return suite_commutation("A1"); }},
      {"commutation-A2", "commutation relations in the A2 graded model", [] { return suite_commutation("A2"); }},
      {"commutation-B2", "commutation relations in the B2 graded model", [] { return suite_commutation("B2"); }},
      {"eigen-qpowers", "phi_w eigenvalues are q-powers and the phi_w commute (A2)", suite_eigen_qpowers},
      {"wt-split", "L(w,0) + Q(w)^+ splitting of sufficiently large pieces (A2)", suite_wt_split},
      {"strata-A2", "saturated ideals recover their stratum pairs (A2, bound 3)", [] { return suite_strata_a2(3); }},
      {"centre", "centre dimensions and centrality bookkeeping", suite_centre},
      {"ranks", "stratum ranks equal fixed-space dimensions", suite_ranks},
      {"demazure", "Demazure submodules against characters and Bruhat order", suite_demazure},
      {"characters", "Weyl dimension against constructed modules", suite_characters},
  };
}

inline SuiteReport run_suite(const std::string& name) {
  for (const auto& s : verify_suites())
    if (s.name == name) return s.run();
  throw std::invalid_argument("unknown verify suite '" + name + "'");
}

}  // namespace qbruhat
