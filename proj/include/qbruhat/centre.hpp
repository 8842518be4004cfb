#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "qbruhat/weyl.hpp"

namespace qbruhat {

// Index sets attached to the centre of the zero-weight ring at w.  Indices are 0-based;
// generator labels use 1-based subscripts.
struct CentreData {
  WeylElem w;
  std::vector<int> theta;
  std::vector<int> frakI;      // theta(i) = i
  std::vector<int> frakIbar;   // theta(i) > i
  std::vector<int> Iw_minus;   // i in frakI, w omega_i = omega_i
  std::vector<int> Ibarw_minus;
  std::vector<int> Iw_plus;    // i in frakI, w omega_i = w0 omega_i
  std::vector<int> Ibarw_plus;
  std::vector<std::string> generators;
  int dim = 0;
};

inline CentreData centre_of(const WeylGroup& W, WeylElem w) {
  const CartanDatum& d = W.datum();
  CentreData c;
  c.w = w;
  c.theta = W.theta();
  auto fixes = [&](int i) { return W.act(w, d.fundamental(i)) == d.fundamental(i); };
  auto lowers = [&](int i) { return W.act(w, d.fundamental(i)) == W.act(W.longest(), d.fundamental(i)); };
  for (int i = 0; i < W.rank(); ++i) {
    const int t = c.theta[i];
    if (t == i) {
      c.frakI.push_back(i);
      if (fixes(i)) c.Iw_minus.push_back(i);
      if (lowers(i)) c.Iw_plus.push_back(i);
    } else if (t > i) {
      c.frakIbar.push_back(i);
      if (fixes(i) && fixes(t)) c.Ibarw_minus.push_back(i);
      if (lowers(i) && lowers(t)) c.Ibarw_plus.push_back(i);
    }
  }
  auto label = [](const char* stem, int i, bool inverse) {
    return std::string(stem) + "_" + std::to_string(i + 1) + (inverse ? "^-1" : "");
  };
  for (int i : c.Iw_minus) c.generators.push_back(label("z", i, false));
  for (int i : c.Ibarw_minus) c.generators.push_back(label("zt", i, false));
  for (int i : c.Iw_plus) c.generators.push_back(label("z", i, true));
  for (int i : c.Ibarw_plus) c.generators.push_back(label("zt", i, true));
  c.dim = static_cast<int>(c.Iw_minus.size() + c.Ibarw_minus.size() + c.Iw_plus.size() + c.Ibarw_plus.size());
  return c;
}

// A monomial factor (c^kappa_xi)^power with right weight xi.
struct CentreFactor {
  int power;
  Weight kappa;
  Weight xi;
};

// X Y = q^e Y X for X = c^kappa_xi and Y = c^nu_e or c^nu_{w0}, read off the exact relations
//   c^lambda_mu c^nu_e    = q^{(nu, mu - lambda)} c^nu_e c^lambda_mu
//   c^lambda_mu c^nu_{w0} = q^{-(w0 nu, mu - w0 lambda)} c^nu_{w0} c^lambda_mu
// and extended to inverses by negating.
inline Rational extreme_swap_exponent(const WeylGroup& W, const CentreFactor& x, const CentreFactor& y) {
  const CartanDatum& d = W.datum();
  const WeylElem w0 = W.longest();
  Rational e;
  if (y.xi == y.kappa) {
    e = d.inner(y.kappa, x.xi - x.kappa);
  } else if (y.xi == W.act(w0, y.kappa)) {
    e = -d.inner(W.act(w0, y.kappa), x.xi - W.act(w0, x.kappa));
  } else {
    throw std::invalid_argument("second factor must be c_e or c_w0");
  }
  return e * x.power * y.power;
}

// Net q-exponent E in a z_nu = q^E z_nu a for z_nu = c_e^{-nu} c^nu_{w0} and a = c_e^{-lambda} c^lambda_mu.
inline int centrality_exponent(const WeylGroup& W, const Weight& nu, const Weight& lambda, const Weight& mu) {
  if (W.act(W.longest(), nu) != -nu) throw std::invalid_argument("centrality_exponent: w0 nu != -nu");
  if (!lambda.is_dominant()) throw std::invalid_argument("centrality_exponent: lambda is not dominant");
  // nu = np - nm with np, nm dominant, so every factor of z_nu is a genuine c_e or c_w0.
  Weight np = Weight::zero(W.rank()), nm = Weight::zero(W.rank());
  for (int i = 0; i < W.rank(); ++i) (nu[i] > 0 ? np[i] : nm[i]) = std::abs(nu[i]);
  const WeylElem w0 = W.longest();
  const std::vector<CentreFactor> z = {
      {-1, np, np}, {1, nm, nm}, {1, np, W.act(w0, np)}, {-1, nm, W.act(w0, nm)}};
  const std::vector<CentreFactor> a = {{-1, lambda, lambda}, {1, lambda, mu}};
  Rational total;
  for (const auto& x : a)
    for (const auto& y : z) total += extreme_swap_exponent(W, x, y);
  return CartanDatum::to_int(total);
}

struct NonisomorphismReport {
  std::string type;
  bool simple = true;
  std::vector<std::pair<WeylElem, int>> table;
  bool passed = true;
  std::string note;
};

inline NonisomorphismReport nonisomorphism_scan(const WeylGroup& W) {
  NonisomorphismReport r;
  r.type = W.datum().label();
  r.simple = W.datum().is_simple();
  for (WeylElem w : W.elements()) r.table.emplace_back(w, centre_of(W, w).dim);
  const int top = centre_of(W, W.identity()).dim;
  if (centre_of(W, W.longest()).dim != top) {
    r.passed = false;
    r.note = "dim Z at w0 differs from dim Z at e";
  }
  if (!r.simple) {
    r.note = r.note.empty() ? "not simple: strict inequality not checked" : r.note;
    return r;
  }
  for (const auto& [w, dim] : r.table) {
    if (w == W.identity() || w == W.longest()) continue;
    if (dim >= top) {
      r.passed = false;
      r.note = "dim Z at " + W.word_str(w) + " is not below dim Z at e";
    }
  }
  return r;
}

}  // namespace qbruhat
