#pragma once

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "qbruhat/cartan.hpp"
#include "qbruhat/weyl.hpp"

namespace qbruhat {

// Finitely supported element of Z[P].  Coefficients are exact for weights of
// root-coordinate depth <= window; window < 0 means the character is exact everywhere.
class FormalCharacter {
 public:
  FormalCharacter() = default;
  explicit FormalCharacter(int window) : window_(window) {}

  static FormalCharacter monomial(const Weight& mu) {
    FormalCharacter c;
    c.terms_[mu] = 1;
    return c;
  }

  int window() const { return window_; }
  const std::map<Weight, long long>& terms() const { return terms_; }
  long long operator[](const Weight& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? 0 : it->second;
  }
  void add(const Weight& mu, long long c) {
    if (c == 0) return;
    long long& slot = terms_[mu];
    slot += c;
    if (slot == 0) terms_.erase(mu);
  }
  long long mass() const {
    long long s = 0;
    for (const auto& [mu, c] : terms_) s += c;
    return s;
  }
  bool nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second >= 0; });
  }
  // Coefficientwise a <= b.
  bool leq(const FormalCharacter& o) const {
    for (const auto& [mu, c] : terms_)
      if (c > o[mu]) return false;
    for (const auto& [mu, c] : o.terms_)
      if ((*this)[mu] > c) return false;
    return true;
  }

  friend FormalCharacter operator+(const FormalCharacter& a, const FormalCharacter& b) {
    FormalCharacter r(combine_window(a.window_, b.window_));
    for (const auto& [mu, c] : a.terms_) r.add(mu, c);
    for (const auto& [mu, c] : b.terms_) r.add(mu, c);
    return r;
  }
  friend FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b) {
    FormalCharacter r(combine_window(a.window_, b.window_));
    for (const auto& [mu, c] : a.terms_)
      for (const auto& [nu, d] : b.terms_) r.add(mu + nu, c * d);
    return r;
  }
  friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
    return a.window_ == b.window_ && a.terms_ == b.terms_;
  }

 private:
  static int combine_window(int a, int b) {
    if (a < 0) return b;
    if (b < 0) return a;
    return std::min(a, b);
  }

  int window_ = -1;
  std::map<Weight, long long> terms_;
};

// ch S^w = prod over beta in w Delta^- of (1 - e^beta)^-1, truncated to depth <= N.
inline FormalCharacter char_Sw(const WeylGroup& W, WeylElem w, int N) {
  if (N < 0) throw std::invalid_argument("truncation depth must be nonnegative");
  const auto& d = W.datum();
  const int n = d.rank();
  const Weight wrho = W.act(w, d.rho());
  std::vector<Weight> gens;
  std::vector<int> height;  // -(w rho, beta) >= 1 on w Delta^-
  for (const auto& beta : d.positive_roots()) {
    Weight g = -W.act(w, d.from_root_coords(beta));
    gens.push_back(g);
    height.push_back(-d.inner_int(wrho, g));
  }
  int slope = 0;
  for (int i = 0; i < n; ++i) slope = std::max(slope, std::abs(d.inner_int(wrho, d.simple_root(i))));
  const int budget = N * slope;
  FormalCharacter out(N);
  std::function<void(std::size_t, const Weight&, int)> rec = [&](std::size_t k, const Weight& acc, int used) {
    if (k == gens.size()) {
      if (d.depth(acc) <= N) out.add(acc, 1);
      return;
    }
    Weight cur = acc;
    for (int m = 0; used + m * height[k] <= budget; ++m) {
      rec(k + 1, cur, used + m * height[k]);
      cur += gens[k];
    }
  };
  rec(0, Weight::zero(n), 0);
  return out;
}

// Isobaric Demazure operator D_i f = (f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i}).
inline FormalCharacter demazure_operator(const CartanDatum& d, int i, const FormalCharacter& f) {
  FormalCharacter r(f.window());
  const Weight a = d.simple_root(i);
  for (const auto& [mu, c] : f.terms()) {
    const int m = mu[i];
    if (m >= 0) {
      Weight x = mu;
      for (int k = 0; k <= m; ++k, x -= a) r.add(x, c);
    } else if (m <= -2) {
      Weight x = mu + a;
      for (int k = 1; k <= -m - 1; ++k, x += a) r.add(x, -c);
    }
  }
  return r;
}

inline FormalCharacter demazure_character(const WeylGroup& W, const std::vector<int>& word, const Weight& lambda) {
  if (!lambda.is_dominant()) throw std::invalid_argument("Demazure character needs a dominant weight");
  FormalCharacter f = FormalCharacter::monomial(lambda);
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = demazure_operator(W.datum(), *it, f);
  return f;
}

// Character of V_y^+(lambda) = U(b^+) u_{y lambda}.
inline FormalCharacter demazure_character(const WeylGroup& W, WeylElem y, const Weight& lambda) {
  return demazure_character(W, W.word(y), lambda);
}

// Weyl dimension formula.
inline long long weyl_dim(const CartanDatum& d, const Weight& lambda) {
  if (!lambda.is_dominant()) throw std::invalid_argument("weyl_dim needs a dominant weight");
  Rational r = 1;
  const Weight lr = lambda + d.rho();
  for (const auto& beta : d.positive_roots()) {
    const Weight b = d.from_root_coords(beta);
    r *= d.inner(lr, b) / d.inner(d.rho(), b);
  }
  return CartanDatum::to_int(r);
}

}  // namespace qbruhat
