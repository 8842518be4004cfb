#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qbruhat {

using Rational = mpq_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline std::size_t hash_value(const Rational& r) {
  return std::hash<std::string>{}(r.get_str());
}

namespace detail {

// Dense polynomials in q with rational coefficients, index = exponent.
using Poly = std::vector<Rational>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

// Quotient and remainder of a by b (b nonzero).
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  const int db = degree(b);
  if (degree(a) < db) return {Poly{}, a};
  Poly quot(a.size() - b.size() + 1);
  const Rational& lead = b.back();
  for (int k = degree(a); k >= db; --k) {
    if (a[k] == 0) continue;
    Rational f = a[k] / lead;
    quot[k - db] = f;
    for (int j = 0; j <= db; ++j) a[k - db + j] -= f * b[j];
  }
  trim(a);
  trim(quot);
  return {quot, a};
}

inline Poly monic_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace detail

// Laurent polynomial in q with rational coefficients.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c) : Laurent(Rational(c)) {}  // NOLINT
  Laurent(const Rational& c) {              // NOLINT
    if (c != 0) c_.push_back(c);
  }

  static Laurent monomial(const Rational& c, int exp) {
    Laurent r(c);
    if (!r.is_zero()) r.low_ = exp;
    return r;
  }
  static Laurent q_power(int exp) { return monomial(1, exp); }
  static Laurent from_coeffs(int low, std::vector<Rational> coeffs) {
    Laurent r;
    r.low_ = low;
    r.c_ = std::move(coeffs);
    r.normalize();
    return r;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && low_ == 0 && c_[0] == 1; }
  bool is_monomial() const { return c_.size() == 1; }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational coeff(int exp) const {
    if (exp < low_ || exp > high()) return 0;
    return c_[exp - low_];
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Laurent& operator+=(const Laurent& o) { return add(o, 1); }
  Laurent& operator-=(const Laurent& o) { return add(o, -1); }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Laurent r;
    r.low_ = a.low_ + b.low_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent shifted(int k) const {
    Laurent r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
  }

  Laurent scaled(const Rational& s) const {
    if (s == 0) return {};
    Laurent r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
  }

  // Substitute q -> q^k (k may be negative).
  Laurent substitute_power(int k) const {
    if (k == 0) {
      Rational s = 0;
      for (const auto& c : c_) s += c;
      return Laurent(s);
    }
    Laurent r;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) r += monomial(c_[i], (low_ + static_cast<int>(i)) * k);
    return r;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  // Ascending exponents: "q^-1 + 2 + q", "-3*q^2", "1/2*q".
  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      Rational c = c_[i];
      if (c == 0) continue;
      const int e = low_ + static_cast<int>(i);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      Rational a = abs(c);
      if (e == 0) {
        os << a.get_str();
        continue;
      }
      if (a != 1) os << a.get_str() << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }

 private:
  friend class RatFunc;

  Laurent& add(const Laurent& o, int sign) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = sign > 0 ? o : -o;
      return *this;
    }
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(high(), o.high());
    if (lo < low_ || hi > high()) {
      std::vector<Rational> n(hi - lo + 1, Rational(0));
      for (std::size_t i = 0; i < c_.size(); ++i) n[low_ - lo + i] = c_[i];
      c_ = std::move(n);
      low_ = lo;
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      if (sign > 0)
        c_[o.low_ - low_ + i] += o.c_[i];
      else
        c_[o.low_ - low_ + i] -= o.c_[i];
    }
    normalize();
    return *this;
  }

  void normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      low_ = 0;
      return;
    }
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
      low_ += static_cast<int>(lead);
    }
    while (c_.back() == 0) c_.pop_back();
  }

  int low_ = 0;
  std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Laurent& l) { return os << l.str(); }

// Element of Q(q): num/den with den a polynomial (nonnegative exponents),
// nonzero constant term, monic, coprime to num.  Canonical, so == compares data.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(long c) : num_(c) {}                     // NOLINT
  RatFunc(const Rational& c) : num_(c) {}          // NOLINT
  RatFunc(Laurent n) : num_(std::move(n)) {}       // NOLINT
  RatFunc(Laurent n, Laurent d) { assign(std::move(n), std::move(d)); }

  static RatFunc q_power(int e) { return RatFunc(Laurent::q_power(e)); }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_);
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero in Q(q)");
    if (a.is_zero()) return {};
    if (b.den_.is_one() && b.num_.is_monomial() && a.den_.is_one()) {
      return RatFunc(a.num_.shifted(-b.num_.low()).scaled(1 / b.num_.coeffs()[0]));
    }
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void assign(Laurent n, Laurent d) {
    if (d.is_zero()) throw std::domain_error("zero denominator in Q(q)");
    if (n.is_zero()) {
      num_ = Laurent();
      den_ = Laurent(1);
      return;
    }
    n = n.shifted(-d.low_);
    d = d.shifted(-d.low_);
    if (d.c_.size() == 1) {
      const Rational inv = 1 / d.c_[0];
      for (auto& c : n.c_) c *= inv;
      num_ = std::move(n);
      den_ = Laurent(1);
      return;
    }
    detail::Poly g = detail::monic_gcd(n.c_, d.c_);
    if (g.size() > 1) {
      n.c_ = detail::divmod(n.c_, g).first;
      d.c_ = detail::divmod(d.c_, g).first;
    }
    const Rational inv = 1 / d.c_.back();
    for (auto& c : n.c_) c *= inv;
    for (auto& c : d.c_) c *= inv;
    n.normalize();
    d.normalize();
    num_ = std::move(n);
    den_ = std::move(d);
  }

  Laurent num_;
  Laurent den_ = Laurent(1);
};

inline std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.str(); }

inline std::string to_string(const Laurent& l) { return l.str(); }
inline std::string to_string(const RatFunc& r) { return r.str(); }

// [n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d}); negative n gives -[-n].
inline Laurent q_int(int n, int d = 1) {
  if (n < 0) return -q_int(-n, d);
  Laurent r;
  for (int k = 0; k < n; ++k) r += Laurent::q_power(d * (n - 1 - 2 * k));
  return r;
}

inline Laurent q_factorial(int n, int d = 1) {
  Laurent r(1);
  for (int k = 2; k <= n; ++k) r *= q_int(k, d);
  return r;
}

inline Laurent q_binomial(int n, int k, int d = 1) {
  if (k < 0 || k > n) return {};
  RatFunc r = RatFunc(q_factorial(n, d)) / RatFunc(q_factorial(k, d) * q_factorial(n - k, d));
  if (!r.is_laurent()) throw std::logic_error("q-binomial is not Laurent");
  return r.num();
}

// Field traits used by the linear algebra templates.
template <class F>
inline bool is_zero(const F& x) {
  return x == 0;
}
template <>
inline bool is_zero<RatFunc>(const RatFunc& x) {
  return x.is_zero();
}

}  // namespace qbruhat
