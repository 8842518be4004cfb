#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qbruhat/linalg.hpp"
#include "qbruhat/scalar.hpp"

namespace qbruhat {

// Integral weight in fundamental-weight coordinates.
struct Weight {
  std::vector<int> c;

  Weight() = default;
  explicit Weight(std::vector<int> coords) : c(std::move(coords)) {}
  Weight(std::initializer_list<int> coords) : c(coords) {}
  static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }

  int rank() const { return static_cast<int>(c.size()); }
  int operator[](int i) const { return c[i]; }
  int& operator[](int i) { return c[i]; }

  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
  }
  bool is_dominant() const {
    return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
  }
  bool is_regular_dominant() const {
    return std::all_of(c.begin(), c.end(), [](int x) { return x > 0; });
  }

  Weight operator-() const {
    Weight r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  Weight& operator+=(const Weight& o) {
    check(o);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check(o);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) {
    for (auto& x : a.c) x *= k;
    return a;
  }

  friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
  friend bool operator!=(const Weight& a, const Weight& b) { return a.c != b.c; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c[i]);
    }
    return s;
  }

 private:
  void check(const Weight& o) const {
    if (o.c.size() != c.size()) throw std::invalid_argument("weight rank mismatch");
  }
};

using IntMatrix = std::vector<std::vector<int>>;

class CartanDatum {
 public:
  CartanDatum(std::string label, IntMatrix a, std::vector<int> d, std::vector<int> component_of)
      : label_(std::move(label)), a_(std::move(a)), d_(std::move(d)), component_(std::move(component_of)) {
    const int n = rank();
    Matrix<Rational> am(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) am(i, j) = a_[i][j];
    auto inv = inverse(am);
    if (!inv) throw std::invalid_argument("singular Cartan matrix");
    ainv_ = *inv;
    validate();
    build_roots();
  }

  const std::string& label() const { return label_; }
  int rank() const { return static_cast<int>(a_.size()); }
  const IntMatrix& cartan_matrix() const { return a_; }
  int a(int i, int j) const { return a_[i][j]; }
  int d(int i) const { return d_[i]; }
  const std::vector<int>& symmetrizers() const { return d_; }
  bool is_simple() const {
    return std::all_of(component_.begin(), component_.end(), [](int c) { return c == 0; });
  }

  // Positive roots in root coordinates, sorted by height then lexicographically.
  const std::vector<std::vector<int>>& positive_roots() const { return pos_roots_; }

  Weight fundamental(int i) const {
    Weight w = Weight::zero(rank());
    w[i] = 1;
    return w;
  }
  Weight rho() const { return Weight(std::vector<int>(rank(), 1)); }
  Weight simple_root(int j) const {
    Weight w = Weight::zero(rank());
    for (int i = 0; i < rank(); ++i) w[i] = a_[i][j];
    return w;
  }
  Weight from_root_coords(const std::vector<int>& n) const {
    Weight w = Weight::zero(rank());
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) w[i] += a_[i][j] * n[j];
    return w;
  }
  std::vector<Rational> root_coords(const Weight& mu) const {
    std::vector<Rational> n(rank(), Rational(0));
    for (int j = 0; j < rank(); ++j)
      for (int i = 0; i < rank(); ++i) n[j] += ainv_(j, i) * mu[i];
    return n;
  }
  // Root coordinates when mu lies in the root lattice.
  std::optional<std::vector<int>> integral_root_coords(const Weight& mu) const {
    std::vector<int> out(rank());
    auto n = root_coords(mu);
    for (int j = 0; j < rank(); ++j) {
      if (n[j].get_den() != 1) return std::nullopt;
      out[j] = static_cast<int>(n[j].get_num().get_si());
    }
    return out;
  }
  bool in_root_lattice(const Weight& mu) const { return integral_root_coords(mu).has_value(); }

  Rational inner(const Weight& mu, const Weight& nu) const {
    auto n = root_coords(mu);
    Rational s = 0;
    for (int j = 0; j < rank(); ++j) s += n[j] * d_[j] * nu[j];
    return s;
  }
  // Integer value of the form; throws if the value is fractional.
  int inner_int(const Weight& mu, const Weight& nu) const { return to_int(inner(mu, nu)); }

  // mu <= nu iff nu - mu in Q^+.
  bool dominance_leq(const Weight& mu, const Weight& nu) const {
    auto n = integral_root_coords(nu - mu);
    return n && std::all_of(n->begin(), n->end(), [](int x) { return x >= 0; });
  }
  bool dominance_lt(const Weight& mu, const Weight& nu) const { return mu != nu && dominance_leq(mu, nu); }

  // Sum of absolute root coordinates (requires mu in Q).
  int depth(const Weight& mu) const {
    auto n = integral_root_coords(mu);
    if (!n) throw std::invalid_argument("depth of a weight outside the root lattice");
    int s = 0;
    for (int x : *n) s += std::abs(x);
    return s;
  }

  Weight reflect(int i, const Weight& mu) const {
    Weight r = mu;
    for (int k = 0; k < rank(); ++k) r[k] -= mu[i] * a_[k][i];
    return r;
  }

  static int to_int(const Rational& r) {
    if (r.get_den() != 1) throw std::logic_error("expected an integer, got " + r.get_str());
    return static_cast<int>(r.get_num().get_si());
  }

 private:
  void validate() const {
    const int n = rank();
    for (int i = 0; i < n; ++i) {
      if (a_[i][i] != 2) throw std::invalid_argument("Cartan diagonal must be 2");
      if (d_[i] <= 0) throw std::invalid_argument("symmetrizers must be positive");
      for (int j = 0; j < n; ++j) {
        if (i != j && a_[i][j] > 0) throw std::invalid_argument("positive off-diagonal entry");
        if (d_[i] * a_[i][j] != d_[j] * a_[j][i]) throw std::invalid_argument("not symmetrizable by d");
      }
    }
  }

  void build_roots() {
    const int n = rank();
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = 1;
      seen.insert(e);
      frontier.push_back(e);
    }
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& beta : frontier)
        for (int j = 0; j < n; ++j) {
          int pairing = 0;  // <beta, alpha_j^vee>
          for (int i = 0; i < n; ++i) pairing += beta[i] * a_[j][i];
          std::vector<int> r = beta;
          r[j] -= pairing;
          if (std::any_of(r.begin(), r.end(), [](int x) { return x < 0; })) continue;
          if (seen.insert(r).second) next.push_back(r);
        }
      frontier = std::move(next);
    }
    pos_roots_.assign(seen.begin(), seen.end());
    std::stable_sort(pos_roots_.begin(), pos_roots_.end(), [](const auto& x, const auto& y) {
      return std::accumulate(x.begin(), x.end(), 0) < std::accumulate(y.begin(), y.end(), 0);
    });
  }

  std::string label_;
  IntMatrix a_;
  std::vector<int> d_;
  std::vector<int> component_;
  Matrix<Rational> ainv_;
  std::vector<std::vector<int>> pos_roots_;
};

namespace detail {

struct Block {
  IntMatrix a;
  std::vector<int> d;
};

inline Block chain(int n) {
  Block b{IntMatrix(n, std::vector<int>(n, 0)), std::vector<int>(n, 1)};
  for (int i = 0; i < n; ++i) {
    b.a[i][i] = 2;
    if (i + 1 < n) b.a[i][i + 1] = b.a[i + 1][i] = -1;
  }
  return b;
}

inline void bond(Block& b, int i, int j) { b.a[i][j] = b.a[j][i] = -1; }

inline Block simple_block(char series, int n) {
  switch (series) {
    case 'A':
      if (n < 1) break;
      return chain(n);
    case 'B': {
      if (n < 2) break;
      Block b = chain(n);
      b.a[n - 1][n - 2] = -2;
      for (int i = 0; i < n - 1; ++i) b.d[i] = 2;
      return b;
    }
    case 'C': {
      if (n < 2) break;
      Block b = chain(n);
      b.a[n - 2][n - 1] = -2;
      b.d[n - 1] = 2;
      return b;
    }
    case 'D': {
      if (n < 3) break;
      Block b = chain(n);
      b.a[n - 2][n - 1] = b.a[n - 1][n - 2] = 0;
      bond(b, n - 3, n - 1);
      return b;
    }
    case 'E': {
      if (n < 6 || n > 8) break;
      Block b{IntMatrix(n, std::vector<int>(n, 0)), std::vector<int>(n, 1)};
      for (int i = 0; i < n; ++i) b.a[i][i] = 2;
      bond(b, 0, 2);
      bond(b, 1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(b, i, i + 1);
      return b;
    }
    case 'F': {
      if (n != 4) break;
      Block b = chain(4);
      b.a[2][1] = -2;
      b.d = {2, 2, 1, 1};
      return b;
    }
    case 'G': {
      if (n != 2) break;
      return Block{{{2, -3}, {-1, 2}}, {1, 3}};
    }
    default:
      break;
  }
  throw std::invalid_argument(std::string("unsupported Cartan type ") + series + std::to_string(n));
}

}  // namespace detail

// Labels like "A2", "B3", "G2", or products "A1xA1".
inline CartanDatum build_cartan(std::string_view label) {
  std::vector<detail::Block> blocks;
  std::string canon;
  std::size_t pos = 0;
  while (pos < label.size()) {
    std::size_t end = label.find_first_of("xX", pos);
    if (end == std::string_view::npos) end = label.size();
    std::string_view part = label.substr(pos, end - pos);
    if (part.size() < 2 || !std::isalpha(static_cast<unsigned char>(part[0])))
      throw std::invalid_argument("unknown Cartan type label '" + std::string(label) + "'");
    const char series = static_cast<char>(std::toupper(static_cast<unsigned char>(part[0])));
    int n = 0;
    for (char ch : part.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("unknown Cartan type label '" + std::string(label) + "'");
      n = n * 10 + (ch - '0');
      if (n > 16) throw std::invalid_argument("rank too large in '" + std::string(label) + "'");
    }
    blocks.push_back(detail::simple_block(series, n));
    if (!canon.empty()) canon += "x";
    canon += series + std::to_string(n);
    pos = end + 1;
    if (end == label.size()) break;
  }
  if (blocks.empty()) throw std::invalid_argument("empty Cartan type label");
  int total = 0;
  for (const auto& b : blocks) total += static_cast<int>(b.d.size());
  IntMatrix a(total, std::vector<int>(total, 0));
  std::vector<int> d, comp;
  int off = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const int n = static_cast<int>(blocks[k].d.size());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[off + i][off + j] = blocks[k].a[i][j];
      d.push_back(blocks[k].d[i]);
      comp.push_back(static_cast<int>(k));
    }
    off += n;
  }
  return CartanDatum(canon, std::move(a), std::move(d), std::move(comp));
}

// Parse "1,0" or "1 0" into a weight of the given rank.
inline Weight parse_weight(std::string_view s, int rank) {
  std::vector<int> c;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    std::size_t used = 0;
    int v = std::stoi(cur, &used);
    if (used != cur.size()) throw std::invalid_argument("bad weight coordinate '" + cur + "'");
    c.push_back(v);
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)))
      flush();
    else
      cur += ch;
  }
  flush();
  if (static_cast<int>(c.size()) != rank)
    throw std::invalid_argument("weight '" + std::string(s) + "' needs " + std::to_string(rank) + " coordinates");
  return Weight(std::move(c));
}

}  // namespace qbruhat
