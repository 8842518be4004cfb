#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbruhat/cartan.hpp"
#include "qbruhat/linalg.hpp"

namespace qbruhat {

// Handle into a WeylGroup's element table.  Ids are ordered by (length, canonical word).
struct WeylElem {
  int id = 0;
  friend bool operator==(WeylElem a, WeylElem b) { return a.id == b.id; }
  friend bool operator!=(WeylElem a, WeylElem b) { return a.id != b.id; }
  friend bool operator<(WeylElem a, WeylElem b) { return a.id < b.id; }
};

class WeylGroup {
 public:
  explicit WeylGroup(CartanDatum datum, int max_order = 12000) : datum_(std::move(datum)) {
    generate(max_order);
    build_bruhat();
  }

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank(); }
  int order() const { return static_cast<int>(mats_.size()); }

  WeylElem identity() const { return {0}; }
  WeylElem generator(int i) const { return {left_[i][0]}; }
  std::vector<WeylElem> elements() const {
    std::vector<WeylElem> v(order());
    for (int k = 0; k < order(); ++k) v[k] = {k};
    return v;
  }

  const std::vector<int>& matrix(WeylElem w) const { return mats_[w.id]; }
  int length(WeylElem w) const { return len_[w.id]; }
  // Canonical reduced word (0-based generator indices), lexicographically minimal.
  const std::vector<int>& word(WeylElem w) const { return words_[w.id]; }

  WeylElem left_mult(int i, WeylElem w) const { return {left_[i][w.id]}; }
  WeylElem right_mult(WeylElem w, int i) const { return {right_[i][w.id]}; }

  WeylElem multiply(WeylElem x, WeylElem y) const {
    for (int i : words_[y.id]) x = right_mult(x, i);
    return x;
  }
  WeylElem inverse(WeylElem w) const {
    WeylElem r = identity();
    for (int i : words_[w.id]) r = left_mult(i, r);
    return r;
  }
  WeylElem from_word(const std::vector<int>& word) const {
    WeylElem w = identity();
    for (int i : word) {
      if (i < 0 || i >= rank()) throw std::invalid_argument("generator index out of range");
      w = right_mult(w, i);
    }
    return w;
  }

  Weight act(WeylElem w, const Weight& mu) const {
    const int n = rank();
    if (mu.rank() != n) throw std::invalid_argument("weight rank mismatch");
    const auto& m = mats_[w.id];
    Weight r = Weight::zero(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r[i] += m[i * n + j] * mu[j];
    return r;
  }
  std::vector<int> act_root(WeylElem w, const std::vector<int>& beta) const {
    return *datum_.integral_root_coords(act(w, datum_.from_root_coords(beta)));
  }

  int inversion_count(WeylElem w) const {
    int k = 0;
    for (const auto& beta : datum_.positive_roots()) {
      auto img = act_root(w, beta);
      if (std::any_of(img.begin(), img.end(), [](int x) { return x < 0; })) ++k;
    }
    return k;
  }

  WeylElem longest() const { return {order() - 1}; }

  // theta(i) with w0 omega_i = -omega_theta(i).
  std::vector<int> theta() const {
    const int n = rank();
    std::vector<int> t(n, -1);
    for (int i = 0; i < n; ++i) {
      Weight img = act(longest(), datum_.fundamental(i));
      for (int j = 0; j < n; ++j)
        if (img == -datum_.fundamental(j)) t[i] = j;
      if (t[i] < 0) throw std::logic_error("w0 does not map omega_i to -omega_j");
    }
    return t;
  }

  bool bruhat_leq(WeylElem y, WeylElem z) const {
    return (down_[z.id][y.id >> 6] >> (y.id & 63)) & 1U;
  }
  bool bruhat_lt(WeylElem y, WeylElem z) const { return y != z && bruhat_leq(y, z); }

  // max(s_i w, w) for the length function.
  WeylElem star(int i, WeylElem w) const {
    WeylElem s = left_mult(i, w);
    return length(s) > length(w) ? s : w;
  }

  // dim ker(w - 1) over Q.
  int fixed_rank(WeylElem w) const { return fixed_lattice(w).dim(); }
  Subspace<Rational> fixed_lattice(WeylElem w) const {
    const int n = rank();
    Matrix<Rational> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = mats_[w.id][i * n + j] - (i == j ? 1 : 0);
    return kernel(m);
  }
  // (s(z), r(z)) with r = dim ker(z - 1), s = l - r.
  std::pair<int, int> reflection_rank(WeylElem w) const {
    const int r = fixed_rank(w);
    return {rank() - r, r};
  }

  std::vector<WeylElem> reflections() const {
    std::set<int> ids;
    for (WeylElem w : elements())
      for (int i = 0; i < rank(); ++i) ids.insert(multiply(right_mult(w, i), inverse(w)).id);
    std::vector<WeylElem> out;
    for (int id : ids) out.push_back({id});
    return out;
  }

  // Words use 1-based generators: "s1 s2 s1", "1 2 1", "s1s2", "e", "w0".
  WeylElem parse(std::string_view text) const {
    std::vector<int> word;
    std::size_t k = 0;
    auto fail = [&] { throw std::invalid_argument("cannot parse Weyl word '" + std::string(text) + "'"); };
    while (k < text.size()) {
      char ch = text[k];
      if (ch == ' ' || ch == ',' || ch == '*' || ch == '\t') {
        ++k;
        continue;
      }
      if (text.substr(k, 2) == "w0") {
        for (int i : words_[longest().id]) word.push_back(i);
        k += 2;
        continue;
      }
      if (ch == 'e' && (k + 1 == text.size() || !std::isalnum(static_cast<unsigned char>(text[k + 1])))) {
        ++k;
        continue;
      }
      if (ch == 's') {
        ++k;
        if (k < text.size() && text[k] == '_') ++k;
      }
      if (k >= text.size() || !std::isdigit(static_cast<unsigned char>(text[k]))) fail();
      int v = 0;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) v = v * 10 + (text[k++] - '0');
      if (v < 1 || v > rank()) fail();
      word.push_back(v - 1);
    }
    return from_word(word);
  }

  std::string word_str(WeylElem w) const {
    if (words_[w.id].empty()) return "e";
    std::string s;
    for (int i : words_[w.id]) {
      if (!s.empty()) s += " ";
      s += "s" + std::to_string(i + 1);
    }
    return s;
  }

  // All reduced words of w (exponential; small groups only).
  std::vector<std::vector<int>> reduced_words(WeylElem w) const {
    if (length(w) == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int i = 0; i < rank(); ++i) {
      WeylElem v = left_mult(i, w);
      if (length(v) >= length(w)) continue;
      for (auto& tail : reduced_words(v)) {
        std::vector<int> r{i};
        r.insert(r.end(), tail.begin(), tail.end());
        out.push_back(std::move(r));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void generate(int max_order) {
    const int n = rank();
    std::vector<std::vector<int>> gens(n, std::vector<int>(n * n, 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        gens[i][k * n + k] = 1;
        gens[i][k * n + i] -= datum_.a(k, i);
      }
    auto mul = [n](const std::vector<int>& a, const std::vector<int>& b) {
      std::vector<int> c(n * n, 0);
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          if (!a[i * n + k]) continue;
          for (int j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
        }
      return c;
    };
    std::vector<int> id(n * n, 0);
    for (int k = 0; k < n; ++k) id[k * n + k] = 1;

    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> mats{id};
    std::vector<int> len{0};
    index[id] = 0;
    for (std::size_t head = 0; head < mats.size(); ++head)
      for (int i = 0; i < n; ++i) {
        auto m = mul(gens[i], mats[head]);
        if (index.count(m)) continue;
        if (static_cast<int>(mats.size()) >= max_order)
          throw std::invalid_argument("Weyl group of " + datum_.label() + " exceeds the materialization cap");
        index[m] = static_cast<int>(mats.size());
        mats.push_back(std::move(m));
        len.push_back(len[head] + 1);
      }
    const int N = static_cast<int>(mats.size());
    std::vector<std::vector<int>> left(n, std::vector<int>(N)), right(n, std::vector<int>(N));
    for (int k = 0; k < N; ++k)
      for (int i = 0; i < n; ++i) {
        left[i][k] = index.at(mul(gens[i], mats[k]));
        right[i][k] = index.at(mul(mats[k], gens[i]));
      }
    std::vector<std::vector<int>> words(N);
    std::vector<int> order(N);
    for (int k = 0; k < N; ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return len[a] < len[b]; });
    for (int k : order) {
      if (len[k] == 0) continue;
      for (int i = 0; i < n; ++i) {
        int v = left[i][k];
        if (len[v] < len[k]) {
          words[k] = {i};
          words[k].insert(words[k].end(), words[v].begin(), words[v].end());
          break;
        }
      }
    }
    // Renumber by (length, word).
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return len[a] != len[b] ? len[a] < len[b] : words[a] < words[b];
    });
    std::vector<int> pos(N);
    for (int k = 0; k < N; ++k) pos[order[k]] = k;
    mats_.resize(N);
    len_.resize(N);
    words_.resize(N);
    left_.assign(n, std::vector<int>(N));
    right_.assign(n, std::vector<int>(N));
    for (int k = 0; k < N; ++k) {
      const int o = order[k];
      mats_[k] = mats[o];
      len_[k] = len[o];
      words_[k] = words[o];
      for (int i = 0; i < n; ++i) {
        left_[i][k] = pos[left[i][o]];
        right_[i][k] = pos[right[i][o]];
      }
    }
  }

  // Down-sets via the subword property: D(w s_i) = D(w) u D(w) s_i when l(w s_i) > l(w).
  void build_bruhat() {
    const int N = order();
    const std::size_t words = (static_cast<std::size_t>(N) + 63) / 64;
    down_.assign(N, std::vector<std::uint64_t>(words, 0));
    down_[0][0] = 1;
    for (int k = 1; k < N; ++k) {
      const int last = words_[k].back();
      const int prev = right_[last][k];
      auto& d = down_[k];
      d = down_[prev];
      for (int x = 0; x < N; ++x)
        if ((down_[prev][x >> 6] >> (x & 63)) & 1U) {
          const int y = right_[last][x];
          d[y >> 6] |= std::uint64_t{1} << (y & 63);
        }
    }
  }

  CartanDatum datum_;
  std::vector<std::vector<int>> mats_;
  std::vector<int> len_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<int>> left_, right_;
  std::vector<std::vector<std::uint64_t>> down_;
};

}  // namespace qbruhat
