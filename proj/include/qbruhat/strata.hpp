#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "qbruhat/weyl.hpp"

namespace qbruhat {

struct StratPair {
  WeylElem y;
  WeylElem z;
  friend bool operator==(StratPair a, StratPair b) { return a.y == b.y && a.z == b.z; }
  friend bool operator<(StratPair a, StratPair b) { return std::make_pair(a.y, a.z) < std::make_pair(b.y, b.z); }
};

// (y,z) >= (y',z') iff y <= y' and z >= z'.
inline bool strat_succeq(const WeylGroup& W, StratPair a, StratPair b) {
  return W.bruhat_leq(a.y, b.y) && W.bruhat_leq(b.z, a.z);
}

// r(y^-1 z): rank of the Laurent ring attached to the stratum.
inline int stratum_rank(const WeylGroup& W, StratPair p) {
  return W.reflection_rank(W.multiply(W.inverse(p.y), p.z)).second;
}

class DiamondPoset {
 public:
  // All pairs y <= z, or y <= anchor <= z when an anchor is given.
  explicit DiamondPoset(const WeylGroup& W, std::optional<WeylElem> anchor = std::nullopt)
      : W_(&W), anchor_(anchor) {
    for (WeylElem y : W.elements())
      for (WeylElem z : W.elements()) {
        if (!W.bruhat_leq(y, z)) continue;
        if (anchor && !(W.bruhat_leq(y, *anchor) && W.bruhat_leq(*anchor, z))) continue;
        pairs_.push_back({y, z});
      }
    std::stable_sort(pairs_.begin(), pairs_.end(), [&](StratPair a, StratPair b) {
      auto key = [&](StratPair p) { return std::make_tuple(W.length(p.y), W.length(p.z), p.y.id, p.z.id); };
      return key(a) < key(b);
    });
    const int n = size();
    for (int i = 0; i < n; ++i) index_[pairs_[i]] = i;
    ge_.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) ge_[i][j] = strat_succeq(W, pairs_[i], pairs_[j]);
    if (n <= 400) verify_partial_order();
  }

  const WeylGroup& group() const { return *W_; }
  std::optional<WeylElem> anchor() const { return anchor_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  const std::vector<StratPair>& pairs() const { return pairs_; }
  const StratPair& pair(int i) const { return pairs_[i]; }

  std::optional<int> index_of(StratPair p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(StratPair p) const { return index_.count(p) > 0; }

  bool succeq(int i, int j) const { return ge_[i][j]; }

  // {(z1,z2) in the poset : p >= (z1,z2)}.
  std::vector<StratPair> closure(StratPair p) const {
    auto i = index_of(p);
    if (!i) throw std::invalid_argument("pair is not in the poset");
    std::vector<StratPair> out;
    for (int j = 0; j < size(); ++j)
      if (ge_[*i][j]) out.push_back(pairs_[j]);
    return out;
  }

  // Covering relations (i, j): pair i covers pair j under >=.
  std::vector<std::pair<int, int>> hasse() const {
    std::vector<std::pair<int, int>> edges;
    const int n = size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || !ge_[i][j]) continue;
        bool covers = true;
        for (int k = 0; k < n && covers; ++k)
          if (k != i && k != j && ge_[i][k] && ge_[k][j]) covers = false;
        if (covers) edges.emplace_back(i, j);
      }
    return edges;
  }

  int rank(StratPair p) const { return stratum_rank(*W_, p); }

 private:
  void verify_partial_order() const {
    const int n = size();
    for (int i = 0; i < n; ++i) {
      if (!ge_[i][i]) throw std::logic_error("stratum order is not reflexive");
      for (int j = 0; j < n; ++j) {
        if (i != j && ge_[i][j] && ge_[j][i]) throw std::logic_error("stratum order is not antisymmetric");
        if (!ge_[i][j]) continue;
        for (int k = 0; k < n; ++k)
          if (ge_[j][k] && !ge_[i][k]) throw std::logic_error("stratum order is not transitive");
      }
    }
  }

  const WeylGroup* W_;
  std::optional<WeylElem> anchor_;
  std::vector<StratPair> pairs_;
  std::map<StratPair, int> index_;
  std::vector<std::vector<bool>> ge_;
};

}  // namespace qbruhat
