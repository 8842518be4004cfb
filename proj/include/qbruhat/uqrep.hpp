#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qbruhat/cartan.hpp"
#include "qbruhat/charring.hpp"
#include "qbruhat/errors.hpp"
#include "qbruhat/linalg.hpp"
#include "qbruhat/scalar.hpp"
#include "qbruhat/weyl.hpp"

namespace qbruhat {

struct SparseEntry {
  int index;
  RatFunc value;
};
using SparseVec = std::vector<SparseEntry>;

// Finite-dimensional type 1 module V(lambda) with a weight basis b_0 = u_lambda, b_1, ...
// Every b_k (k > 0) equals F_{gen(k)} b_{parent(k)}.  Generators are stored column-wise:
// E(i, k) lists the nonzero entries of E_i b_k.
class UqModule {
 public:
  UqModule(const CartanDatum& datum, Weight highest) : datum_(&datum), highest_(std::move(highest)) {}

  const CartanDatum& datum() const { return *datum_; }
  const Weight& highest() const { return highest_; }
  int dim() const { return static_cast<int>(weights_.size()); }
  int rank() const { return datum_->rank(); }

  const Weight& weight(int k) const { return weights_[k]; }
  int parent(int k) const { return parent_[k]; }
  int parent_gen(int k) const { return gen_[k]; }
  // Position of b_k inside its weight space.
  int local(int k) const { return local_[k]; }

  // Distinct weights, in order of first appearance (depth below the highest weight).
  const std::vector<Weight>& weights() const { return distinct_; }
  bool has_weight(const Weight& mu) const { return spaces_.count(mu) > 0; }
  const std::vector<int>& weight_space(const Weight& mu) const {
    static const std::vector<int> empty;
    auto it = spaces_.find(mu);
    return it == spaces_.end() ? empty : it->second;
  }
  int multiplicity(const Weight& mu) const { return static_cast<int>(weight_space(mu).size()); }

  const SparseVec& E(int i, int k) const { return e_[i][k]; }
  const SparseVec& F(int i, int k) const { return f_[i][k]; }
  // K_i b_k = q^{k_exponent(i,k)} b_k.
  int k_exponent(int i, int k) const { return datum_->d(i) * weights_[k][i]; }

  Vec<RatFunc> apply_E(int i, const Vec<RatFunc>& v) const { return apply(e_[i], v); }
  Vec<RatFunc> apply_F(int i, const Vec<RatFunc>& v) const { return apply(f_[i], v); }
  // Right action on dual rows: (xi . X)_k = sum_j xi_j X_{jk}.
  Vec<RatFunc> dual_E(int i, const Vec<RatFunc>& row) const { return dual_apply(e_[i], row); }
  Vec<RatFunc> dual_F(int i, const Vec<RatFunc>& row) const { return dual_apply(f_[i], row); }

  Vec<RatFunc> basis_vector(int k) const {
    Vec<RatFunc> v(dim());
    v[k] = RatFunc(1);
    return v;
  }

  // Matrix of E_i (or F_i) from the mu weight space to the mu +- alpha_i weight space, local coordinates.
  Matrix<RatFunc> block(bool raising, int i, const Weight& mu) const {
    const Weight target = raising ? mu + datum_->simple_root(i) : mu - datum_->simple_root(i);
    const auto& src = weight_space(mu);
    const auto& dst = weight_space(target);
    Matrix<RatFunc> m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (std::size_t c = 0; c < src.size(); ++c)
      for (const auto& en : (raising ? e_ : f_)[i][src[c]]) m(local_[en.index], static_cast<int>(c)) = en.value;
    return m;
  }

  // Restrict a global vector (or dual row) to the coordinates of one weight space.
  Vec<RatFunc> restrict_to(const Weight& mu, const Vec<RatFunc>& v) const {
    const auto& idx = weight_space(mu);
    Vec<RatFunc> out(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) out[k] = v[idx[k]];
    return out;
  }
  Vec<RatFunc> extend_from(const Weight& mu, const Vec<RatFunc>& local_v) const {
    Vec<RatFunc> out(dim());
    const auto& idx = weight_space(mu);
    for (std::size_t k = 0; k < idx.size(); ++k) out[idx[k]] = local_v[k];
    return out;
  }
  // Weight of a nonzero vector supported on a single weight space.
  std::optional<Weight> weight_of(const Vec<RatFunc>& v) const {
    std::optional<Weight> w;
    for (int k = 0; k < dim(); ++k) {
      if (v[k].is_zero()) continue;
      if (w && *w != weights_[k]) return std::nullopt;
      w = weights_[k];
    }
    return w;
  }

  // E/F commutation and quantum Serre relations on every basis vector.
  void verify_relations() const;

 private:
  friend class ModuleBuilder;

  Vec<RatFunc> apply(const std::vector<SparseVec>& cols, const Vec<RatFunc>& v) const {
    Vec<RatFunc> out(dim());
    for (int k = 0; k < dim(); ++k) {
      if (v[k].is_zero()) continue;
      for (const auto& en : cols[k]) out[en.index] += en.value * v[k];
    }
    return out;
  }
  Vec<RatFunc> dual_apply(const std::vector<SparseVec>& cols, const Vec<RatFunc>& row) const {
    Vec<RatFunc> out(dim());
    for (int k = 0; k < dim(); ++k)
      for (const auto& en : cols[k])
        if (!row[en.index].is_zero()) out[k] += row[en.index] * en.value;
    return out;
  }

  void index_weights() {
    spaces_.clear();
    distinct_.clear();
    local_.assign(dim(), 0);
    for (int k = 0; k < dim(); ++k) {
      auto& sp = spaces_[weights_[k]];
      if (sp.empty()) distinct_.push_back(weights_[k]);
      local_[k] = static_cast<int>(sp.size());
      sp.push_back(k);
    }
  }

  const CartanDatum* datum_;
  Weight highest_;
  std::vector<Weight> weights_;
  std::vector<int> parent_, gen_, local_;
  std::vector<std::vector<SparseVec>> e_, f_;
  std::map<Weight, std::vector<int>> spaces_;
  std::vector<Weight> distinct_;
};

inline void UqModule::verify_relations() const {
  const int n = rank();
  const int N = dim();
  auto fail = [&](const std::string& what) {
    throw invariant_violation("U_q relations", what + " in V(" + highest_.str() + ")");
  };
  for (int k = 0; k < N; ++k) {
    const Vec<RatFunc> b = basis_vector(k);
    for (int i = 0; i < n; ++i) {
      for (const auto& en : e_[i][k])
        if (weights_[en.index] != weights_[k] + datum_->simple_root(i)) fail("E shifts weights incorrectly");
      for (const auto& en : f_[i][k])
        if (weights_[en.index] != weights_[k] - datum_->simple_root(i)) fail("F shifts weights incorrectly");
      for (int j = 0; j < n; ++j) {
        Vec<RatFunc> lhs = apply_E(i, apply_F(j, b));
        Vec<RatFunc> fe = apply_F(j, apply_E(i, b));
        for (int r = 0; r < N; ++r) lhs[r] -= fe[r];
        if (i == j) lhs[k] -= RatFunc(q_int(weights_[k][i], datum_->d(i)));
        for (const auto& x : lhs)
          if (!x.is_zero()) fail("[E_i, F_j] relation");
        if (i == j) continue;
        const int m = 1 - datum_->a(i, j);
        for (bool raising : {true, false}) {
          Vec<RatFunc> total(N);
          for (int s = 0; s <= m; ++s) {
            Vec<RatFunc> v = b;
            auto act = [&](int g) { v = raising ? apply_E(g, v) : apply_F(g, v); };
            for (int t = 0; t < s; ++t) act(i);
            act(j);
            for (int t = 0; t < m - s; ++t) act(i);
            RatFunc c(q_binomial(m, s, datum_->d(i)));
            if (s % 2) c = -c;
            for (int r = 0; r < N; ++r)
              if (!v[r].is_zero()) total[r] += c * v[r];
          }
          for (const auto& x : total)
            if (!x.is_zero()) fail(raising ? "quantum Serre relation for E" : "quantum Serre relation for F");
        }
      }
    }
  }
}

// Entry of a vector in V(lambda) (x) V(mu).
struct TensorEntry {
  int a;
  int b;
  RatFunc value;
};
using TensorVec = std::map<std::pair<int, int>, RatFunc>;

// Delta(F_i) = F_i (x) 1 + K_i (x) F_i.
inline TensorVec delta_F(int i, const UqModule& A, const UqModule& B, const TensorVec& v) {
  TensorVec out;
  for (const auto& [ab, c] : v) {
    const auto [a, b] = ab;
    for (const auto& en : A.F(i, a)) out[{en.index, b}] += c * en.value;
    if (!B.F(i, b).empty()) {
      const RatFunc k = c * RatFunc::q_power(A.k_exponent(i, a));
      for (const auto& en : B.F(i, b)) out[{a, en.index}] += k * en.value;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// Delta(E_i) = E_i (x) K_i^{-1} + 1 (x) E_i.
inline TensorVec delta_E(int i, const UqModule& A, const UqModule& B, const TensorVec& v) {
  TensorVec out;
  for (const auto& [ab, c] : v) {
    const auto [a, b] = ab;
    if (!A.E(i, a).empty()) {
      const RatFunc k = c * RatFunc::q_power(-B.k_exponent(i, b));
      for (const auto& en : A.E(i, a)) out[{en.index, b}] += k * en.value;
    }
    for (const auto& en : B.E(i, b)) out[{a, en.index}] += c * en.value;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// Image of the basis of V(lambda+mu) under the U_q-map sending u_{lambda+mu} to u_lambda (x) u_mu.
struct Embedding {
  Weight lambda;
  Weight mu;
  std::vector<std::vector<TensorEntry>> image;
};

inline std::vector<std::vector<TensorEntry>> flatten(const std::vector<TensorVec>& vs) {
  std::vector<std::vector<TensorEntry>> out(vs.size());
  for (std::size_t k = 0; k < vs.size(); ++k)
    for (const auto& [ab, c] : vs[k]) out[k].push_back({ab.first, ab.second, c});
  return out;
}

inline std::shared_ptr<Embedding> compute_embedding(const UqModule& target, const UqModule& A, const UqModule& B) {
  if (target.highest() != A.highest() + B.highest()) throw std::invalid_argument("embedding weight mismatch");
  std::vector<TensorVec> img(target.dim());
  img[0][{0, 0}] = RatFunc(1);
  for (int k = 1; k < target.dim(); ++k) {
    img[k] = delta_F(target.parent_gen(k), A, B, img[target.parent(k)]);
    if (img[k].empty()) throw invariant_violation("Cartan embedding", "basis vector maps to zero");
  }
  auto e = std::make_shared<Embedding>();
  e->lambda = A.highest();
  e->mu = B.highest();
  e->image = flatten(img);
  return e;
}

class RepContext;

class ModuleBuilder {
 public:
  // Minuscule fundamental module: every weight space is a line, entries 1.
  static std::shared_ptr<UqModule> minuscule(const CartanDatum& d, int j) {
    auto m = std::make_shared<UqModule>(d, d.fundamental(j));
    const int n = d.rank();
    m->weights_.push_back(d.fundamental(j));
    m->parent_.push_back(-1);
    m->gen_.push_back(-1);
    std::map<Weight, int> index{{d.fundamental(j), 0}};
    for (int k = 0; k < static_cast<int>(m->weights_.size()); ++k)
      for (int i = 0; i < n; ++i) {
        const Weight mu = m->weights_[k];
        if (mu[i] < -1 || mu[i] > 1) throw std::invalid_argument("fundamental weight is not minuscule");
        if (mu[i] != 1) continue;
        const Weight nu = mu - d.simple_root(i);
        if (index.count(nu)) continue;
        index[nu] = static_cast<int>(m->weights_.size());
        m->weights_.push_back(nu);
        m->parent_.push_back(k);
        m->gen_.push_back(i);
      }
    const int N = m->dim();
    m->e_.assign(n, std::vector<SparseVec>(N));
    m->f_.assign(n, std::vector<SparseVec>(N));
    for (int k = 0; k < N; ++k)
      for (int i = 0; i < n; ++i)
        if (m->weights_[k][i] == 1) {
          const int t = index.at(m->weights_[k] - d.simple_root(i));
          m->f_[i][k].push_back({t, RatFunc(1)});
          m->e_[i][t].push_back({k, RatFunc(1)});
        }
    m->index_weights();
    return m;
  }

  // B2 (alpha_1 long) V(omega_1): basis u, F1 u, F2 F1 u, F2 F2 F1 u, F1 F2 F2 F1 u.
  static std::shared_ptr<UqModule> b2_vector(const CartanDatum& d) {
    auto m = std::make_shared<UqModule>(d, d.fundamental(0));
    m->weights_ = {Weight{1, 0}, Weight{-1, 2}, Weight{0, 0}, Weight{1, -2}, Weight{-1, 0}};
    m->parent_ = {-1, 0, 1, 2, 3};
    m->gen_ = {-1, 0, 1, 1, 0};
    m->e_.assign(2, std::vector<SparseVec>(5));
    m->f_.assign(2, std::vector<SparseVec>(5));
    const RatFunc two(q_int(2, d.d(1)));
    auto link = [&](int i, int from, int to, RatFunc f, RatFunc e) {
      m->f_[i][from].push_back({to, std::move(f)});
      m->e_[i][to].push_back({from, std::move(e)});
    };
    link(0, 0, 1, RatFunc(1), RatFunc(1));
    link(1, 1, 2, RatFunc(1), two);
    link(1, 2, 3, RatFunc(1), two);
    link(0, 3, 4, RatFunc(1), RatFunc(1));
    m->index_weights();
    return m;
  }

  static std::shared_ptr<UqModule> trivial(const CartanDatum& d) {
    auto m = std::make_shared<UqModule>(d, Weight::zero(d.rank()));
    m->weights_ = {Weight::zero(d.rank())};
    m->parent_ = {-1};
    m->gen_ = {-1};
    m->e_.assign(d.rank(), std::vector<SparseVec>(1));
    m->f_.assign(d.rank(), std::vector<SparseVec>(1));
    m->index_weights();
    return m;
  }

  // Cyclic submodule generated by u_A (x) u_B inside A (x) B.  Returns the module and its realization.
  static std::pair<std::shared_ptr<UqModule>, std::vector<TensorVec>> cyclic(const WeylGroup& W, const UqModule& A,
                                                                            const UqModule& B, int dim_cap);

 private:
  struct WeightSolver {
    std::vector<std::pair<int, int>> coords;  // tensor coordinates of this weight
    std::map<std::pair<int, int>, int> pos;
    std::vector<Vec<RatFunc>> rows;  // chosen basis vectors, dense in coords
    std::vector<int> pivots;
    Matrix<RatFunc> inv;

    Vec<RatFunc> dense(const TensorVec& v) const {
      Vec<RatFunc> out(coords.size());
      for (const auto& [ab, c] : v) {
        auto it = pos.find(ab);
        if (it == pos.end()) throw invariant_violation("tensor weight grading", "vector leaves its weight space");
        out[it->second] = c;
      }
      return out;
    }
    void finalize() {
      const int m = static_cast<int>(rows.size());
      Matrix<RatFunc> b = Matrix<RatFunc>::from_rows(static_cast<int>(coords.size()), rows);
      pivots = rref(b).pivots;
      Matrix<RatFunc> sq(m, m);
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) sq(r, c) = rows[r][pivots[c]];
      auto i = inverse(sq);
      if (!i) throw invariant_violation("module basis", "chosen vectors are dependent");
      inv = *i;
    }
    Vec<RatFunc> solve_coords(const TensorVec& v) const {
      const Vec<RatFunc> d = dense(v);
      const int m = static_cast<int>(rows.size());
      Vec<RatFunc> c(m);
      for (int j = 0; j < m; ++j)
        for (int p = 0; p < m; ++p)
          if (!d[pivots[p]].is_zero() && !inv(p, j).is_zero()) c[j] += d[pivots[p]] * inv(p, j);
      Vec<RatFunc> check(d.size());
      for (int j = 0; j < m; ++j)
        if (!c[j].is_zero())
          for (std::size_t t = 0; t < d.size(); ++t)
            if (!rows[j][t].is_zero()) check[t] += c[j] * rows[j][t];
      if (check != d) throw invariant_violation("cyclic submodule", "generator image leaves the submodule");
      return c;
    }
  };
};

inline std::pair<std::shared_ptr<UqModule>, std::vector<TensorVec>> ModuleBuilder::cyclic(const WeylGroup& W,
                                                                                        const UqModule& A,
                                                                                        const UqModule& B,
                                                                                        int dim_cap) {
  const CartanDatum& d = W.datum();
  const int n = d.rank();
  const Weight lambda = A.highest() + B.highest();
  const long long expected = weyl_dim(d, lambda);
  if (expected > dim_cap)
    throw std::invalid_argument("V(" + lambda.str() + ") has dimension " + std::to_string(expected) +
                                " above the cap " + std::to_string(dim_cap));
  const FormalCharacter ch = demazure_character(W, W.longest(), lambda);

  std::map<Weight, WeightSolver> solvers;
  for (int a = 0; a < A.dim(); ++a)
    for (int b = 0; b < B.dim(); ++b) {
      const Weight w = A.weight(a) + B.weight(b);
      if (ch[w] == 0) continue;
      auto& s = solvers[w];
      s.pos[{a, b}] = static_cast<int>(s.coords.size());
      s.coords.push_back({a, b});
    }

  auto m = std::make_shared<UqModule>(d, lambda);
  std::vector<TensorVec> real;
  real.push_back({{{0, 0}, RatFunc(1)}});
  m->weights_.push_back(lambda);
  m->parent_.push_back(-1);
  m->gen_.push_back(-1);
  solvers.at(lambda).rows.push_back(solvers.at(lambda).dense(real[0]));

  std::map<int, std::vector<Weight>> layers;
  for (const auto& [w, c] : ch.terms()) layers[d.depth(lambda - w)].push_back(w);
  for (auto& [depth, ws] : layers) {
    if (depth == 0) continue;
    std::sort(ws.begin(), ws.end(), [](const Weight& x, const Weight& y) { return y < x; });
    const int before = m->dim();
    for (const Weight& nu : ws) {
      auto& s = solvers.at(nu);
      const long long want = ch[nu];
      Subspace<RatFunc> span(static_cast<int>(s.coords.size()));
      for (int k = 0; k < before && static_cast<long long>(s.rows.size()) < want; ++k)
        for (int i = 0; i < n && static_cast<long long>(s.rows.size()) < want; ++i) {
          if (m->weights_[k] - d.simple_root(i) != nu) continue;
          TensorVec v = delta_F(i, A, B, real[k]);
          if (v.empty()) continue;
          Vec<RatFunc> dv = s.dense(v);
          if (span.contains(dv)) continue;
          span = span + Subspace<RatFunc>::span(static_cast<int>(dv.size()), {dv});
          s.rows.push_back(std::move(dv));
          real.push_back(std::move(v));
          m->weights_.push_back(nu);
          m->parent_.push_back(k);
          m->gen_.push_back(i);
        }
      if (static_cast<long long>(s.rows.size()) != want)
        throw invariant_violation("Weyl character",
                                  "weight " + nu.str() + " of V(" + lambda.str() + ") has the wrong multiplicity");
    }
  }
  if (m->dim() != expected) throw invariant_violation("Weyl dimension formula", "dimension mismatch");
  for (auto& [w, s] : solvers) s.finalize();
  m->index_weights();

  const int N = m->dim();
  m->e_.assign(n, std::vector<SparseVec>(N));
  m->f_.assign(n, std::vector<SparseVec>(N));
  for (int k = 0; k < N; ++k)
    for (int i = 0; i < n; ++i)
      for (bool raising : {true, false}) {
        TensorVec v = raising ? delta_E(i, A, B, real[k]) : delta_F(i, A, B, real[k]);
        if (v.empty()) continue;
        const Weight target = raising ? m->weights_[k] + d.simple_root(i) : m->weights_[k] - d.simple_root(i);
        if (!m->has_weight(target)) throw invariant_violation("cyclic submodule", "image outside the weights of V");
        Vec<RatFunc> c = solvers.at(target).solve_coords(v);
        const auto& idx = m->weight_space(target);
        SparseVec col;
        for (std::size_t t = 0; t < idx.size(); ++t)
          if (!c[t].is_zero()) col.push_back({idx[t], c[t]});
        (raising ? m->e_ : m->f_)[i][k] = std::move(col);
      }
  return {m, std::move(real)};
}

// Shared cache of modules and Cartan embeddings for one root datum.
class RepContext {
 public:
  explicit RepContext(const std::string& label, int dim_cap = 400) : W_(build_cartan(label)), dim_cap_(dim_cap) {
    if (W_.rank() > 2) throw std::invalid_argument("module construction supports rank <= 2");
    const std::string& l = W_.datum().label();
    if (l != "A1" && l != "A2" && l != "B2" && l != "A1xA1")
      throw std::invalid_argument("no fundamental modules for type " + l);
  }
  RepContext(const RepContext&) = delete;
  RepContext& operator=(const RepContext&) = delete;

  const WeylGroup& weyl() const { return W_; }
  const CartanDatum& datum() const { return W_.datum(); }
  int dim_cap() const { return dim_cap_; }

  std::shared_ptr<const UqModule> module(const Weight& lambda) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = modules_.find(lambda);
    if (it != modules_.end()) return it->second;
    if (!lambda.is_dominant() || lambda.rank() != W_.rank())
      throw std::invalid_argument("highest weight must be dominant of rank " + std::to_string(W_.rank()));
    std::shared_ptr<UqModule> m;
    const CartanDatum& d = W_.datum();
    int j = -1, total = 0;
    for (int i = 0; i < d.rank(); ++i) {
      total += lambda[i];
      if (lambda[i] > 0 && j < 0) j = i;
    }
    if (total == 0) {
      m = ModuleBuilder::trivial(d);
    } else if (total == 1) {
      if (d.label() == "B2" && j == 0)
        m = ModuleBuilder::b2_vector(d);
      else
        m = ModuleBuilder::minuscule(d, j);
    } else {
      auto A = module(lambda - d.fundamental(j));
      auto B = module(d.fundamental(j));
      auto built = ModuleBuilder::cyclic(W_, *A, *B, dim_cap_);
      m = built.first;
      auto e = std::make_shared<Embedding>();
      e->lambda = A->highest();
      e->mu = B->highest();
      e->image = flatten(built.second);
      embeddings_[{A->highest(), B->highest()}] = e;
    }
    m->verify_relations();
    if (m->dim() != weyl_dim(d, lambda)) throw invariant_violation("Weyl dimension formula", "dimension mismatch");
    modules_[lambda] = m;
    return m;
  }

  // Embedding of V(lambda+mu) into V(lambda) (x) V(mu).
  std::shared_ptr<const Embedding> embedding(const Weight& lambda, const Weight& mu) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = embeddings_.find({lambda, mu});
    if (it != embeddings_.end()) return it->second;
    auto target = module(lambda + mu);
    auto again = embeddings_.find({lambda, mu});
    if (again != embeddings_.end()) return again->second;
    auto e = compute_embedding(*target, *module(lambda), *module(mu));
    embeddings_[{lambda, mu}] = e;
    return e;
  }

 private:
  WeylGroup W_;
  int dim_cap_;
  mutable std::recursive_mutex mu_;
  mutable std::map<Weight, std::shared_ptr<const UqModule>> modules_;
  mutable std::map<std::pair<Weight, Weight>, std::shared_ptr<const Embedding>> embeddings_;
};

// u_{y lambda} = F_{i1}^{(n1)} ... F_{ir}^{(nr)} u_lambda along the canonical word of y.
inline Vec<RatFunc> extreme_vector(const RepContext& ctx, const UqModule& V, const std::vector<int>& word) {
  const CartanDatum& d = ctx.datum();
  Vec<RatFunc> v = V.basis_vector(0);
  Weight mu = V.highest();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it;
    const int n = mu[i];
    if (n < 0) throw std::invalid_argument("word is not reduced for this extreme vector");
    for (int t = 0; t < n; ++t) v = V.apply_F(i, v);
    const RatFunc fact(q_factorial(n, d.d(i)));
    for (auto& x : v) x = x / fact;
    mu = d.reflect(i, mu);
  }
  if (std::all_of(v.begin(), v.end(), [](const RatFunc& x) { return x.is_zero(); }))
    throw invariant_violation("extreme weight vectors", "divided-power string vanished");
  return v;
}

inline Vec<RatFunc> extreme_vector(const RepContext& ctx, const UqModule& V, WeylElem y) {
  return extreme_vector(ctx, V, ctx.weyl().word(y));
}

// Weight-graded subspace of a module, stored per weight in local coordinates.  Zero parts are omitted.
struct GradedSubspace {
  std::map<Weight, Subspace<RatFunc>> parts;

  int dim() const {
    int s = 0;
    for (const auto& [w, p] : parts) s += p.dim();
    return s;
  }
  int dim_at(const Weight& mu) const {
    auto it = parts.find(mu);
    return it == parts.end() ? 0 : it->second.dim();
  }
  void set(const Weight& mu, Subspace<RatFunc> s) {
    if (s.dim() == 0)
      parts.erase(mu);
    else
      parts[mu] = std::move(s);
  }
  bool contains_local(const Weight& mu, const Vec<RatFunc>& v) const {
    auto it = parts.find(mu);
    if (it != parts.end()) return it->second.contains(v);
    return std::all_of(v.begin(), v.end(), [](const RatFunc& x) { return x.is_zero(); });
  }
  bool contains(const GradedSubspace& o) const {
    for (const auto& [w, p] : o.parts) {
      auto it = parts.find(w);
      if (it == parts.end() || !it->second.contains(p)) return false;
    }
    return true;
  }
  friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) { return a.parts == b.parts; }
  friend bool operator!=(const GradedSubspace& a, const GradedSubspace& b) { return !(a == b); }
};

inline GradedSubspace graded_sum(const GradedSubspace& a, const GradedSubspace& b) {
  GradedSubspace r = a;
  for (const auto& [w, p] : b.parts) {
    auto it = r.parts.find(w);
    r.set(w, it == r.parts.end() ? p : it->second + p);
  }
  return r;
}

inline GradedSubspace graded_intersect(const GradedSubspace& a, const GradedSubspace& b) {
  GradedSubspace r;
  for (const auto& [w, p] : a.parts) {
    auto it = b.parts.find(w);
    if (it != b.parts.end()) r.set(w, p.intersect(it->second));
  }
  return r;
}

// Orthogonal complement with respect to the coordinate pairing of V and V*.
inline GradedSubspace graded_orthogonal(const UqModule& V, const GradedSubspace& s) {
  GradedSubspace r;
  for (const Weight& w : V.weights()) {
    auto it = s.parts.find(w);
    const int m = V.multiplicity(w);
    r.set(w, it == s.parts.end() ? Subspace<RatFunc>::full(m) : it->second.orthogonal_complement());
  }
  return r;
}

inline GradedSubspace graded_full(const UqModule& V) {
  GradedSubspace r;
  for (const Weight& w : V.weights()) r.set(w, Subspace<RatFunc>::full(V.multiplicity(w)));
  return r;
}

enum class Sign { plus, minus };

// V_y^+(lambda) = U(b^+) u_{y lambda} (closure under E) or V_y^-(lambda) (closure under F).
inline GradedSubspace demazure_submodule(const RepContext& ctx, const UqModule& V, WeylElem y, Sign sign) {
  const CartanDatum& d = ctx.datum();
  const Weight start = ctx.weyl().act(y, V.highest());
  GradedSubspace s;
  s.set(start, Subspace<RatFunc>::span(V.multiplicity(start), {V.restrict_to(start, extreme_vector(ctx, V, y))}));
  std::vector<Weight> work{start};
  const bool raising = sign == Sign::plus;
  while (!work.empty()) {
    const Weight mu = work.back();
    work.pop_back();
    const Subspace<RatFunc> here = s.parts.at(mu);
    for (int i = 0; i < d.rank(); ++i) {
      const Weight nu = raising ? mu + d.simple_root(i) : mu - d.simple_root(i);
      if (!V.has_weight(nu)) continue;
      const Matrix<RatFunc> blk = V.block(raising, i, mu);
      std::vector<Vec<RatFunc>> imgs;
      for (int k = 0; k < here.dim(); ++k) imgs.push_back(blk.apply(here.vector(k)));
      Subspace<RatFunc> add = Subspace<RatFunc>::span(V.multiplicity(nu), imgs);
      if (add.dim() == 0) continue;
      auto it = s.parts.find(nu);
      Subspace<RatFunc> grown = it == s.parts.end() ? add : it->second + add;
      if (it != s.parts.end() && grown.dim() == it->second.dim()) continue;
      s.set(nu, grown);
      work.push_back(nu);
    }
  }
  return s;
}

// Matrix coefficient data: a dual row of V(lambda)* and its string statistics.
struct StringData {
  int phi = 0;
  int eps = 0;
  Vec<RatFunc> y_star;  // a . y_i^{phi}
  Vec<RatFunc> x_star;  // a . x_i^{eps}
};

inline bool is_zero_vec(const Vec<RatFunc>& v) {
  return std::all_of(v.begin(), v.end(), [](const RatFunc& x) { return x.is_zero(); });
}

inline StringData string_data(const UqModule& V, const Vec<RatFunc>& a, int i) {
  StringData s;
  s.y_star = a;
  s.x_star = a;
  if (is_zero_vec(a)) return s;
  for (Vec<RatFunc> next = V.dual_F(i, a); !is_zero_vec(next); next = V.dual_F(i, next)) {
    s.y_star = next;
    ++s.phi;
  }
  for (Vec<RatFunc> next = V.dual_E(i, a); !is_zero_vec(next); next = V.dual_E(i, next)) {
    s.x_star = next;
    ++s.eps;
  }
  return s;
}

enum class StringKind { y_star, x_star };

// a . y_w^* along the canonical word of w, or a . x_w^* along the canonical word of w w0.
inline Vec<RatFunc> string_along(const RepContext& ctx, const UqModule& V, Vec<RatFunc> a, WeylElem w,
                                 StringKind kind) {
  const WeylGroup& W = ctx.weyl();
  const auto& word = kind == StringKind::y_star ? W.word(w) : W.word(W.multiply(w, W.longest()));
  for (int i : word) {
    StringData s = string_data(V, a, i);
    a = kind == StringKind::y_star ? s.y_star : s.x_star;
  }
  return a;
}

// Dual basis functional of u_{w lambda}: the extreme coefficient c^lambda_w, normalized by c(u_{w lambda}) = 1.
inline Vec<RatFunc> extreme_dual(const RepContext& ctx, const UqModule& V, WeylElem w) {
  const Weight mu = ctx.weyl().act(w, V.highest());
  const auto& idx = V.weight_space(mu);
  if (idx.size() != 1) throw invariant_violation("extreme weight spaces", "extreme weight space is not a line");
  const Vec<RatFunc> u = extreme_vector(ctx, V, w);
  Vec<RatFunc> c(V.dim());
  c[idx[0]] = RatFunc(1) / u[idx[0]];
  return c;
}

}  // namespace qbruhat
