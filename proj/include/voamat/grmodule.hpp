// The depth filtration Omega_n of a lower-bounded module, its associated
// graded space truncated at level N, the induced matrix action theta, and the
// verification suites for the graded-module structure.
//
// Omega_n membership quantifies over all of V and is only semi-decidable at a
// finite cutoff, so membership is three-valued: a basis vector is
// certified-excluded when an explicit mode witness maps it to something
// nonzero, and subspaces are tentatively-included relative to the v-weight
// cutoff used. Filtrations must stabilize (no change over two consecutive
// cutoff increments) before the graded structure is built.
//
// The graded pieces Gr_n = Omega_n/Omega_{n-1} are built from the computed
// kernels per (level, depth) with explicit quotient complements; no
// structural shortcut (such as equating Omega_n with the sum of the first
// n+1 depth slices) is assumed, since reducible modules violate it.
#pragma once

#include <optional>

#include "voamat/module.hpp"
#include "voamat/reduction.hpp"

namespace voamat {

struct UnstableFiltration : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Column index over a module's depth window.
class ModIndex {
 public:
  explicit ModIndex(const LbModule& W) {
    for (const auto& k : W.basis_upto(W.dmax())) {
      index_[k] = int(keys_.size());
      keys_.push_back(k);
    }
  }
  int size() const { return int(keys_.size()); }
  int col(const ModKey& k) const {
    auto it = index_.find(k);
    if (it == index_.end()) throw std::out_of_range("module monomial outside depth window");
    return it->second;
  }
  const ModKey& key(int c) const { return keys_.at(c); }
  SparseRow row_of(const ModState& s) const {
    SparseRow r;
    for (const auto& [k, c] : s.terms) r[col(k)] = c;
    return r;
  }
  ModState state_of(const SparseRow& r) const {
    ModState s;
    for (const auto& [c, q] : r) s.add_term(key(c), q);
    return s;
  }

 private:
  std::vector<ModKey> keys_;
  std::map<ModKey, int> index_;
};

// Echelon span that tracks coordinates of members in terms of the added
// (independent) vectors.
class CoordSolver {
 public:
  void add(const SparseRow& v) {
    SparseRow r = v;
    std::vector<Rational> combo(count_ + 1, Rational(0));
    combo[count_] = 1;
    eliminate(r, combo);
    if (r.empty()) throw std::logic_error("CoordSolver: dependent vector added");
    Rational lead = r.begin()->second;
    for (auto& [c, q] : r) q /= lead;
    for (auto& q : combo) q /= lead;
    int pivot = r.begin()->first;
    for (auto& [p, row] : rows_) row.combo.resize(count_ + 1, Rational(0));
    rows_.emplace(pivot, Row{std::move(r), std::move(combo)});
    ++count_;
  }

  int size() const { return count_; }

  // x = sum c_i v_i if x lies in the span.
  std::optional<std::vector<Rational>> solve(const SparseRow& x) const {
    SparseRow r = x;
    std::vector<Rational> combo(count_, Rational(0));
    eliminate(r, combo);
    if (!r.empty()) return std::nullopt;
    for (auto& q : combo) q = -q;
    return combo;
  }

 private:
  struct Row {
    SparseRow r;
    std::vector<Rational> combo;  // r = sum combo_i v_i
  };

  // Reduce r by the stored rows; combo accumulates MINUS the coordinates.
  void eliminate(SparseRow& r, std::vector<Rational>& combo) const {
    auto it = r.begin();
    while (it != r.end()) {
      auto pivot = rows_.find(it->first);
      if (pivot == rows_.end()) {
        ++it;
        continue;
      }
      Rational c = it->second;
      int col = it->first;
      for (size_t i = 0; i < pivot->second.combo.size() && i < combo.size(); ++i)
        combo[i] -= c * pivot->second.combo[i];
      for (const auto& [pc, pq] : pivot->second.r) {
        auto jt = r.find(pc);
        if (jt == r.end()) {
          Rational q = -c * pq;
          if (q != 0) r.emplace(pc, q);
        } else {
          jt->second -= c * pq;
          if (jt->second == 0) r.erase(jt);
        }
      }
      it = r.upper_bound(col);
    }
  }

  std::map<int, Row> rows_;
  int count_ = 0;
};

struct OmegaFiltration {
  int n_max = 0;
  int v_cutoff = 0;
  // (level n, depth d) -> echelonized basis of the tentative kernel.
  std::map<std::pair<int, int>, std::vector<ModState>> tentative;
  // (level n, depth d) -> certified-excluded basis monomials with witnesses.
  std::map<std::pair<int, int>, std::vector<std::pair<ModKey, std::string>>> excluded;

  int dim(int n, int d) const {
    auto it = tentative.find({n, d});
    return it == tentative.end() ? 0 : int(it->second.size());
  }
  bool same_subspaces(const OmegaFiltration& o) const { return tentative == o.tentative; }
};

// Tentative Omega_n per depth: kernel of all modes (Y_W)_k(v) with
// wt v - k - 1 < -n, over basis v with wt v <= v_cutoff (nontrivial k range:
// wt v + n <= k <= wt v + d - 1; larger k lowers below the module floor).
inline OmegaFiltration omega_filtration(const LbModule& W, int n_max, int v_cutoff) {
  const VertexAlgebra& alg = W.algebra();
  OmegaFiltration F;
  F.n_max = n_max;
  F.v_cutoff = v_cutoff;
  for (int d = 0; d <= W.dmax(); ++d) {
    auto dbasis = W.basis(d);
    std::map<ModKey, int> lcol;
    for (size_t i = 0; i < dbasis.size(); ++i) lcol[dbasis[i]] = int(i);
    for (int n = 0; n <= n_max; ++n) {
      ReducedBasis constraints;
      std::map<int, std::string> witness;  // local col -> first nonzero mode
      for (int wv = 1; wv <= v_cutoff; ++wv)
        for (const auto& pv : alg.basis(wv)) {
          State v = State::monomial(pv);
          for (long k = wv + n; k <= long(wv) + d - 1; ++k) {
            // rows of the map (Y_W)_k(v): one row per target monomial
            std::map<ModKey, SparseRow> rows;
            for (size_t c = 0; c < dbasis.size(); ++c) {
              ModState img = W.mode_act_raw(v, k, ModState::monomial(dbasis[c]));
              if (!img.is_zero() && !witness.count(int(c)))
                witness[int(c)] = "(Y)_" + std::to_string(k) + "(" + partition_brief(pv) + ")";
              for (const auto& [t, q] : img.terms) rows[t][int(c)] = q;
            }
            for (const auto& [t, row] : rows) constraints.insert(row);
          }
        }
      // Kernel from the echelonized constraints.
      std::vector<ModState> kernel;
      for (size_t f = 0; f < dbasis.size(); ++f) {
        if (constraints.has_pivot(int(f))) continue;
        ModState x = ModState::monomial(dbasis[f]);
        for (const auto& [p, row] : constraints.rows()) {
          auto it = row.find(int(f));
          if (it != row.end()) x.add_term(dbasis[p], -it->second);
        }
        kernel.push_back(std::move(x));
      }
      F.tentative[{n, d}] = std::move(kernel);
      std::vector<std::pair<ModKey, std::string>> exc;
      for (const auto& [c, wit] : witness) exc.push_back({dbasis[c], wit});
      F.excluded[{n, d}] = std::move(exc);
    }
  }
  return F;
}

// Raise the v-cutoff until the filtration is unchanged over two consecutive
// increments; throws UnstableFiltration if the limit is reached first.
inline OmegaFiltration stable_omega_filtration(const LbModule& W, int n_max, int v_start,
                                               int v_limit) {
  OmegaFiltration prev = omega_filtration(W, n_max, v_start);
  int streak = 0;
  for (int vc = v_start + 1; vc <= v_limit; ++vc) {
    OmegaFiltration cur = omega_filtration(W, n_max, vc);
    streak = cur.same_subspaces(prev) ? streak + 1 : 0;
    prev = std::move(cur);
    if (streak >= 2) return prev;
  }
  throw UnstableFiltration("depth filtration did not stabilize by v-cutoff " +
                           std::to_string(v_limit));
}

// Graded element of Gr^N: per-level representatives (comp[n] represents a
// class modulo Omega_{n-1}).
struct GrVec {
  std::vector<ModState> comp;
  explicit GrVec(int N = 0) : comp(N + 1) {}
  bool operator==(const GrVec& o) const { return comp == o.comp; }
};

class GrStructure {
 public:
  GrStructure(const LbModule& W, int N, OmegaFiltration F)
      : W_(W), N_(N), F_(std::move(F)), idx_(W) {
    if (N < 0 || N > F_.n_max)
      throw std::invalid_argument("GrStructure: level range outside the filtration");
    for (int n = 0; n <= N_; ++n)
      for (int d = 0; d <= W.dmax(); ++d) {
        Piece piece;
        if (n > 0)
          for (const auto& s : F_.tentative.at({n - 1, d})) {
            piece.solver.add(idx_.row_of(s));
            ++piece.lower_dim;
          }
        for (const auto& s : F_.tentative.at({n, d})) {
          SparseRow r = idx_.row_of(s);
          if (piece.solver.solve(r)) continue;  // already in Omega_{n-1}
          piece.solver.add(r);
          piece.complement.push_back(s);
        }
        pieces_[{n, d}] = std::move(piece);
      }
  }

  const LbModule& module() const { return W_; }
  int levels() const { return N_; }
  const OmegaFiltration& filtration() const { return F_; }
  const ModIndex& index() const { return idx_; }

  // Canonical basis of Gr_n at depth d.
  const std::vector<ModState>& basis(int n, int d) const {
    return pieces_.at({n, d}).complement;
  }

  int dim(int n) const {
    int t = 0;
    for (int d = 0; d <= W_.dmax(); ++d) t += int(basis(n, d).size());
    return t;
  }

  // Coordinates of the class of w in Gr_n at depth d (w must be a depth-d
  // vector lying in the computed Omega_n); nullopt when the representative is
  // outside the computed kernel.
  std::optional<std::vector<Rational>> class_coords(int n, int d, const ModState& w) const {
    const Piece& piece = pieces_.at({n, d});
    auto coords = piece.solver.solve(idx_.row_of(w));
    if (!coords) return std::nullopt;
    return std::vector<Rational>(coords->begin() + piece.lower_dim, coords->end());
  }

  // Canonical representative of the class of w in Gr_n (all depths).
  std::optional<ModState> canonicalize(int n, const ModState& w) const {
    ModState out;
    for (const auto& [d, wd] : w.depth_components()) {
      auto coords = class_coords(n, d, wd);
      if (!coords) return std::nullopt;
      const auto& basis_nd = basis(n, d);
      for (size_t i = 0; i < coords->size(); ++i) out += (*coords)[i] * basis_nd[i];
    }
    return out;
  }

  std::optional<GrVec> canonicalize(const GrVec& g) const {
    if (int(g.comp.size()) != N_ + 1) throw SizeMismatch("GrVec level count mismatch");
    GrVec out(N_);
    for (int n = 0; n <= N_; ++n) {
      auto c = canonicalize(n, g.comp[n]);
      if (!c) return std::nullopt;
      out.comp[n] = std::move(*c);
    }
    return out;
  }

  // theta([v]_{kl}) on a representative of a Gr_l class: the mode of Y_W(v)
  // lowering the depth by exactly l - k, per weight component of v.
  ModState theta_rep(const State& v, int k, int l, const ModState& w) const {
    ModState out;
    for (const auto& [wv, vc] : v.components())
      out += W_.mode_act_raw(vc, long(wv) + l - k - 1, w);
    return out;
  }

 private:
  struct Piece {
    CoordSolver solver;  // Omega_{n-1} basis first, then the complement
    int lower_dim = 0;
    std::vector<ModState> complement;
  };

  const LbModule& W_;
  int N_;
  OmegaFiltration F_;
  ModIndex idx_;
  std::map<std::pair<int, int>, Piece> pieces_;
};

inline GrStructure build_gr(const LbModule& W, int N, int v_start, int v_limit) {
  return GrStructure(W, N, stable_omega_filtration(W, N, v_start, v_limit));
}

// Linear extension of theta over the entries of a matrix. Input classes are
// canonicalized first; throws UnstableFiltration if an image escapes the
// computed kernels (which would mean the filtration was not actually stable).
inline GrVec theta_apply(const GrStructure& G, const UMatrix& A, const GrVec& g) {
  if (A.size() != G.levels()) throw SizeMismatch("theta_apply: matrix/structure size mismatch");
  auto gc = G.canonicalize(g);
  if (!gc) throw UnstableFiltration("theta_apply: input not in the computed filtration");
  GrVec out(G.levels());
  for (const auto& [kl, v] : A.entries()) {
    auto [k, l] = kl;
    out.comp[k] += G.theta_rep(v, k, l, gc->comp[l]);
  }
  auto oc = G.canonicalize(out);
  if (!oc) throw UnstableFiltration("theta_apply: image escapes the computed filtration");
  return *oc;
}

inline GrVec gr_basis_vec(const GrStructure& G, int n, const ModState& rep) {
  GrVec g(G.levels());
  g.comp[n] = rep;
  return g;
}

}  // namespace voamat
