// Verification suites for the graded module structure: the matrix action is
// an algebra homomorphism, it annihilates the O-span, the graded axioms
// (slot grading, faithfulness, diagonal L(0), the L(-1)/L(+1) ladder
// relations with their carry terms), and the irreducibility probe
// (cyclicity from every canonical basis vector, summand counting).
#pragma once

#include <algorithm>
#include <functional>
#include <random>

#include "voamat/grmodule.hpp"
#include "voamat/report.hpp"
#include "voamat/voa_suite.hpp"
#include "voamat/zhu.hpp"

namespace voamat {

// Fault-injection hook: tests substitute a corrupted action to confirm the
// suites detect violations. Default is theta_apply.
using ThetaFn = std::function<GrVec(const GrStructure&, const UMatrix&, const GrVec&)>;

inline GrVec default_theta(const GrStructure& G, const UMatrix& A, const GrVec& g) {
  return theta_apply(G, A, g);
}

// Canonical basis of the graded space as GrVecs, restricted to depths that
// keep every level shift of size at most `headroom` inside the module window.
inline std::vector<GrVec> gr_canonical_basis(const GrStructure& G, int headroom) {
  std::vector<GrVec> out;
  for (int n = 0; n <= G.levels(); ++n)
    for (int d = 0; d + headroom <= G.module().dmax(); ++d)
      for (const auto& rep : G.basis(n, d)) out.push_back(gr_basis_vec(G, n, rep));
  return out;
}

inline std::string grvec_brief(const GrVec& g) {
  std::string s;
  for (size_t n = 0; n < g.comp.size(); ++n)
    if (!g.comp[n].is_zero())
      s += (s.empty() ? "" : " ; ") + std::to_string(n) + ": " + modstate_brief(g.comp[n]);
  return s.empty() ? "0" : s;
}

// The Lie-ladder operators on the graded space: which = -1 raises the level,
// 0 preserves it, +1 lowers it (level 0 must map to zero). Returns the
// canonicalized image; domain violations (a nonzero top-level component under
// which = -1) throw.
inline GrVec gr_ladder(const GrStructure& G, int which, const GrVec& g) {
  const int N = G.levels();
  GrVec out(N);
  for (int n = 0; n <= N; ++n) {
    if (g.comp[n].is_zero()) continue;
    ModState img = G.module().sl2w_raw(which, g.comp[n]);
    int target = n - which;
    if (target > N) throw std::invalid_argument("gr_ladder: level raise leaves the window");
    if (target < 0) {
      if (!img.is_zero())
        throw UnstableFiltration("gr_ladder: lowering below level 0 gave a nonzero vector");
      continue;
    }
    out.comp[target] += img;
  }
  auto c = G.canonicalize(out);
  if (!c) throw UnstableFiltration("gr_ladder: image escapes the computed filtration");
  return *c;
}

// Compare an already-canonical vector against an arbitrary representative.
inline bool gr_equal_canonical(const GrStructure& G, const GrVec& canonical_lhs,
                               const GrVec& rhs) {
  auto c = G.canonicalize(rhs);
  return c && canonical_lhs == *c;
}

// theta(diamond(A, B)) g = theta(A, theta(B, g)) over elementary A = [u]_{kn},
// B = [v]_{nl} and the canonical graded basis. budget = 0 checks everything;
// otherwise a deterministic sample of that size.
inline Report homomorphism_suite(const GrStructure& G, int w_cutoff, size_t budget = 0,
                                 unsigned long seed = 12345, ThetaFn theta = nullptr) {
  if (!theta) theta = default_theta;
  const VertexAlgebra& alg = G.module().algebra();
  const int N = G.levels();
  Report rep;
  rep.suite = "theta-homomorphism";
  rep.meta["module"] = G.module().label();
  rep.meta["w_cutoff"] = std::to_string(w_cutoff);

  auto basis = gr_canonical_basis(G, N);
  auto vbasis = alg.basis_upto(w_cutoff);
  struct Case {
    int k, n, l;
    size_t iu, iv, ig;
  };
  std::vector<Case> cases;
  for (int k = 0; k <= N; ++k)
    for (int n = 0; n <= N; ++n)
      for (int l = 0; l <= N; ++l)
        for (size_t iu = 0; iu < vbasis.size(); ++iu)
          for (size_t iv = 0; iv < vbasis.size(); ++iv)
            for (size_t ig = 0; ig < basis.size(); ++ig) cases.push_back({k, n, l, iu, iv, ig});
  if (budget != 0 && budget < cases.size()) {
    std::mt19937_64 rng(seed);
    std::shuffle(cases.begin(), cases.end(), rng);
    cases.resize(budget);
  }
  rep.meta["cases"] = std::to_string(cases.size());

  for (const auto& c : cases) {
    UMatrix A = UMatrix::elementary(N, c.k, c.n, State::monomial(vbasis[c.iu]));
    UMatrix B = UMatrix::elementary(N, c.n, c.l, State::monomial(vbasis[c.iv]));
    GrVec lhs = theta(G, diamond(alg, A, B), basis[c.ig]);
    GrVec rhs = theta(G, A, theta(G, B, basis[c.ig]));
    bool ok = lhs == rhs;
    rep.add("product[u=" + partition_brief(vbasis[c.iu]) + ",v=" + partition_brief(vbasis[c.iv]) +
                ",(" + std::to_string(c.k) + "," + std::to_string(c.n) + "," +
                std::to_string(c.l) + "),g=" + grvec_brief(basis[c.ig]) + "]",
            ok, ok ? "" : grvec_brief(lhs) + " vs " + grvec_brief(rhs));
  }
  return rep;
}

// Every O-span generator acts as zero on the graded space.
inline Report o_annihilation_suite(const GrStructure& G, int w_gen_max, ThetaFn theta = nullptr) {
  if (!theta) theta = default_theta;
  const VertexAlgebra& alg = G.module().algebra();
  const int N = G.levels();
  Report rep;
  rep.suite = "o-span-annihilation";
  rep.meta["module"] = G.module().label();
  rep.meta["w_gen_max"] = std::to_string(w_gen_max);
  auto basis = gr_canonical_basis(G, N);
  GrVec zero(N);
  int gens = 0;
  for (int k = 0; k <= N; ++k)
    for (int l = 0; l <= N; ++l)
      for (int w = 0; w <= w_gen_max; ++w)
        for (const auto& gen : o_generators(alg, N, k, l, w)) {
          ++gens;
          UMatrix A = UMatrix::elementary(N, k, l, gen.realized);
          for (const auto& g : basis) {
            GrVec img = theta(G, A, g);
            rep.add("annihilates[" + gen.brief() + ",g=" + grvec_brief(g) + "]", img == zero,
                    img == zero ? "" : grvec_brief(img));
          }
        }
  rep.meta["generators"] = std::to_string(gens);
  return rep;
}

// The graded-module axioms.
inline Report graded_axiom_suite(const GrStructure& G, int v_cutoff, ThetaFn theta = nullptr) {
  if (!theta) theta = default_theta;
  const LbModule& W = G.module();
  const VertexAlgebra& alg = W.algebra();
  const int N = G.levels();
  const int dmax = W.dmax();
  Report rep;
  rep.suite = "graded-axioms";
  rep.meta["module"] = W.label();
  rep.meta["v_cutoff"] = std::to_string(v_cutoff);

  auto vbasis = alg.basis_upto(v_cutoff);
  auto elem = [&](int k, int l, const State& v) { return UMatrix::elementary(N, k, l, v); };

  // (1) L(0) acts diagonally on Gr_n at depth d with eigenvalue h_c + d, and
  // the spectrum is bounded below.
  {
    bool bounded_seen = false;
    Rational min_wt(0);
    for (int n = 0; n <= N; ++n)
      for (int d = 0; d <= dmax; ++d)
        for (const auto& rep_v : G.basis(n, d)) {
          ModState img = W.sl2w_raw(0, rep_v);
          bool diag = true;
          Rational wt(0);
          bool first = true;
          for (const auto& [key, c] : rep_v.terms) {
            if (first) {
              wt = W.weight_of(key);
              first = false;
            } else if (W.weight_of(key) != wt) {
              diag = false;
            }
          }
          bool ok = diag && img == wt * rep_v;
          rep.add("L0-diagonal[(" + std::to_string(n) + "," + std::to_string(d) + ")]", ok,
                  ok ? "" : modstate_brief(img));
          if (!bounded_seen || wt < min_wt) min_wt = wt;
          bounded_seen = true;
        }
    if (bounded_seen) rep.meta["min_L0_eigenvalue"] = rat_str(min_wt);
  }

  auto gbasis = gr_canonical_basis(G, N + 1);

  // (2) Slot grading and image depth: theta([v]_{kl}) sends the class of a
  // depth-d vector of Gr_l into Gr_k at depth d + k - l, and acts as zero on
  // the other levels by definition of the action.
  // (3) [L(0), theta([v]_{kl})] = (k - l) theta([v]_{kl}).
  for (const auto& pv : vbasis) {
    State v = State::monomial(pv);
    for (int k = 0; k <= N; ++k)
      for (int l = 0; l <= N; ++l) {
        UMatrix A = elem(k, l, v);
        for (const auto& g : gbasis) {
          GrVec tg = theta(G, A, g);
          std::string tag = "[v=" + partition_brief(pv) + ",(" + std::to_string(k) + "," +
                            std::to_string(l) + "),g=" + grvec_brief(g) + "]";
          bool graded = true;
          for (int m = 0; m <= N; ++m)
            if (m != k && !tg.comp[m].is_zero()) graded = false;
          if (!tg.comp[k].is_zero() && k != l) {
            // depth shift k - l, verified against the source depth
            int src_d = g.comp[l].is_zero() ? -1 : g.comp[l].max_depth();
            if (src_d >= 0 && tg.comp[k].max_depth() != src_d + k - l) graded = false;
          }
          rep.add("slot-graded" + tag, graded, graded ? "" : grvec_brief(tg));

          GrVec lhs = gr_ladder(G, 0, tg);
          GrVec rhs = gr_ladder(G, 0, g);
          rhs = theta(G, A, rhs);
          for (int m = 0; m <= N; ++m) rhs.comp[m] += Rational(k - l) * tg.comp[m];
          bool comm = gr_equal_canonical(G, lhs, rhs);
          rep.add("L0-commutator" + tag, comm,
                  comm ? "" : grvec_brief(lhs) + " vs " + grvec_brief(rhs));
        }
      }
  }

  // (4) L(-1) maps the filtration up one step: L(-1) Omega_n sits inside the
  // computed Omega_{n+1} one depth higher.
  for (int n = 0; n + 1 <= N; ++n)
    for (int d = 0; d + 1 <= dmax; ++d)
      for (const auto& s : G.filtration().tentative.at({n, d})) {
        ModState img = W.sl2w_raw(-1, s);
        bool ok = img.is_zero() || G.canonicalize(n + 1, img).has_value();
        rep.add("Lm1-raises-filtration[(" + std::to_string(n) + "," + std::to_string(d) + ")]",
                ok, ok ? "" : modstate_brief(img));
      }

  // (5) L(+1) kills level 0 (its image would live below the filtration).
  for (int d = 0; d <= dmax; ++d)
    for (const auto& s : G.basis(0, d)) {
      ModState img = W.sl2w_raw(1, s);
      rep.add("Lp1-kills-level0[d=" + std::to_string(d) + "]", img.is_zero(),
              img.is_zero() ? "" : modstate_brief(img));
    }

  // (6) Ladder commutators on the canonical basis:
  //     [L(0), L(-1)] = L(-1), [L(0), L(+1)] = -L(+1), [L(+1), L(-1)] = 2 L(0).
  for (const auto& g : gbasis) {
    int lvl = 0;
    for (int m = 0; m <= N; ++m)
      if (!g.comp[m].is_zero()) lvl = m;
    std::string tag = "[g=" + grvec_brief(g) + "]";
    if (lvl + 1 <= N) {
      GrVec lm = gr_ladder(G, -1, g);
      GrVec a = gr_ladder(G, 0, lm);
      GrVec b = gr_ladder(G, -1, gr_ladder(G, 0, g));
      for (int m = 0; m <= N; ++m) b.comp[m] += lm.comp[m];
      bool ok = gr_equal_canonical(G, a, b);
      rep.add("L0-Lm1-commutator" + tag, ok, ok ? "" : grvec_brief(a));

      GrVec x = gr_ladder(G, 1, lm);
      GrVec y = gr_ladder(G, -1, gr_ladder(G, 1, g));
      GrVec z = gr_ladder(G, 0, g);
      for (int m = 0; m <= N; ++m) y.comp[m] += Rational(2) * z.comp[m];
      bool sl2ok = gr_equal_canonical(G, x, y);
      rep.add("Lp1-Lm1-commutator" + tag, sl2ok,
              sl2ok ? "" : grvec_brief(x) + " vs " + grvec_brief(y));
    }
    {
      GrVec lp = gr_ladder(G, 1, g);
      GrVec a = gr_ladder(G, 0, lp);
      GrVec b = gr_ladder(G, 1, gr_ladder(G, 0, g));
      for (int m = 0; m <= N; ++m) b.comp[m] -= lp.comp[m];
      bool ok = gr_equal_canonical(G, a, b);
      rep.add("L0-Lp1-commutator" + tag, ok, ok ? "" : grvec_brief(a));
    }
  }

  // (7) Ladder action through theta, with the carry terms:
  //     L(-1) theta([v]_{kl}) = theta([L(-1)v]_{(k+1)l})
  //                             + theta([v]_{(k+1)(l+1)}) L(-1)  (k, l <= N-1)
  //     L(+1) theta([v]_{kl}) = theta([(L(+1)+2L(0)+L(-1))v]_{(k-1)l})
  //                             + theta([v]_{(k-1)(l-1)}) L(+1)  (k >= 1).
  for (const auto& pv : vbasis) {
    State v = State::monomial(pv);
    State lv = alg.sl2(-1, v);
    State mv = alg.sl2(1, v) + Rational(2) * alg.sl2(0, v) + alg.sl2(-1, v);
    for (int k = 0; k <= N; ++k)
      for (int l = 0; l <= N; ++l)
        for (const auto& g : gbasis) {
          if (g.comp[l].is_zero()) continue;
          std::string tag = "[v=" + partition_brief(pv) + ",(" + std::to_string(k) + "," +
                            std::to_string(l) + "),g=" + grvec_brief(g) + "]";
          if (k <= N - 1 && l <= N - 1) {
            GrVec lhs = gr_ladder(G, -1, theta(G, elem(k, l, v), g));
            GrVec rhs = theta(G, elem(k + 1, l, lv), g);
            GrVec carry = theta(G, elem(k + 1, l + 1, v), gr_ladder(G, -1, g));
            for (int m = 0; m <= N; ++m) rhs.comp[m] += carry.comp[m];
            bool ok = gr_equal_canonical(G, lhs, rhs);
            rep.add("Lm1-theta-carry" + tag, ok,
                    ok ? "" : grvec_brief(lhs) + " vs " + grvec_brief(rhs));
          }
          if (k >= 1) {
            GrVec lhs = gr_ladder(G, 1, theta(G, elem(k, l, v), g));
            GrVec rhs = theta(G, elem(k - 1, l, mv), g);
            if (l >= 1) {
              GrVec carry = theta(G, elem(k - 1, l - 1, v), gr_ladder(G, 1, g));
              for (int m = 0; m <= N; ++m) rhs.comp[m] += carry.comp[m];
            }
            bool ok = gr_equal_canonical(G, lhs, rhs);
            rep.add("Lp1-theta-carry" + tag, ok,
                    ok ? "" : grvec_brief(lhs) + " vs " + grvec_brief(rhs));
          }
        }
  }

  // (8) Faithfulness at the cutoff: the joint kernel on Gr_l of the maps
  // theta([v]_{0l}), v up to the cutoff, is zero (checked per depth).
  for (int l = 0; l <= N; ++l)
    for (int d = 0; d <= dmax; ++d) {
      const auto& cols = G.basis(l, d);
      if (cols.empty()) continue;
      ReducedBasis constraints;
      for (const auto& pv : vbasis) {
        State v = State::monomial(pv);
        UMatrix A = elem(0, l, v);
        std::map<int, SparseRow> rows;  // target coordinate -> row over columns
        for (size_t j = 0; j < cols.size(); ++j) {
          GrVec img = theta(G, A, gr_basis_vec(G, l, cols[j]));
          if (img.comp[0].is_zero()) continue;
          auto coords = G.class_coords(0, d - l, img.comp[0]);
          if (!coords) continue;
          for (size_t t = 0; t < coords->size(); ++t)
            if ((*coords)[t] != 0) rows[int(t)][int(j)] = (*coords)[t];
        }
        for (const auto& [t, row] : rows) constraints.insert(row);
      }
      bool faithful = constraints.rank() == int(cols.size());
      rep.add("faithful[(" + std::to_string(l) + "," + std::to_string(d) + ")]", faithful,
              faithful ? ""
                       : "joint kernel dimension " +
                             std::to_string(int(cols.size()) - constraints.rank()));
    }

  return rep;
}

// Global coordinates over the canonical graded basis, for span computations.
class GrCoords {
 public:
  explicit GrCoords(const GrStructure& G) : G_(G) {
    for (int n = 0; n <= G.levels(); ++n)
      for (int d = 0; d <= G.module().dmax(); ++d) {
        offset_[{n, d}] = total_;
        total_ += int(G.basis(n, d).size());
      }
  }
  int total() const { return total_; }
  SparseRow row_of(const GrVec& canonical) const {
    SparseRow r;
    for (int n = 0; n <= G_.levels(); ++n)
      for (const auto& [d, wd] : canonical.comp[n].depth_components()) {
        auto coords = G_.class_coords(n, d, wd);
        if (!coords) throw UnstableFiltration("GrCoords: vector outside the graded basis");
        int base = offset_.at({n, d});
        for (size_t i = 0; i < coords->size(); ++i)
          if ((*coords)[i] != 0) r[base + int(i)] = (*coords)[i];
      }
    return r;
  }

 private:
  const GrStructure& G_;
  std::map<std::pair<int, int>, int> offset_;
  int total_ = 0;
};

// Is the computed Omega_n exactly the span of depths <= n? True for the
// irreducible Fock modules, false e.g. for a Verma module with a singular
// vector.
inline bool omega_equals_depth_truncation(const GrStructure& G) {
  const LbModule& W = G.module();
  for (int n = 0; n <= G.levels(); ++n)
    for (int d = 0; d <= W.dmax(); ++d) {
      int expect = d <= n ? int(W.basis(d).size()) : 0;
      if (G.filtration().dim(n, d) != expect) return false;
    }
  return true;
}

// Cyclicity and summand structure: close each canonical basis vector under
// theta([v]_{kl}) and the ladder operators (restricted to images that stay in
// the window), then count distinct minimal closures by merging overlapping
// spans. An irreducible module gives every closure full rank and one summand.
inline Report irreducibility_probe(const GrStructure& G, int v_cutoff, int expected_summands) {
  const LbModule& W = G.module();
  const VertexAlgebra& alg = W.algebra();
  const int N = G.levels();
  Report rep;
  rep.suite = "irreducibility-probe";
  rep.meta["module"] = W.label();
  rep.meta["v_cutoff"] = std::to_string(v_cutoff);

  GrCoords coords(G);
  auto vbasis = alg.basis_upto(v_cutoff);

  // depth-shift-guarded operators
  auto apply_ops = [&](const GrVec& g, std::vector<GrVec>& images) {
    int depth = 0;
    for (int n = 0; n <= N; ++n)
      if (!g.comp[n].is_zero()) depth = std::max(depth, g.comp[n].max_depth());
    for (const auto& pv : vbasis) {
      if (pv.empty()) continue;
      State v = State::monomial(pv);
      for (int k = 0; k <= N; ++k)
        for (int l = 0; l <= N; ++l) {
          if (g.comp[l].is_zero()) continue;
          if (depth + k - l < 0 || depth + k - l > W.dmax()) continue;
          images.push_back(theta_apply(G, UMatrix::elementary(N, k, l, v), g));
        }
    }
    bool top_empty = g.comp[N].is_zero();
    if (top_empty && depth + 1 <= W.dmax()) images.push_back(gr_ladder(G, -1, g));
    images.push_back(gr_ladder(G, 1, g));
  };

  auto closure_of = [&](const GrVec& seed) {
    ReducedBasis span;
    std::vector<GrVec> work{*G.canonicalize(seed)};
    span.insert(coords.row_of(work[0]));
    while (!work.empty()) {
      GrVec g = std::move(work.back());
      work.pop_back();
      std::vector<GrVec> images;
      apply_ops(g, images);
      for (auto& img : images) {
        SparseRow r = coords.row_of(img);
        if (!r.empty() && span.insert(r)) work.push_back(std::move(img));
      }
    }
    return span;
  };

  auto seeds = gr_canonical_basis(G, 0);
  std::vector<ReducedBasis> spans;
  bool all_cyclic = true;
  for (const auto& s : seeds) {
    spans.push_back(closure_of(s));
    if (spans.back().rank() != coords.total()) all_cyclic = false;
  }
  rep.meta["total_dim"] = std::to_string(coords.total());

  // Merge overlapping spans (union-find over seeds).
  std::vector<int> parent(seeds.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = int(i);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (size_t i = 0; i < seeds.size(); ++i)
    for (size_t j = i + 1; j < seeds.size(); ++j) {
      ReducedBasis merged;
      int ri = spans[i].rank(), rj = spans[j].rank();
      for (const auto& [p, row] : spans[i].rows()) merged.insert(row);
      for (const auto& [p, row] : spans[j].rows()) merged.insert(row);
      if (merged.rank() < ri + rj) parent[find(int(j))] = find(int(i));
    }
  std::set<int> roots;
  for (size_t i = 0; i < seeds.size(); ++i) roots.insert(find(int(i)));
  rep.meta["summands"] = std::to_string(roots.size());
  rep.add("summand-count", int(roots.size()) == expected_summands,
          "found " + std::to_string(roots.size()) + ", expected " +
              std::to_string(expected_summands));
  if (expected_summands == 1)
    rep.add("cyclic-from-every-basis-vector", all_cyclic, "");
  return rep;
}

// Residue operator Res_x x^{l-k-1} Y_W(x^{L(0)} u, x) acting on the module.
inline ModState residue_mode_op(const LbModule& W, const State& u, long l, long k,
                                const ModState& w) {
  ModState out;
  for (const auto& [wu, uc] : u.components()) out += W.mode_act_raw(uc, wu + l - k - 1, w);
  return out;
}

}  // namespace voamat
