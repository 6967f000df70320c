// Exact self-tests of the vertex-algebra identities the matrix construction
// relies on: the mode commutator formula, the translation derivative, the
// exponential identity e^{xL(-1)}(1+x)^{L(0)} = (1+x)^{L(-1)+L(0)}, and the
// commutator of L(-1)+L(0) with the dressed vertex operator.
#pragma once

#include <functional>
#include <random>

#include "voamat/algebra.hpp"

namespace voamat {

// Injectable mode product (u, j, v) -> u_{(j)}v. The default wires in the
// algebra's own arithmetic; tests substitute a corrupted table to confirm the
// suite actually detects faults.
using ModeFn = std::function<State(const State&, long, const State&)>;

namespace detail {

// binom(L(-1)+L(0), p) v computed two ways must agree; this is the closed form
//   sum_{i+j=p} (1/j!) L(-1)^j binom(wt v, i) v   (v homogeneous of weight wv)
inline State exp_identity_lhs(const VertexAlgebra& alg, const State& v, long p) {
  State out;
  for (const auto& [wv, vc] : v.components()) {
    for (long i = 0; i <= p; ++i) {
      long j = p - i;
      Rational c = gen_binomial(wv, i);
      if (c == 0) continue;
      State t = vc;
      Rational fact(1);
      for (long s = 1; s <= j; ++s) {
        t = alg.sl2_raw(-1, t);
        fact *= Rational(s);
      }
      if (t.is_zero()) continue;
      out += (c / fact) * t;
    }
  }
  return out;
}

// binom(A, p) v for A = L(-1)+L(0), expanded as A(A-1)...(A-p+1)v / p!.
inline State op_binom_L1L0(const VertexAlgebra& alg, const State& v, long p, long shift = 0) {
  State t = v;
  Rational fact(1);
  for (long i = 0; i < p; ++i) {
    // (A + shift - i) t
    State next = alg.sl2_raw(-1, t) + alg.sl2_raw(0, t);
    next += Rational(shift - i) * t;
    t = next;
    fact *= Rational(i + 1);
  }
  if (p == 0) return t;
  State out;
  for (const auto& [part, c] : t.terms) out.add_term(part, c / fact);
  return out;
}

}  // namespace detail

// binom(L(-1)+L(0)+shift, p) v, exact operator binomial. Shared with the
// right-unit closed form and the structural-generator families.
inline State op_binom(const VertexAlgebra& alg, long shift, long p, const State& v) {
  return detail::op_binom_L1L0(alg, v, p, shift);
}

inline Report voa_axiom_suite(const VertexAlgebra& alg, long sample_budget = 0,
                              unsigned long seed = 12345, ModeFn mode = nullptr) {
  if (!mode)
    mode = [&alg](const State& u, long j, const State& v) { return alg.mode_product_raw(u, j, v); };

  Report rep;
  rep.suite = "voa-axioms";
  rep.meta["algebra"] = alg.descriptor().label();
  const int wmax = alg.wmax();

  auto mono = [](const Partition& p) { return State::monomial(p); };

  // Collect candidate triples (u, v, w, m, n) for the commutator check, then
  // sample deterministically if the budget binds.
  struct Triple {
    Partition u, v, w;
    long m, n;
  };
  std::vector<Triple> triples;
  for (const auto& pu : alg.basis_upto(wmax))
    for (const auto& pv : alg.basis_upto(wmax))
      for (const auto& pw : alg.basis_upto(wmax)) {
        int wu = partition_weight(pu), wv = partition_weight(pv), ww = partition_weight(pw);
        if (wu + wv + ww > wmax) continue;
        for (long m = -2; m <= wu + wv; ++m)
          for (long n = -2; n <= wv + ww; ++n) {
            if (wu + wv + ww - m - n - 2 > wmax) continue;  // result not representable
            triples.push_back({pu, pv, pw, m, n});
          }
      }
  if (sample_budget > 0 && long(triples.size()) > sample_budget) {
    std::mt19937_64 rng(seed);
    std::shuffle(triples.begin(), triples.end(), rng);
    triples.resize(sample_budget);
  }
  rep.meta["commutator_triples"] = std::to_string(triples.size());

  // (i) [u_{(m)}, v_{(n)}] w = sum_{i>=0} binom(m,i) (u_{(i)}v)_{(m+n-i)} w
  for (const auto& t : triples) {
    State su = mono(t.u), sv = mono(t.v), sw = mono(t.w);
    State lhs = mode(su, t.m, mode(sv, t.n, sw)) - mode(sv, t.n, mode(su, t.m, sw));
    State rhs;
    int wu = partition_weight(t.u), wv = partition_weight(t.v);
    for (long i = 0; i <= wu + wv; ++i) {  // u_{(i)}v = 0 beyond lower truncation
      Rational b = gen_binomial(t.m, i);
      if (b == 0) continue;
      State uv = mode(su, i, sv);
      if (!uv.is_zero()) rhs += b * mode(uv, t.m + t.n - i, sw);
    }
    if (!(lhs == rhs)) {
      rep.add("mode-commutator", false,
              "u=" + partition_brief(t.u) + " m=" + std::to_string(t.m) + " v=" +
                  partition_brief(t.v) + " n=" + std::to_string(t.n) + " w=" +
                  partition_brief(t.w) + " lhs=" + state_brief(lhs) + " rhs=" + state_brief(rhs));
    }
  }
  if (rep.pass) rep.add("mode-commutator", true);

  // (ii) (L(-1)v)_{(n)} w = -n v_{(n-1)} w
  bool der_ok = true;
  for (const auto& pv : alg.basis_upto(wmax - 1))
    for (const auto& pw : alg.basis_upto(wmax)) {
      int wv = partition_weight(pv), ww = partition_weight(pw);
      if (wv + 1 + ww > wmax) continue;
      State dv = alg.sl2_raw(-1, mono(pv));
      for (long n = -1; n <= wv + ww + 1; ++n) {
        if (wv + ww - n > wmax) continue;
        State lhs = mode(dv, n, mono(pw));
        State rhs = Rational(-n) * mode(mono(pv), n - 1, mono(pw));
        if (!(lhs == rhs)) {
          der_ok = false;
          rep.add("translation-derivative", false,
                  "v=" + partition_brief(pv) + " n=" + std::to_string(n) +
                      " w=" + partition_brief(pw));
        }
      }
    }
  if (der_ok) rep.add("translation-derivative", true);

  // (iii) coefficientwise exponential identity:
  //   [x^p] e^{xL(-1)}(1+x)^{L(0)} v = binom(L(-1)+L(0), p) v
  bool exp_ok = true;
  for (const auto& pv : alg.basis_upto(wmax)) {
    int wv = partition_weight(pv);
    for (long p = 0; p <= wmax - wv; ++p) {
      State lhs = detail::exp_identity_lhs(alg, mono(pv), p);
      State rhs = detail::op_binom_L1L0(alg, mono(pv), p);
      if (!(lhs == rhs)) {
        exp_ok = false;
        rep.add("exp-translation-dilation", false,
                "v=" + partition_brief(pv) + " p=" + std::to_string(p));
      }
    }
  }
  if (exp_ok) rep.add("exp-translation-dilation", true);

  // (iv) [L(-1)+L(0), C_m(v)] x = C_m((L(-1)+L(0))v) x, where C_m(v) is the
  // x^{...} mode family of Y((1+x)^{L(0)}v, x):
  //   C_m(v) x = sum_i binom(wt v, i) v_{(m+i)} x  (v homogeneous).
  bool dress_ok = true;
  auto Cm = [&](const State& v, long m, const State& x) {
    State out;
    for (const auto& [wv, vc] : v.components())
      for (long i = 0; i <= wv; ++i) {
        Rational b = gen_binomial(wv, i);
        if (b != 0) out += b * mode(vc, m + i, x);
      }
    return out;
  };
  for (const auto& pv : alg.basis_upto(wmax))
    for (const auto& px : alg.basis_upto(wmax)) {
      int wv = partition_weight(pv), wx = partition_weight(px);
      if (wv + wx + 1 > wmax + 1) continue;  // keep L(-1) images representable
      State v = mono(pv), x = mono(px);
      State Dv = alg.sl2_raw(-1, v) + alg.sl2_raw(0, v);
      for (long m = -1; m <= wv + wx; ++m) {
        if (wv + wx - m > wmax) continue;
        State cmx = Cm(v, m, x);
        State lhs = alg.sl2_raw(-1, cmx) + alg.sl2_raw(0, cmx) -
                    Cm(v, m, alg.sl2_raw(-1, x) + alg.sl2_raw(0, x));
        State rhs = Cm(Dv, m, x);
        if (!(lhs == rhs)) {
          dress_ok = false;
          rep.add("dressed-operator-commutator", false,
                  "v=" + partition_brief(pv) + " m=" + std::to_string(m) +
                      " x=" + partition_brief(px));
        }
      }
    }
  if (dress_ok) rep.add("dressed-operator-commutator", true);

  // Creation property: u_{(-1-p)} 1 = L(-1)^p u / p!
  bool create_ok = true;
  for (const auto& pu : alg.basis_upto(wmax)) {
    int wu = partition_weight(pu);
    for (long p = 0; p + wu <= wmax; ++p) {
      State lhs = mode(mono(pu), -1 - p, State::vacuum());
      State t = mono(pu);
      Rational fact(1);
      for (long s = 1; s <= p; ++s) {
        t = alg.sl2_raw(-1, t);
        fact *= Rational(s);
      }
      State rhs;
      for (const auto& [part, c] : t.terms) rhs.add_term(part, c / fact);
      if (!(lhs == rhs)) {
        create_ok = false;
        rep.add("creation-property", false,
                "u=" + partition_brief(pu) + " p=" + std::to_string(p));
      }
    }
  }
  if (create_ok) rep.add("creation-property", true);

  // Vacuum annihilation, grading, lower truncation.
  bool vac_ok = true, grade_ok = true, trunc_ok = true;
  for (const auto& pu : alg.basis_upto(wmax))
    for (const auto& pv : alg.basis_upto(wmax)) {
      int wu = partition_weight(pu), wv = partition_weight(pv);
      for (long j = -2; j <= wu + wv + 2; ++j) {
        if (wu + wv - j - 1 > wmax) continue;
        State r = mode(mono(pu), j, mono(pv));
        if (pv.empty() && j >= 0 && !r.is_zero()) {
          vac_ok = false;
          rep.add("vacuum-annihilation", false,
                  "u=" + partition_brief(pu) + " j=" + std::to_string(j));
        }
        if (!r.is_zero() && !(r.is_homogeneous() && r.max_weight() == wu + wv - int(j) - 1)) {
          grade_ok = false;
          rep.add("grading", false, "u=" + partition_brief(pu) + " j=" + std::to_string(j) +
                                        " v=" + partition_brief(pv));
        }
        if (j >= wu + wv && !r.is_zero()) {
          trunc_ok = false;
          rep.add("lower-truncation", false,
                  "u=" + partition_brief(pu) + " j=" + std::to_string(j) +
                      " v=" + partition_brief(pv));
        }
      }
    }
  if (vac_ok) rep.add("vacuum-annihilation", true);
  if (grade_ok) rep.add("grading", true);
  if (trunc_ok) rep.add("lower-truncation", true);

  return rep;
}

}  // namespace voamat
