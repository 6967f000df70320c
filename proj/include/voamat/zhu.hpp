// Level-N products on V itself (the diagonal corner of the matrix product),
// centrality of the conformal vector modulo the O-span, and the
// polynomial-algebra probe for the rank-1 Heisenberg at level 0.
#pragma once

#include "voamat/reduction.hpp"

namespace voamat {

// u *_N v = sum_{m=0}^{N} binom(-N-1, m)
//           Res_x x^{-N-m-1} (1+x)^N Y((1+x)^{L(0)}u, x) v.
// Computed directly (double binomial sum over mode products); agreement with
// the (N,N) diamond entry is a test, not an implementation detail.
inline State dlm_product(const VertexAlgebra& alg, int N, const State& u, const State& v) {
  if (N < 0) throw std::invalid_argument("dlm_product: negative level");
  State out;
  for (const auto& [wu, uc] : u.components())
    for (long m = 0; m <= N; ++m) {
      Rational c0 = gen_binomial(-N - 1, m);
      if (c0 == 0) continue;
      for (long i = 0; i <= N + wu; ++i) {
        Rational c = c0 * gen_binomial(long(N + wu), i);
        if (c == 0) continue;
        out += c * alg.mode_product_raw(uc, -N - 1 - m + i, v);
      }
    }
  if (out.max_weight() > alg.wmax())
    throw TruncationExceeded("dlm_product: result leaves the weight window");
  return out;
}

// [omega, v]_{*N} reduces to zero at the (N,N) corner for all basis v up to
// the cutoff.
inline Report center_check(ReductionEngine& eng, int N, int v_cutoff, int reduce_cutoff) {
  const VertexAlgebra& alg = eng.algebra();
  Report rep;
  rep.suite = "conformal-center";
  rep.meta["algebra"] = alg.descriptor().label();
  rep.meta["level"] = std::to_string(N);
  rep.meta["v_cutoff"] = std::to_string(v_cutoff);
  if (N > eng.size()) throw std::invalid_argument("center_check: level exceeds matrix size");
  State om = alg.conformal_vector();
  for (const auto& pv : alg.basis_upto(v_cutoff)) {
    State v = State::monomial(pv);
    State comm = dlm_product(alg, N, om, v) - dlm_product(alg, N, v, om);
    UMatrix m = UMatrix::elementary(eng.size(), N, N, comm);
    bool ok = eng.canonical_reduce(m, reduce_cutoff).is_zero();
    rep.add("commutator-reduces[v=" + partition_brief(pv) + "]", ok,
            ok ? "" : state_brief(eng.reduce_state(N, N, comm)));
  }
  return rep;
}

// Level-0 Heisenberg: the classes of alpha(-1)^m 1 are independent modulo the
// O-span and multiply like the powers of a single variable.
inline Report polynomial_algebra_probe(ReductionEngine& eng, int w_max) {
  const VertexAlgebra& alg = eng.algebra();
  if (alg.kind() != AlgebraKind::Heisenberg)
    throw std::invalid_argument("polynomial_algebra_probe: Heisenberg only");
  Report rep;
  rep.suite = "polynomial-algebra-probe";
  rep.meta["w_max"] = std::to_string(w_max);

  // (i) Independence: echelonize the reduced classes of alpha(-1)^m 1.
  ReducedBasis span;
  bool independent = true;
  std::string certificate;
  for (int m = 0; m <= w_max; ++m) {
    Partition p(m, 1);  // alpha(-1)^m 1
    State reduced = eng.reduce_state(0, 0, State::monomial(p));
    certificate += "x^" + std::to_string(m) + " -> " + state_brief(reduced) + "; ";
    if (!span.insert(eng.ambient().row_of(reduced))) independent = false;
  }
  rep.add("classes-independent", independent);
  rep.meta["classes"] = certificate;

  // (ii) class(a)^m multiplies to class(alpha(-1)^m 1).
  State a = State::monomial({1});
  State power = State::vacuum();
  for (int m = 1; m <= w_max; ++m) {
    power = dlm_product(alg, 0, a, power);
    State lhs = eng.reduce_state(0, 0, power);
    State rhs = eng.reduce_state(0, 0, State::monomial(Partition(m, 1)));
    rep.add("power-law[m=" + std::to_string(m) + "]", lhs == rhs,
            state_brief(lhs) + " vs " + state_brief(rhs));
  }
  return rep;
}

}  // namespace voamat
