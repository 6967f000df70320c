// Concrete vertex algebras (rank-1 Heisenberg, Virasoro V_c) with PBW bases,
// exact mode products u_{(j)}v and the residue dressings used by the diamond
// product.
//
// Mode products are computed by structural recursion on the left argument's
// leading generator mode via the iterate formula
//   (g_{(m)}b)_{(j)} = sum_{i>=0} (-1)^i binom(m,i)
//                      ( g_{(m-i)} b_{(j+i)} - (-1)^m b_{(m+j-i)} g_{(i)} ),
// with the generator's own modes given by the bracket relations
//   [alpha(m), alpha(n)] = m delta_{m+n,0}
//   [L(m), L(n)] = (m-n)L(m+n) + (c/12)(m^3-m) delta_{m+n,0}.
//
// Exactness note: internal arithmetic carries states of any weight (the
// recursion can pass through intermediates slightly above a representable final
// result); the weight window W_max is enforced on the results of the public
// operations, which throw TruncationExceeded instead of truncating.
#pragma once

#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "voamat/laurent.hpp"
#include "voamat/rational.hpp"
#include "voamat/report.hpp"
#include "voamat/state.hpp"

namespace voamat {

enum class AlgebraKind { Heisenberg, Virasoro };

struct AlgebraDescriptor {
  AlgebraKind kind = AlgebraKind::Heisenberg;
  Rational central_charge = Rational(0);  // Virasoro only
  int weight_cutoff = 8;                  // W_max

  std::string label() const {
    std::ostringstream os;
    if (kind == AlgebraKind::Heisenberg)
      os << "heisenberg";
    else
      os << "virasoro(c=" << rat_str(central_charge) << ")";
    os << ",wmax=" << weight_cutoff;
    return os.str();
  }
};

inline std::string state_brief(const State& s);  // defined below

class VertexAlgebra {
 public:
  explicit VertexAlgebra(AlgebraDescriptor d) : desc_(std::move(d)) {
    if (desc_.weight_cutoff < 2)
      throw std::invalid_argument("weight cutoff must be >= 2 (conformal vector in scope)");
  }

  const AlgebraDescriptor& descriptor() const { return desc_; }
  AlgebraKind kind() const { return desc_.kind; }
  int wmax() const { return desc_.weight_cutoff; }
  int min_part() const { return desc_.kind == AlgebraKind::Heisenberg ? 1 : 2; }

  // Deterministically ordered PBW basis of the weight-w slice.
  std::vector<Partition> basis(int w) const { return partitions_of(w, min_part()); }

  std::vector<Partition> basis_upto(int w) const {
    std::vector<Partition> out;
    for (int i = 0; i <= w; ++i)
      for (auto& p : basis(i)) out.push_back(std::move(p));
    return out;
  }

  // Conformal vector: (1/2) alpha(-1)^2 1 (c = 1) or L(-2)1.
  State conformal_vector() const {
    if (desc_.kind == AlgebraKind::Heisenberg) return State::monomial({1, 1}, rat(1, 2));
    return State::monomial({2});
  }

  Rational central_charge() const {
    return desc_.kind == AlgebraKind::Heisenberg ? Rational(1) : desc_.central_charge;
  }

  // --- public window-checked operations -----------------------------------

  // u_{(j)} v
  State mode_product(const State& u, long j, const State& v) const {
    return checked(mode_product_raw(u, j, v));
  }

  // L(-1), L(0), L(+1)
  State sl2(int which, const State& v) const {
    if (which < -1 || which > 1) throw std::invalid_argument("sl2: which must be -1, 0 or +1");
    return checked(sl2_raw(which, v));
  }

  // Res_x f(x) (1+x)^l Y((1+x)^{L(0)}u, x) v, the diamond dressing.
  State dressed_residue(const LaurentPoly& f, long l, const State& u, const State& v) const {
    return checked(dressed_residue_raw(f, l, u, v));
  }

  // --- unchecked exact arithmetic (used internally and by the suites) -----

  State mode_product_raw(const State& u, long j, const State& v) const {
    State out;
    for (const auto& [pu, cu] : u.terms)
      for (const auto& [pv, cv] : v.terms) out += (cu * cv) * mode_mono(pu, j, pv);
    return out;
  }

  State sl2_raw(int which, const State& v) const {
    return mode_product_raw(conformal_vector(), which + 1, v);
  }

  State dressed_residue_raw(const LaurentPoly& f, long l, const State& u, const State& v) const {
    if (l < 0) throw std::invalid_argument("dressed_residue: negative column index");
    State out;
    for (const auto& [wu, uc] : u.components()) {
      // (1+x)^{L(0)} u = (1+x)^{wu} u on the weight-wu component.
      LaurentPoly g = f * one_plus_x_pow(l + wu);
      for (const auto& [e, c] : g.terms) out += c * mode_product_raw(uc, e, v);
    }
    return out;
  }

  // Generator mode as a vertex-operator mode: g_{(i)} with g = alpha(-1)1
  // resp. omega; i.e. alpha(i) resp. L(i-1).
  State gen_vo_mode(long i, const State& s) const {
    return desc_.kind == AlgebraKind::Heisenberg ? apply_alpha(i, s) : apply_L(i - 1, s);
  }

  // Heisenberg current mode alpha(m) on V (alpha(0) acts as 0 here).
  State apply_alpha(long m, const State& s) const {
    State out;
    for (const auto& [p, c] : s.terms) out += c * alpha_mono(m, p);
    return out;
  }

  // Virasoro mode L(m) on V.
  State apply_L(long m, const State& s) const {
    State out;
    for (const auto& [p, c] : s.terms) out += c * L_mono(m, p);
    return out;
  }

 private:
  State checked(State s) const {
    if (s.max_weight() > wmax())
      throw TruncationExceeded("result weight " + std::to_string(s.max_weight()) +
                               " exceeds window W_max=" + std::to_string(wmax()));
    return s;
  }

  State alpha_mono(long m, const Partition& p) const {
    if (m < 0) return State::monomial(partition_insert(p, int(-m)));
    if (m == 0) return State::zero();
    // [alpha(m), alpha(-m)] = m; remove one matching part per occurrence.
    long count = std::count(p.begin(), p.end(), int(m));
    if (count == 0) return State::zero();
    Partition q;
    bool removed = false;
    for (int part : p) {
      if (!removed && part == int(m)) {
        removed = true;
        continue;
      }
      q.push_back(part);
    }
    return State::monomial(q, Rational(m * count));
  }

  State L_mono(long m, const Partition& p) const {
    if (p.empty()) {
      // L(-n)1 for n >= 2 creates; L(-1)1 = 0 (vacuum is sl2-lowest); L(m)1 = 0, m >= 0.
      if (m <= -2) return State::monomial({int(-m)});
      return State::zero();
    }
    long l1 = p[0];
    if (m <= -l1) {  // stays PBW-sorted
      Partition q = p;
      q.insert(q.begin(), int(-m));
      return State::monomial(q);
    }
    Partition rest(p.begin() + 1, p.end());
    // L(m)L(-l1) = L(-l1)L(m) + (m+l1)L(m-l1) + (c/12)(m^3-m) delta_{m,l1}
    State out;
    State inner = L_mono_state(m, rest);
    for (const auto& [q, c] : inner.terms) out += c * L_mono(-l1, q);
    out += Rational(m + l1) * L_mono_state(m - l1, rest);
    if (m == l1) {
      Rational central = central_charge() * Rational(m * m * m - m) / Rational(12);
      out += central * State::monomial(rest);
    }
    return out;
  }

  State L_mono_state(long m, const Partition& p) const { return L_mono(m, p); }

  // u_{(j)} v for basis monomials, memoized.
  State mode_mono(const Partition& pu, long j, const Partition& pv) const {
    int wu = partition_weight(pu), wv = partition_weight(pv);
    if (wu + wv - j - 1 < 0) return State::zero();  // grading
    if (pu.empty()) return j == -1 ? State::monomial(pv) : State::zero();  // vacuum
    MemoKey key{pu, j, pv};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // u = g_{(m0)} u'
    long m0 = desc_.kind == AlgebraKind::Heisenberg ? -long(pu[0]) : -long(pu[0]) + 1;
    Partition rest(pu.begin() + 1, pu.end());
    int wrest = wu - pu[0];
    long sign_m0 = (m0 % 2 == 0) ? 1 : -1;

    long i_hi_first = wrest + wv - j - 1;  // beyond: u'_{(j+i)}v = 0 (lower truncation)
    long i_hi_second = wv + (desc_.kind == AlgebraKind::Virasoro ? 1 : 0);  // beyond: g_{(i)}v = 0
    State out;
    for (long i = 0; i <= std::max(i_hi_first, i_hi_second); ++i) {
      Rational b = gen_binomial(m0, i);
      if (i % 2 != 0) b = -b;
      if (b == 0) continue;
      if (i <= i_hi_first) {
        State inner = mode_mono(rest, j + i, pv);
        if (!inner.is_zero()) out += b * gen_vo_mode(m0 - i, inner);
      }
      if (i <= i_hi_second) {
        State gv = gen_vo_mode(i, State::monomial(pv));
        if (!gv.is_zero()) {
          State t = mode_product_raw(State::monomial(rest), m0 + j - i, gv);
          out += (-Rational(sign_m0) * b) * t;
        }
      }
    }
    memo_.emplace(std::move(key), out);
    return out;
  }

  using MemoKey = std::tuple<Partition, long, Partition>;

  AlgebraDescriptor desc_;
  // Pure-function cache: duplicate computation yields identical values.
  mutable std::map<MemoKey, State> memo_;
};

// Short human-readable form for witnesses in reports.
inline std::string state_brief(const State& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  int shown = 0;
  for (const auto& [p, c] : s.terms) {
    if (++shown > 6) {
      os << " + ...";
      break;
    }
    if (!first) os << " + ";
    first = false;
    os << rat_str(c) << "*[";
    for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << "]";
  }
  return os.str();
}

inline std::string partition_brief(const Partition& p) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << "]";
  return os.str();
}

}  // namespace voamat
