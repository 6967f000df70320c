// Lower-bounded modules over the built-in vertex algebras: Fock modules
// Fock_mu for the Heisenberg algebra and Verma modules Verma_{c,h} for the
// Virasoro algebra, plus finite direct sums. Vectors are PBW monomials
// acting on the lowest-weight vector of their component; the mode action
// (Y_W)_j(u) is computed by the same iterate recursion as in the algebra,
// with the generator modes replaced by their module realizations
//   Fock:  alpha(m)1_mu: m<0 create, m=0 multiply by mu, m>0 annihilate
//   Verma: L(m)v_h: m<0 create (parts >= 1), m=0 multiply by h, m>0 kill v_h.
//
// Internal arithmetic is unchecked; the depth window is enforced at the
// public mode_act/sl2w boundary.
#pragma once

#include "voamat/algebra.hpp"

namespace voamat {

struct ModuleComponent {
  enum class Kind { Fock, Verma } kind = Kind::Fock;
  Rational mu = Rational(0);  // Fock
  Rational h = Rational(0);   // Verma

  Rational lowest_weight() const {
    return kind == Kind::Fock ? Rational(mu * mu / 2) : h;
  }
  std::string label() const {
    if (kind == Kind::Fock) return "fock(mu=" + rat_str(mu) + ")";
    return "verma(h=" + rat_str(h) + ")";
  }
};

// (component index, PBW partition acting on that component's lowest vector).
using ModKey = std::pair<int, Partition>;

inline int modkey_depth(const ModKey& k) { return partition_weight(k.second); }

class ModState {
 public:
  std::map<ModKey, Rational> terms;

  ModState() = default;
  static ModState monomial(ModKey k, const Rational& c = Rational(1)) {
    ModState s;
    if (c != 0) s.terms[std::move(k)] = c;
    return s;
  }
  static ModState zero() { return {}; }
  bool is_zero() const { return terms.empty(); }

  void add_term(const ModKey& k, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(k);
    if (it == terms.end()) {
      terms.emplace(k, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  ModState& operator+=(const ModState& o) {
    for (const auto& [k, c] : o.terms) add_term(k, c);
    return *this;
  }
  friend ModState operator+(ModState a, const ModState& b) { return a += b; }
  ModState operator-() const {
    ModState r;
    for (const auto& [k, c] : terms) r.terms[k] = -c;
    return r;
  }
  ModState& operator-=(const ModState& o) { return *this += (-o); }
  friend ModState operator-(ModState a, const ModState& b) { return a -= b; }
  friend ModState operator*(const Rational& s, const ModState& v) {
    ModState r;
    if (s == 0) return r;
    for (const auto& [k, c] : v.terms) r.terms[k] = s * c;
    return r;
  }
  bool operator==(const ModState& o) const { return terms == o.terms; }

  int max_depth() const {
    int d = 0;
    for (const auto& [k, c] : terms) d = std::max(d, modkey_depth(k));
    return d;
  }
  std::map<int, ModState> depth_components() const {
    std::map<int, ModState> out;
    for (const auto& [k, c] : terms) out[modkey_depth(k)].add_term(k, c);
    return out;
  }
};

inline std::string modstate_brief(const ModState& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  int shown = 0;
  for (const auto& [k, c] : s.terms) {
    if (++shown > 6) {
      os << " + ...";
      break;
    }
    if (shown > 1) os << " + ";
    os << rat_str(c) << "*" << partition_brief(k.second) << "@" << k.first;
  }
  return os.str();
}

class LbModule {
 public:
  LbModule(const VertexAlgebra& alg, std::vector<ModuleComponent> comps, int depth_cutoff)
      : alg_(alg), comps_(std::move(comps)), dmax_(depth_cutoff) {
    if (comps_.empty()) throw std::invalid_argument("module needs at least one component");
    if (dmax_ < 0) throw std::invalid_argument("negative depth cutoff");
    for (const auto& c : comps_) {
      bool fock = c.kind == ModuleComponent::Kind::Fock;
      if (fock != (alg.kind() == AlgebraKind::Heisenberg))
        throw std::invalid_argument("module component kind does not match the algebra");
    }
  }

  const VertexAlgebra& algebra() const { return alg_; }
  int component_count() const { return int(comps_.size()); }
  const ModuleComponent& component(int i) const { return comps_.at(i); }
  int dmax() const { return dmax_; }

  std::string label() const {
    std::string s;
    for (size_t i = 0; i < comps_.size(); ++i) s += (i ? "+" : "") + comps_[i].label();
    return s + ",dmax=" + std::to_string(dmax_);
  }

  // Depth-d basis across components, deterministic order.
  std::vector<ModKey> basis(int d) const {
    std::vector<ModKey> out;
    for (int c = 0; c < int(comps_.size()); ++c)
      for (const auto& p : partitions_of(d, 1)) out.push_back({c, p});
    return out;
  }
  std::vector<ModKey> basis_upto(int d) const {
    std::vector<ModKey> out;
    for (int i = 0; i <= d; ++i)
      for (auto& k : basis(i)) out.push_back(std::move(k));
    return out;
  }

  // L_W(0) eigenvalue of a basis monomial.
  Rational weight_of(const ModKey& k) const {
    return comps_.at(k.first).lowest_weight() + Rational(modkey_depth(k));
  }

  // --- public depth-checked operations ------------------------------------

  // (Y_W)_j(u) w
  ModState mode_act(const State& u, long j, const ModState& w) const {
    return checked(mode_act_raw(u, j, w));
  }

  ModState sl2w(int which, const ModState& w) const {
    if (which < -1 || which > 1) throw std::invalid_argument("sl2w: which must be -1, 0 or +1");
    return checked(sl2w_raw(which, w));
  }

  // Res_x f(x) (1+x)^l Y_W((1+x)^{L(0)}u, x) w
  ModState dressed_act(const LaurentPoly& f, long l, const State& u, const ModState& w) const {
    if (l < 0) throw std::invalid_argument("dressed_act: negative column index");
    ModState out;
    for (const auto& [wu, uc] : u.components()) {
      LaurentPoly g = f * one_plus_x_pow(l + wu);
      for (const auto& [e, c] : g.terms) out += c * mode_act_raw(uc, e, w);
    }
    return checked(out);
  }

  // --- unchecked exact arithmetic -----------------------------------------

  ModState mode_act_raw(const State& u, long j, const ModState& w) const {
    ModState out;
    for (const auto& [pu, cu] : u.terms)
      for (const auto& [kw, cw] : w.terms) out += (cu * cw) * act_mono(pu, j, kw);
    return out;
  }

  ModState sl2w_raw(int which, const ModState& w) const {
    return mode_act_raw(alg_.conformal_vector(), which + 1, w);
  }

  // Module realization of the algebra generator's vertex-operator mode:
  // alpha(i) on Fock components, L(i-1) on Verma components.
  ModState gen_mode_act(long i, const ModState& w) const {
    ModState out;
    for (const auto& [k, c] : w.terms)
      out += c * (alg_.kind() == AlgebraKind::Heisenberg ? alpha_act(i, k) : L_act(i - 1, k));
    return out;
  }

 private:
  ModState checked(ModState s) const {
    if (s.max_depth() > dmax_)
      throw TruncationExceeded("result depth " + std::to_string(s.max_depth()) +
                               " exceeds module window depth " + std::to_string(dmax_));
    return s;
  }

  ModState alpha_act(long m, const ModKey& k) const {
    const auto& [comp, p] = k;
    if (m < 0) return ModState::monomial({comp, partition_insert(p, int(-m))});
    if (m == 0) return ModState::monomial(k, comps_.at(comp).mu);
    long count = std::count(p.begin(), p.end(), int(m));
    if (count == 0) return ModState::zero();
    Partition q;
    bool removed = false;
    for (int part : p) {
      if (!removed && part == int(m)) {
        removed = true;
        continue;
      }
      q.push_back(part);
    }
    return ModState::monomial({comp, q}, Rational(m * count));
  }

  ModState L_act(long m, const ModKey& k) const {
    const auto& [comp, p] = k;
    if (p.empty()) {
      if (m < 0) return ModState::monomial({comp, {int(-m)}});
      if (m == 0) return ModState::monomial(k, comps_.at(comp).h);
      return ModState::zero();
    }
    long l1 = p[0];
    if (m <= -l1) {
      Partition q = p;
      q.insert(q.begin(), int(-m));
      return ModState::monomial({comp, q});
    }
    Partition rest(p.begin() + 1, p.end());
    ModKey krest{comp, rest};
    // L(m)L(-l1) = L(-l1)L(m) + (m+l1)L(m-l1) + (c/12)(m^3-m) delta_{m,l1}
    ModState out;
    ModState inner = L_act(m, krest);
    for (const auto& [k2, c2] : inner.terms) out += c2 * L_act(-l1, k2);
    out += Rational(m + l1) * L_act(m - l1, krest);
    if (m == l1) {
      Rational central = alg_.central_charge() * Rational(m * m * m - m) / Rational(12);
      out += central * ModState::monomial(krest);
    }
    return out;
  }

  // u_{(j)} acting on a module basis monomial, memoized.
  ModState act_mono(const Partition& pu, long j, const ModKey& kw) const {
    int wu = partition_weight(pu), dw = modkey_depth(kw);
    if (wu + dw - j - 1 < 0) return ModState::zero();  // would lower below the floor
    if (pu.empty()) return j == -1 ? ModState::monomial(kw) : ModState::zero();
    MemoKey key{pu, j, kw};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    long m0 = alg_.kind() == AlgebraKind::Heisenberg ? -long(pu[0]) : -long(pu[0]) + 1;
    Partition rest(pu.begin() + 1, pu.end());
    int wrest = wu - pu[0];
    long sign_m0 = (m0 % 2 == 0) ? 1 : -1;

    long i_hi_first = wrest + dw - j - 1;  // beyond: u'_{(j+i)}w = 0
    // Generator modes kill anything lowered below depth 0, except the diagonal
    // zero-mode which survives at every depth; alpha(i) vanishes for i > dw,
    // L(i-1) for i > dw + 1.
    long i_hi_second = dw + (alg_.kind() == AlgebraKind::Virasoro ? 1 : 0);
    ModState out;
    for (long i = 0; i <= std::max(i_hi_first, i_hi_second); ++i) {
      Rational b = gen_binomial(m0, i);
      if (i % 2 != 0) b = -b;
      if (b == 0) continue;
      if (i <= i_hi_first) {
        ModState inner = act_mono(rest, j + i, kw);
        if (!inner.is_zero()) out += b * gen_mode_act(m0 - i, inner);
      }
      if (i <= i_hi_second) {
        ModState gw = gen_mode_act(i, ModState::monomial(kw));
        if (!gw.is_zero()) {
          ModState t = mode_act_raw(State::monomial(rest), m0 + j - i, gw);
          out += (-Rational(sign_m0) * b) * t;
        }
      }
    }
    memo_.emplace(std::move(key), out);
    return out;
  }

  using MemoKey = std::tuple<Partition, long, ModKey>;

  const VertexAlgebra& alg_;
  std::vector<ModuleComponent> comps_;
  int dmax_;
  mutable std::map<MemoKey, ModState> memo_;
};

}  // namespace voamat
