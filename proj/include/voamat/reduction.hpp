// Exact linear algebra over the graded ambient space: echelonized O-generator
// spans per matrix slot, canonical forms modulo the span, quotient dimension
// tables and structure constants, and C_n-quotient dimensions.
//
// Columns are ordered by weight DESCENDING (then by the deterministic basis
// order within a weight), so echelon pivots consume high-weight monomials and
// canonical representatives concentrate in low weight. O-generator
// realizations are not weight-homogeneous, so each slot is reduced over the
// full graded ambient (all weights up to the algebra's window) rather than
// block-by-block; the per-weight dimension table reads off non-pivot columns.
#pragma once

#include <optional>
#include <set>

#include "voamat/umatrix.hpp"

namespace voamat {

// Sparse coordinate row: column index -> nonzero coefficient.
using SparseRow = std::map<int, Rational>;

// Fixed column order for one algebra's graded ambient space.
class AmbientIndex {
 public:
  explicit AmbientIndex(const VertexAlgebra& alg) {
    for (int w = alg.wmax(); w >= 0; --w)
      for (const auto& p : alg.basis(w)) {
        index_[p] = int(cols_.size());
        cols_.push_back(p);
      }
  }

  int size() const { return int(cols_.size()); }
  int col(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::out_of_range("monomial outside ambient window");
    return it->second;
  }
  const Partition& partition(int c) const { return cols_.at(c); }
  int weight(int c) const { return partition_weight(cols_.at(c)); }

  SparseRow row_of(const State& s) const {
    SparseRow r;
    for (const auto& [p, c] : s.terms) r[col(p)] = c;
    return r;
  }
  State state_of(const SparseRow& r) const {
    State s;
    for (const auto& [c, q] : r) s.add_term(partition(c), q);
    return s;
  }

 private:
  std::vector<Partition> cols_;
  std::map<Partition, int> index_;
};

// Row-reduced echelon span with incremental insertion. Deterministic: pivots
// are leftmost columns; full back-reduction keeps rows in RREF, so reduce()
// is linear, idempotent, and annihilates exactly the row span.
class ReducedBasis {
 public:
  int rank() const { return int(rows_.size()); }
  const std::map<int, SparseRow>& rows() const { return rows_; }
  bool has_pivot(int col) const { return rows_.count(col) != 0; }

  SparseRow reduce(SparseRow r) const {
    auto it = r.begin();
    while (it != r.end()) {
      auto pivot = rows_.find(it->first);
      if (pivot == rows_.end()) {
        ++it;
        continue;
      }
      Rational c = it->second;
      // Subtracting touches only columns >= the pivot column; the iterator's
      // own entry is cancelled exactly.
      int col = it->first;
      for (const auto& [pc, pq] : pivot->second) {
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
    return r;
  }

  // Returns true when the row enlarged the span.
  bool insert(const SparseRow& row) {
    SparseRow r = reduce(row);
    if (r.empty()) return false;
    int pivot = r.begin()->first;
    Rational lead = r.begin()->second;
    for (auto& [c, q] : r) q /= lead;
    // Back-reduce existing rows against the new pivot.
    for (auto& [p, existing] : rows_) {
      auto it = existing.find(pivot);
      if (it == existing.end()) continue;
      Rational c = it->second;
      for (const auto& [rc, rq] : r) {
        auto jt = existing.find(rc);
        if (jt == existing.end()) {
          Rational q = -c * rq;
          if (q != 0) existing.emplace(rc, q);
        } else {
          jt->second -= c * rq;
          if (jt->second == 0) existing.erase(jt);
        }
      }
    }
    rows_.emplace(pivot, std::move(r));
    return true;
  }

 private:
  std::map<int, SparseRow> rows_;  // pivot column -> normalized row
};

// Spec'd per-(slot, weight) view: the weight-w components of all O-generator
// realizations touching weight w at that slot.
struct WeightBlock {
  Slot slot;
  int weight = 0;
  std::vector<Partition> ambient_basis;
  std::vector<std::vector<Rational>> generator_rows;
};

inline WeightBlock assemble_block(const VertexAlgebra& alg, int N, int k, int l, int w) {
  if (w > alg.wmax()) throw TruncationExceeded("assemble_block: weight beyond window");
  WeightBlock b;
  b.slot = {k, l};
  b.weight = w;
  b.ambient_basis = alg.basis(w);
  std::map<Partition, int> col;
  for (size_t i = 0; i < b.ambient_basis.size(); ++i) col[b.ambient_basis[i]] = int(i);
  for (const auto& g : o_generators(alg, N, k, l, w)) {
    std::vector<Rational> row(b.ambient_basis.size(), Rational(0));
    bool nonzero = false;
    for (const auto& [p, c] : g.realized.terms)
      if (partition_weight(p) == w) {
        row[col.at(p)] = c;
        nonzero = true;
      }
    if (nonzero) b.generator_rows.push_back(std::move(row));
  }
  return b;
}

class ReductionEngine {
 public:
  ReductionEngine(const VertexAlgebra& alg, int N)
      : alg_(alg), N_(N), ambient_(alg) {
    if (N < 0) throw std::invalid_argument("ReductionEngine: negative size");
  }

  const VertexAlgebra& algebra() const { return alg_; }
  int size() const { return N_; }
  const AmbientIndex& ambient() const { return ambient_; }

  const ReducedBasis& slot_basis(int k, int l) {
    auto it = slot_bases_.find({k, l});
    if (it != slot_bases_.end()) return it->second;
    return slot_bases_.emplace(Slot{k, l}, build_slot(k, l)).first->second;
  }

  // Install a precomputed (e.g. cached) echelon basis for a slot.
  void seed_slot(int k, int l, ReducedBasis rb) { slot_bases_[{k, l}] = std::move(rb); }
  bool slot_ready(int k, int l) const { return slot_bases_.count({k, l}) != 0; }

  State reduce_state(int k, int l, const State& s) {
    return ambient_.state_of(slot_basis(k, l).reduce(ambient_.row_of(s)));
  }

  UMatrix canonical_reduce(const UMatrix& A, int cutoff) {
    if (A.size() != N_) throw SizeMismatch("canonical_reduce: size mismatch");
    if (cutoff > alg_.wmax()) throw TruncationExceeded("canonical_reduce: cutoff beyond window");
    UMatrix out(N_);
    for (const auto& [kl, s] : A.entries()) {
      if (s.max_weight() > cutoff)
        throw TruncationExceeded("canonical_reduce: entry weight exceeds cutoff");
      out.set(kl.first, kl.second, reduce_state(kl.first, kl.second, s));
    }
    return out;
  }

  // (slot -> dims[0..w_max]) of the slice of U^N_{kl} / O-span at each weight:
  // non-pivot columns of that weight. Upper bounds for the corresponding
  // quotient-algebra slices (the O-span may be a strict sub-ideal).
  std::map<Slot, std::vector<int>> quotient_dimension_table(int w_max) {
    if (w_max > alg_.wmax()) throw TruncationExceeded("dimension table: beyond window");
    std::map<Slot, std::vector<int>> out;
    for (int k = 0; k <= N_; ++k)
      for (int l = 0; l <= N_; ++l) {
        const ReducedBasis& rb = slot_basis(k, l);
        std::vector<int> dims(w_max + 1, 0);
        for (int c = 0; c < ambient_.size(); ++c) {
          int w = ambient_.weight(c);
          if (w <= w_max && !rb.has_pivot(c)) ++dims[w];
        }
        out[{k, l}] = std::move(dims);
      }
    return out;
  }

  // Canonical class representatives: non-pivot monomials (they reduce to
  // themselves), by increasing weight then basis order.
  std::vector<Partition> canonical_class_monomials(int k, int l, int w_max) {
    const ReducedBasis& rb = slot_basis(k, l);
    std::vector<Partition> out;
    for (int w = 0; w <= w_max; ++w)
      for (const auto& p : alg_.basis(w))
        if (!rb.has_pivot(ambient_.col(p))) out.push_back(p);
    return out;
  }

  struct ProductEntry {
    Slot left, right;
    Partition e_left, e_right;
    UMatrix reduced;
  };

  // canonical_reduce(diamond(e_i, e_j)) over compatible slot pairs.
  std::vector<ProductEntry> quotient_structure_constants(int w_max, int reduce_cutoff) {
    std::vector<ProductEntry> out;
    for (int k = 0; k <= N_; ++k)
      for (int n = 0; n <= N_; ++n)
        for (int l = 0; l <= N_; ++l)
          for (const auto& pu : canonical_class_monomials(k, n, w_max))
            for (const auto& pv : canonical_class_monomials(n, l, w_max)) {
              UMatrix prod = diamond(alg_, UMatrix::elementary(N_, k, n, State::monomial(pu)),
                                     UMatrix::elementary(N_, n, l, State::monomial(pv)));
              out.push_back({{k, n}, {n, l}, pu, pv, canonical_reduce(prod, reduce_cutoff)});
            }
    return out;
  }

 private:
  // All representable nonzero O-generator realizations at slot (k,l):
  // residue type for p in [0, wmax-k-1] (larger p pushes every component
  // above the window: component weights are >= wt v + k + p + 1) and sl2
  // type for wt v < wmax. Rows deduplicated and inserted in lexicographic
  // order for reproducible echelon forms.
  ReducedBasis build_slot(int k, int l) {
    std::set<SparseRow> rows;
    const int wmax = alg_.wmax();

    for (int wv = 0; wv + 1 <= wmax; ++wv)
      for (const auto& pv : alg_.basis(wv)) {
        State v = State::monomial(pv);
        State g = alg_.sl2_raw(-1, v) + alg_.sl2_raw(0, v) + Rational(l - k) * v;
        if (!g.is_zero()) rows.insert(ambient_.row_of(g));
      }

    for (long p = 0; p + k + 1 <= wmax; ++p) {
      long e_min = -k - l - p - 2;
      for (int wv = 0; wv + k + p + 1 <= wmax; ++wv)
        for (int wu = 0; wu <= wmax; ++wu) {
          // The top dressed component u_{(e_min)}v sits at weight
          // wu + wv + k + l + p + 1; allow a small slack for cancellation
          // before filtering on the computed realization.
          if (wu + wv + k + l + p + 1 > wmax + 2) continue;
          for (const auto& pu : alg_.basis(wu))
            for (const auto& pv : alg_.basis(wv)) {
              State g = alg_.dressed_residue_raw(LaurentPoly::monomial(e_min), l,
                                                 State::monomial(pu), State::monomial(pv));
              if (g.is_zero() || g.max_weight() > wmax) continue;
              rows.insert(ambient_.row_of(g));
            }
        }
    }

    ReducedBasis rb;
    for (const auto& r : rows) rb.insert(r);
    return rb;
  }

  const VertexAlgebra& alg_;
  int N_;
  AmbientIndex ambient_;
  std::map<Slot, ReducedBasis> slot_bases_;
};

// Dimensions of the weight slices of V / C_n(V), C_n(V) = span{u_{(-n)}v}.
inline std::vector<int> cn_quotient_dimension(const VertexAlgebra& alg, int n, int w_max) {
  if (n < 2) throw std::invalid_argument("cn_quotient_dimension: need n >= 2");
  if (w_max > alg.wmax()) throw TruncationExceeded("cn_quotient_dimension: beyond window");
  std::vector<int> dims;
  for (int w = 0; w <= w_max; ++w) {
    auto basis = alg.basis(w);
    std::map<Partition, int> col;
    for (size_t i = 0; i < basis.size(); ++i) col[basis[i]] = int(i);
    ReducedBasis rb;
    // u_{(-n)}v has weight wt u + wt v + n - 1 = w.
    for (int wu = 0; wu <= w - n + 1; ++wu) {
      int wv = w - n + 1 - wu;
      if (wv < 0) continue;
      for (const auto& pu : alg.basis(wu))
        for (const auto& pv : alg.basis(wv)) {
          State s = alg.mode_product_raw(State::monomial(pu), -n, State::monomial(pv));
          SparseRow r;
          for (const auto& [pp, c] : s.terms) r[col.at(pp)] = c;
          if (!r.empty()) rb.insert(r);
        }
    }
    dims.push_back(int(basis.size()) - rb.rank());
  }
  return dims;
}

}  // namespace voamat
