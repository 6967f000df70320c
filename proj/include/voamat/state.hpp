// Partition-indexed basis monomials and finite linear combinations (States).
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "voamat/rational.hpp"

namespace voamat {

// Raised when a result would leave the representable weight/depth window.
// Hard error by contract: the toolkit never truncates silently.
struct TruncationExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SizeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Nonincreasing list of positive parts; empty = vacuum / lowest-weight vector.
using Partition = std::vector<int>;

inline int partition_weight(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

// Insert a part keeping the nonincreasing order.
inline Partition partition_insert(Partition p, int part) {
  auto it = std::upper_bound(p.begin(), p.end(), part, std::greater<int>());
  p.insert(it, part);
  return p;
}

// All partitions of w with parts >= min_part, in a fixed deterministic order
// (lexicographically decreasing first part).
inline void partitions_of_rec(int w, int max_part, int min_part, Partition& cur,
                              std::vector<Partition>& out) {
  if (w == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(w, max_part); part >= min_part; --part) {
    cur.push_back(part);
    partitions_of_rec(w - part, part, min_part, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Partition> partitions_of(int w, int min_part) {
  std::vector<Partition> out;
  if (w < 0) return out;
  Partition cur;
  partitions_of_rec(w, w, min_part, cur, out);
  return out;
}

// Finite linear combination of basis monomials with nonzero coefficients.
class State {
 public:
  std::map<Partition, Rational> terms;

  State() = default;

  static State monomial(Partition p, const Rational& c = Rational(1)) {
    State s;
    if (c != 0) s.terms[std::move(p)] = c;
    return s;
  }
  static State vacuum() { return monomial({}); }
  static State zero() { return {}; }

  bool is_zero() const { return terms.empty(); }

  void add_term(const Partition& p, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(p);
    if (it == terms.end()) {
      terms.emplace(p, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  State& operator+=(const State& o) {
    for (const auto& [p, c] : o.terms) add_term(p, c);
    return *this;
  }
  friend State operator+(State a, const State& b) { return a += b; }

  State operator-() const {
    State r;
    for (const auto& [p, c] : terms) r.terms[p] = -c;
    return r;
  }
  State& operator-=(const State& o) { return *this += (-o); }
  friend State operator-(State a, const State& b) { return a -= b; }

  friend State operator*(const Rational& s, const State& v) {
    State r;
    if (s == 0) return r;
    for (const auto& [p, c] : v.terms) r.terms[p] = s * c;
    return r;
  }

  bool operator==(const State& o) const { return terms == o.terms; }

  // Largest monomial weight present (0 for the zero state).
  int max_weight() const {
    int w = 0;
    for (const auto& [p, c] : terms) w = std::max(w, partition_weight(p));
    return w;
  }

  bool is_homogeneous() const {
    if (terms.empty()) return true;
    int w = partition_weight(terms.begin()->first);
    for (const auto& [p, c] : terms)
      if (partition_weight(p) != w) return false;
    return true;
  }

  // Weight -> homogeneous component.
  std::map<int, State> components() const {
    std::map<int, State> out;
    for (const auto& [p, c] : terms) out[partition_weight(p)].add_term(p, c);
    return out;
  }
};

}  // namespace voamat
