// JSON serialization for the core types. Deterministic: insertion-ordered
// objects, rationals as "p/q" strings, arrays in the container's canonical
// order. Round-trips are bit-exact.
#pragma once

#include <json.hpp>

#include "voamat/reduction.hpp"
#include "voamat/report.hpp"

namespace voamat {

using Json = nlohmann::ordered_json;

inline Json json_of(const Rational& q) { return rat_str(q); }
inline Rational rational_from_json(const Json& j) { return rat_parse(j.get<std::string>()); }

inline Json json_of(const Partition& p) { return Json(p); }
inline Partition partition_from_json(const Json& j) { return j.get<Partition>(); }

inline Json json_of(const State& s) {
  Json arr = Json::array();
  for (const auto& [p, c] : s.terms) arr.push_back(Json{{"m", json_of(p)}, {"c", rat_str(c)}});
  return arr;
}
inline State state_from_json(const Json& j) {
  State s;
  for (const auto& t : j) s.add_term(partition_from_json(t.at("m")), rational_from_json(t.at("c")));
  return s;
}

inline Json json_of(const UMatrix& m) {
  Json entries = Json::array();
  for (const auto& [kl, s] : m.entries())
    entries.push_back(Json{{"k", kl.first}, {"l", kl.second}, {"state", json_of(s)}});
  return Json{{"size", m.size()}, {"entries", entries}};
}
inline UMatrix umatrix_from_json(const Json& j) {
  UMatrix m(j.at("size").get<int>());
  for (const auto& e : j.at("entries"))
    m.set(e.at("k").get<int>(), e.at("l").get<int>(), state_from_json(e.at("state")));
  return m;
}

inline Json json_of(const SparseRow& r) {
  Json arr = Json::array();
  for (const auto& [c, q] : r) arr.push_back(Json::array({c, rat_str(q)}));
  return arr;
}
inline SparseRow sparse_row_from_json(const Json& j) {
  SparseRow r;
  for (const auto& e : j) r[e.at(0).get<int>()] = rational_from_json(e.at(1));
  return r;
}

inline Json json_of(const ReducedBasis& rb) {
  Json rows = Json::array();
  for (const auto& [p, row] : rb.rows())
    rows.push_back(Json{{"pivot", p}, {"row", json_of(row)}});
  return Json{{"rank", rb.rank()}, {"rows", rows}};
}
inline ReducedBasis reduced_basis_from_json(const Json& j) {
  ReducedBasis rb;
  for (const auto& e : j.at("rows")) rb.insert(sparse_row_from_json(e.at("row")));
  if (rb.rank() != j.at("rank").get<int>())
    throw std::runtime_error("reduced basis deserialization: rank mismatch");
  return rb;
}

inline Json json_of(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  Json meta = Json::object();
  for (const auto& [k, v] : r.meta) meta[k] = v;
  return Json{{"suite", r.suite},
              {"pass", r.pass},
              {"meta", meta},
              {"checks", checks},
              {"suppressed_failures", r.suppressed_failures}};
}
inline Report report_from_json(const Json& j) {
  Report r;
  r.suite = j.at("suite").get<std::string>();
  r.pass = j.at("pass").get<bool>();
  for (const auto& [k, v] : j.at("meta").items()) r.meta[k] = v.get<std::string>();
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                        c.at("detail").get<std::string>()});
  r.suppressed_failures = j.at("suppressed_failures").get<int>();
  return r;
}

}  // namespace voamat
