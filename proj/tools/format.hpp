#pragma once

// JSON file formats of the command-line tool: algebra spec files, map
// files, and reports. Keys come out sorted and coefficients in canonical
// text, so serializing the same value twice gives identical bytes.

#include <cstdint>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "gmalie/gmalie.hpp"

namespace gmalie::cli {

using json = nlohmann::json;

inline constexpr const char* kSpecFormat = "gmalie-spec-1";
inline constexpr const char* kMapFormat = "gmalie-map-1";
inline constexpr const char* kReportFormat = "gmalie-report-1";
inline constexpr const char* kBasisOrder = "A,M,N,B";

using AnyField = std::variant<Rationals, PrimeField>;
AnyField make_field(const FieldSpec& spec);

std::string read_file(const std::string& path);
/// Writes through a temporary file in the same directory and renames it
/// over `path`, so readers never observe a partial file.
void write_atomic(const std::string& path, const std::string& text);
/// Parses JSON text; syntax errors become ParseError with line and column.
json parse_json(const std::string& text, const std::string& source);
/// Pretty-printed text with a trailing newline.
std::string dump(const json& j);
std::uint64_t fnv1a64(const std::string& text);
std::string hex64(std::uint64_t v);

/// Field descriptor of a spec or map document.
FieldSpec field_of(const json& doc, const std::string& source);

namespace detail {

const json& member(const json& obj, const char* key, const std::string& path);
std::size_t index_value(const json& v, const std::string& path);

template <class F>
typename F::value_type coefficient(const F& f, const json& v, const std::string& path) {
  try {
    if (v.is_string()) return f.parse(v.get<std::string>());
    if (v.is_number_integer()) return f.parse(v.dump());
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
  throw ParseError(path + ": coefficient must be a string such as \"3\" or \"-1/2\"");
}

template <class F>
json table_json(const F& f, const BilinearTable<F>& t) {
  json out = json::array();
  for (std::size_t i = 0; i < t.left_dim; ++i)
    for (std::size_t j = 0; j < t.right_dim; ++j)
      for (const auto& [k, v] : t.at(i, j)) out.push_back(json::array({i, j, k, f.format(v)}));
  return out;
}

template <class F>
BilinearTable<F> table_from(const F& f, const json& arr, std::size_t l, std::size_t r, std::size_t o,
                            const std::string& path) {
  if (!arr.is_array()) throw ParseError(path + ": expected an array of [i, j, k, coefficient]");
  BilinearTable<F> t(l, r, o);
  for (std::size_t e = 0; e < arr.size(); ++e) {
    const std::string at = path + "[" + std::to_string(e) + "]";
    const auto& q = arr[e];
    if (!q.is_array() || q.size() != 4) throw ParseError(at + ": expected [i, j, k, coefficient]");
    auto i = index_value(q[0], at + "[0]");
    auto j = index_value(q[1], at + "[1]");
    auto k = index_value(q[2], at + "[2]");
    if (i >= l || j >= r || k >= o)
      throw ParseError(at + ": index out of range for a " + std::to_string(l) + " x " + std::to_string(r) + " -> " +
                       std::to_string(o) + " table");
    t.accumulate(f, i, j, k, coefficient(f, q[3], at + "[3]"));
  }
  return t;
}

template <class F>
json vector_json(const F& f, std::span<const typename F::value_type> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(f.format(x));
  return out;
}

template <class F>
AlgebraTable<F> algebra_from(const F& f, const json& doc, const char* key) {
  const std::string path = key;
  const auto& blk = member(doc, key, "");
  const auto dim = index_value(member(blk, "dim", path), path + ".dim");
  AlgebraTable<F> t{f, table_from(f, member(blk, "mul", path), dim, dim, dim, path + ".mul"), zero_vector(f, dim)};
  const auto& unit = member(blk, "unit", path);
  if (!unit.is_array()) throw ParseError(path + ".unit: expected an array of [i, coefficient]");
  for (std::size_t e = 0; e < unit.size(); ++e) {
    const std::string at = path + ".unit[" + std::to_string(e) + "]";
    if (!unit[e].is_array() || unit[e].size() != 2) throw ParseError(at + ": expected [i, coefficient]");
    auto i = index_value(unit[e][0], at + "[0]");
    if (i >= dim) throw ParseError(at + ": index out of range");
    t.unit[i] = f.add(t.unit[i], coefficient(f, unit[e][1], at + "[1]"));
  }
  return t;
}

template <class F>
json algebra_json(const F& f, const AlgebraTable<F>& t) {
  json unit = json::array();
  for (std::size_t i = 0; i < t.unit.size(); ++i)
    if (!f.is_zero(t.unit[i])) unit.push_back(json::array({i, f.format(t.unit[i])}));
  return json{{"dim", t.dim()}, {"mul", table_json(f, t.product)}, {"unit", unit}};
}

}  // namespace detail

template <class F>
json context_to_json(const MoritaContext<F>& c) {
  const F& f = c.field;
  return json{{"format", kSpecFormat},
              {"basis_order", kBasisOrder},
              {"field", f.spec().to_string()},
              {"A", detail::algebra_json(f, c.a)},
              {"B", detail::algebra_json(f, c.b)},
              {"M", json{{"dim", c.dim_m},
                         {"left", detail::table_json(f, c.left_m)},
                         {"right", detail::table_json(f, c.right_m)}}},
              {"N", json{{"dim", c.dim_n},
                         {"left", detail::table_json(f, c.left_n)},
                         {"right", detail::table_json(f, c.right_n)}}},
              {"phi", detail::table_json(f, c.phi)},
              {"psi", detail::table_json(f, c.psi)}};
}

/// Structural parse only; the caller validates the Morita axioms.
template <class F>
MoritaContext<F> context_from_json(const json& doc, const F& f) {
  using detail::member;
  if (!doc.is_object()) throw ParseError("spec: top level must be an object");
  if (member(doc, "format", "").get<std::string>() != kSpecFormat)
    throw ParseError("format: expected \"" + std::string(kSpecFormat) + "\"");
  if (doc.contains("basis_order") && doc["basis_order"] != kBasisOrder)
    throw ParseError("basis_order: only \"" + std::string(kBasisOrder) + "\" is supported");
  auto a = detail::algebra_from(f, doc, "A");
  auto b = detail::algebra_from(f, doc, "B");
  const auto& m = member(doc, "M", "");
  const auto& n = member(doc, "N", "");
  const auto dm = detail::index_value(member(m, "dim", "M"), "M.dim");
  const auto dn = detail::index_value(member(n, "dim", "N"), "N.dim");
  const std::size_t da = a.dim(), db = b.dim();
  auto ctx = MoritaContext<F>::blank(f, std::move(a), std::move(b), dm, dn);
  ctx.left_m = detail::table_from(f, member(m, "left", "M"), da, dm, dm, "M.left");
  ctx.right_m = detail::table_from(f, member(m, "right", "M"), dm, db, dm, "M.right");
  ctx.left_n = detail::table_from(f, member(n, "left", "N"), db, dn, dn, "N.left");
  ctx.right_n = detail::table_from(f, member(n, "right", "N"), dn, da, dn, "N.right");
  ctx.phi = detail::table_from(f, member(doc, "phi", ""), dm, dn, da, "phi");
  ctx.psi = detail::table_from(f, member(doc, "psi", ""), dn, dm, db, "psi");
  return ctx;
}

template <class F>
json map_to_json(const MultilinearMap<F>& phi) {
  const F& f = phi.field();
  json entries = json::array();
  for (const auto& [idx, v] : phi.entries()) {
    auto t = phi.tuple_of(idx);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (f.is_zero(v[j])) continue;
      json e = json::array();
      for (auto i : t) e.push_back(i);
      e.push_back(j);
      e.push_back(f.format(v[j]));
      entries.push_back(std::move(e));
    }
  }
  return json{{"format", kMapFormat},
              {"field", f.spec().to_string()},
              {"dim", phi.dim()},
              {"arity", phi.arity()},
              {"basis_order", kBasisOrder},
              {"entries", entries}};
}

template <class F>
MultilinearMap<F> map_from_json(const json& doc, const F& f) {
  using detail::member;
  if (!doc.is_object()) throw ParseError("map: top level must be an object");
  if (member(doc, "format", "").get<std::string>() != kMapFormat)
    throw ParseError("format: expected \"" + std::string(kMapFormat) + "\"");
  const auto dim = detail::index_value(member(doc, "dim", ""), "dim");
  const auto arity = detail::index_value(member(doc, "arity", ""), "arity");
  MultilinearMap<F> phi(f, dim, arity);
  const auto& entries = member(doc, "entries", "");
  if (!entries.is_array()) throw ParseError("entries: expected an array");
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string at = "entries[" + std::to_string(e) + "]";
    const auto& q = entries[e];
    if (!q.is_array() || q.size() != arity + 2)
      throw ParseError(at + ": expected " + std::to_string(arity) + " tuple indices, an output index and a coefficient");
    std::vector<std::size_t> t(arity);
    for (std::size_t k = 0; k < arity; ++k) {
      t[k] = detail::index_value(q[k], at + "[" + std::to_string(k) + "]");
      if (t[k] >= dim) throw ParseError(at + ": tuple index out of range");
    }
    auto j = detail::index_value(q[arity], at + "[" + std::to_string(arity) + "]");
    if (j >= dim) throw ParseError(at + ": output index out of range");
    phi.add_to(phi.index_of(t), j, detail::coefficient(f, q[arity + 1], at + "[" + std::to_string(arity + 1) + "]"));
  }
  return phi;
}

template <class F>
json vector_json(const F& f, std::span<const typename F::value_type> v) {
  return detail::vector_json(f, v);
}

template <class F>
json subspace_json(const Subspace<F>& s) {
  json basis = json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) basis.push_back(detail::vector_json(s.field(), s.basis().row(r)));
  return json{{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", basis}};
}

json check_json(const Check& c);
json checks_json(const CheckReport& r);

}  // namespace gmalie::cli
