#ifndef JK_JSON_IO_HPP
#define JK_JSON_IO_HPP

/**
 * JSON wire formats for the core types.
 *
 * Conventions: rationals serialize as strings "p/q" ("p" when the denominator
 * is one); polynomials as arrays of rational strings with the constant term
 * first; matrices as {"rows", "cols", "data"} with data in row-major nested
 * arrays. Parsers throw InputError naming the offending field; they never
 * assert, because their input is untrusted.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "jk/jk_invariants.hpp"
#include "jk/matrix.hpp"
#include "jk/oracle.hpp"
#include "jk/pencil.hpp"
#include "jk/poly.hpp"
#include "jk/rational.hpp"
#include "jk/rep_spec.hpp"

namespace jk {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& require_field(const Json& j, const std::string& name,
                                 const std::string& context) {
  if (!j.is_object()) {
    throw InputError(context + ": expected an object");
  }
  const auto it = j.find(name);
  if (it == j.end()) {
    throw InputError(context + ": missing field '" + name + "'");
  }
  return *it;
}

inline std::size_t parse_size(const Json& j, const std::string& context) {
  // Accept any integer storage class as long as the value is nonnegative
  // (programmatically built documents hold small literals as signed).
  if (!j.is_number_integer() ||
      (!j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    throw InputError(context + ": expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

inline Rational parse_rational(const Json& j, const std::string& context) {
  if (!j.is_string()) {
    throw InputError(context + ": expected a rational string");
  }
  try {
    return rational_from_string(j.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(context + ": " + e.what());
  }
}

inline IndexMultiset parse_index_multiset(const Json& j,
                                          const std::string& context) {
  if (!j.is_array()) {
    throw InputError(context + ": expected an array of indices");
  }
  IndexMultiset out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& entry = j[i];
    // As in parse_size, accept signed integer storage: programmatically
    // built documents hold small literals as signed numbers.
    if (!entry.is_number_integer() || entry.get<std::int64_t>() <= 0) {
      throw InputError(context + "[" + std::to_string(i) +
                       "]: expected a positive integer");
    }
    out.push_back(entry.get<int>());
  }
  return out;
}

}  // namespace detail

// ===== rationals and polynomials =====

inline Json rational_to_json(const Rational& value) {
  return Json(rational_to_string(value));
}

inline Json poly_to_json(const UniPoly& p) {
  Json out = Json::array();
  for (int i = 0; i <= p.degree(); ++i) {
    out.push_back(rational_to_json(p.coeff(i)));
  }
  return out;
}

inline UniPoly poly_from_json(const Json& j, const std::string& context) {
  if (!j.is_array() || j.empty()) {
    throw InputError(context + ": expected a non-empty coefficient array");
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    coeffs.push_back(
        detail::parse_rational(j[i], context + "[" + std::to_string(i) + "]"));
  }
  return UniPoly(coeffs);
}

// ===== matrices and pencils =====

inline Json matrix_to_json(const QMatrix& m) {
  Json data = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(rational_to_json(m.at(i, j)));
    }
    data.push_back(row);
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["data"] = data;
  return out;
}

inline QMatrix matrix_from_json(const Json& j, const std::string& context) {
  const std::size_t rows =
      detail::parse_size(detail::require_field(j, "rows", context),
                         context + ".rows");
  const std::size_t cols =
      detail::parse_size(detail::require_field(j, "cols", context),
                         context + ".cols");
  const Json& data = detail::require_field(j, "data", context);
  if (!data.is_array() || data.size() != rows) {
    throw InputError(context + ".data: expected " + std::to_string(rows) +
                     " rows");
  }
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = data[i];
    if (!row.is_array() || row.size() != cols) {
      throw InputError(context + ".data[" + std::to_string(i) +
                       "]: expected " + std::to_string(cols) + " entries");
    }
    for (std::size_t k = 0; k < cols; ++k) {
      m.at(i, k) = detail::parse_rational(
          row[k], context + ".data[" + std::to_string(i) + "][" +
                      std::to_string(k) + "]");
    }
  }
  return m;
}

/**
 * Parses a representation-module point: either a nested row-major matrix
 * ([["1","0"],["0","1"]]) or a flat array of rational strings, which is read
 * as a column vector. Shape validation against the RepSpec happens
 * separately (validate_point).
 */
inline QMatrix point_from_json(const Json& j, const std::string& context) {
  if (!j.is_array() || j.empty()) {
    throw InputError(context + ": expected a non-empty array");
  }
  if (j[0].is_array()) {
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      const Json& row = j[i];
      if (!row.is_array() || row.size() != cols) {
        throw InputError(context + "[" + std::to_string(i) +
                         "]: ragged matrix rows");
      }
      for (std::size_t k = 0; k < cols; ++k) {
        m.at(i, k) = detail::parse_rational(
            row[k],
            context + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
      }
    }
    return m;
  }
  QMatrix m(j.size(), 1);
  for (std::size_t i = 0; i < j.size(); ++i) {
    m.at(i, 0) = detail::parse_rational(
        j[i], context + "[" + std::to_string(i) + "]");
  }
  return m;
}

inline Json pencil_to_json(const Pencil& p) {
  Json out;
  out["A"] = matrix_to_json(p.A);
  out["B"] = matrix_to_json(p.B);
  return out;
}

inline Pencil pencil_from_json(const Json& j) {
  const QMatrix a =
      matrix_from_json(detail::require_field(j, "A", "pencil"), "pencil.A");
  const QMatrix b =
      matrix_from_json(detail::require_field(j, "B", "pencil"), "pencil.B");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError("pencil: A and B must have equal shapes");
  }
  return Pencil(a, b);
}

// ===== invariants =====

inline Json jk_invariants_to_json(const JKInvariants& inv) {
  Json jordan = Json::array();
  for (const EigenClass& cls : inv.jordan) {
    Json entry;
    if (cls.at_infinity) {
      entry["class"] = Json{{"kind", "infinity"}};
    } else {
      entry["class"] = Json{{"kind", "finite"}, {"poly", poly_to_json(cls.poly)}};
    }
    entry["sizes"] = cls.sizes;
    jordan.push_back(entry);
  }
  Json out;
  out["rank"] = inv.rank;
  out["horizontal"] = inv.horizontal;
  out["vertical"] = inv.vertical;
  out["jordan"] = jordan;
  return out;
}

inline JKInvariants jk_invariants_from_json(const Json& j) {
  JKInvariants inv;
  inv.rank = detail::parse_size(
      detail::require_field(j, "rank", "invariants"), "invariants.rank");
  inv.horizontal = detail::parse_index_multiset(
      detail::require_field(j, "horizontal", "invariants"),
      "invariants.horizontal");
  inv.vertical = detail::parse_index_multiset(
      detail::require_field(j, "vertical", "invariants"),
      "invariants.vertical");
  const Json& jordan = detail::require_field(j, "jordan", "invariants");
  if (!jordan.is_array()) {
    throw InputError("invariants.jordan: expected an array");
  }
  for (std::size_t i = 0; i < jordan.size(); ++i) {
    const std::string context = "invariants.jordan[" + std::to_string(i) + "]";
    const Json& cls_json =
        detail::require_field(jordan[i], "class", context);
    const Json& kind =
        detail::require_field(cls_json, "kind", context + ".class");
    EigenClass cls;
    if (kind == "infinity") {
      cls.at_infinity = true;
    } else if (kind == "finite") {
      cls.poly = poly_from_json(
          detail::require_field(cls_json, "poly", context + ".class"),
          context + ".class.poly");
    } else {
      throw InputError(context + ".class.kind: expected finite or infinity");
    }
    cls.sizes = detail::parse_index_multiset(
        detail::require_field(jordan[i], "sizes", context),
        context + ".sizes");
    inv.jordan.push_back(cls);
  }
  return inv;
}

// ===== representation specs =====

inline Json rep_spec_to_json(const RepSpec& spec) {
  Json out;
  out["family"] = family_name(spec.family);
  out["n"] = spec.n;
  if (is_sum_family(spec.family)) {
    out["m"] = spec.m;
  }
  if (is_congruence_family(spec.family)) {
    out["group"] = group_name(spec.group);
  }
  return out;
}

inline RepSpec rep_spec_from_json(const Json& j) {
  RepSpec spec;
  const Json& family = detail::require_field(j, "family", "spec");
  if (!family.is_string()) {
    throw InputError("spec.family: expected a string");
  }
  spec.family = family_from_name(family.get<std::string>());
  spec.n = detail::parse_size(detail::require_field(j, "n", "spec"), "spec.n");
  if (is_sum_family(spec.family)) {
    spec.m = detail::parse_size(detail::require_field(j, "m", "spec"),
                                "spec.m");
  }
  if (is_congruence_family(spec.family)) {
    const Json& group = detail::require_field(j, "group", "spec");
    if (!group.is_string()) {
      throw InputError("spec.group: expected a string");
    }
    spec.group = group_from_name(group.get<std::string>());
  }
  validate_spec(spec);
  return spec;
}

// ===== predictions =====

inline Json predicted_to_json(const PredictedJK& pred) {
  Json out;
  out["horizontal"] = pred.horizontal;
  out["vertical"] = pred.vertical;
  out["jordan"] =
      Json{{"distinct_eigenvalues", pred.jordan.distinct_eigenvalues},
           {"blocks_per_eigenvalue", pred.jordan.blocks_per_eigenvalue}};
  return out;
}

}  // namespace jk

#endif  // JK_JSON_IO_HPP
