#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <variant>

#include "liealg/series.hpp"

namespace liealg {

using json = nlohmann::ordered_json;

/// An algebra whose field is only known after reading a document.
using AnyAlgebra = std::variant<LieAlgebra<Rational>, LieAlgebra<Fp>>;

json field_to_json(const FieldSpec& field);
FieldSpec field_from_json(const json& j);

/// Parses text as JSON; syntax errors become SchemaError.
json parse_document(std::string_view text);

template <FieldScalar T>
json algebra_to_json(const LieAlgebra<T>& L) {
  json doc;
  doc["field"] = field_to_json(L.field());
  doc["dim"] = L.dim();
  json brackets = json::array();
  L.for_each_bracket([&](int i, int j, const SparseVec<T>& terms) {
    json entry;
    entry["i"] = i + 1;
    entry["j"] = j + 1;
    json ts = json::array();
    for (const auto& [k, c] : terms) ts.push_back(json::array({k + 1, render_scalar(c)}));
    entry["terms"] = std::move(ts);
    brackets.push_back(std::move(entry));
  });
  doc["brackets"] = std::move(brackets);
  return doc;
}

/// Canonical compact rendering (sorted by (i, j) then k, no zero terms).
template <FieldScalar T>
std::string save_json(const LieAlgebra<T>& L) {
  return algebra_to_json(L).dump();
}

AnyAlgebra algebra_from_json(const json& doc);
AnyAlgebra load_json(std::string_view text);

template <FieldScalar T>
json vector_to_json(const Vector<T>& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(render_scalar(v(i)));
  return out;
}

template <FieldScalar T>
json matrix_to_json(const Matrix<T>& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(vector_to_json<T>(m.row(r).transpose()));
  return out;
}

/// Reads a scalar given as a string in the scalar grammar (integers are
/// accepted as a convenience).
template <FieldScalar T>
T scalar_from_json(const json& j, const FieldSpec& field) {
  if (j.is_string()) return parse_scalar<T>(j.get<std::string>(), field);
  if (j.is_number_integer()) return parse_scalar<T>(std::to_string(j.get<long long>()), field);
  throw Error(ErrorCode::SchemaError, "scalar must be a string");
}

template <FieldScalar T>
Vector<T> vector_from_json(const json& j, int n, const FieldSpec& field) {
  if (!j.is_array()) throw Error(ErrorCode::SchemaError, "vector must be an array");
  if (static_cast<int>(j.size()) != n) throw Error(ErrorCode::DimensionMismatch, "vector length");
  Vector<T> v = zero_vector<T>(n, field);
  for (int i = 0; i < n; ++i) v(i) = scalar_from_json<T>(j[static_cast<std::size_t>(i)], field);
  return v;
}

/// Row-major array of rows of scalar strings.
template <FieldScalar T>
Matrix<T> matrix_from_json(const json& j, const FieldSpec& field) {
  if (!j.is_array() || j.empty() || !j.front().is_array())
    throw Error(ErrorCode::SchemaError, "matrix must be a non-empty array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j.front().size());
  Matrix<T> m = zero_matrix<T>(rows, cols, field);
  for (int r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw Error(ErrorCode::SchemaError, "matrix rows must have equal length");
    for (int c = 0; c < cols; ++c) m(r, c) = scalar_from_json<T>(row[static_cast<std::size_t>(c)], field);
  }
  return m;
}

/// {"basis": [[...], ...]} or {"span_indices": [1-based indices]}.
template <FieldScalar T>
Subspace<T> subspace_from_json(const json& j, int n, const FieldSpec& field) {
  if (!j.is_object()) throw Error(ErrorCode::SchemaError, "subspace must be an object");
  if (j.contains("span_indices")) {
    const json& idx = j["span_indices"];
    if (!idx.is_array()) throw Error(ErrorCode::SchemaError, "span_indices must be an array");
    std::vector<int> zero_based;
    for (const auto& e : idx) {
      if (!e.is_number_integer()) throw Error(ErrorCode::SchemaError, "span index must be an integer");
      const long long i = e.get<long long>();
      if (i < 1 || i > n) throw Error(ErrorCode::IndexOutOfRange, "span index " + std::to_string(i));
      zero_based.push_back(static_cast<int>(i - 1));
    }
    return Subspace<T>::coordinate_span(n, zero_based, field);
  }
  if (j.contains("basis")) {
    const json& b = j["basis"];
    if (!b.is_array()) throw Error(ErrorCode::SchemaError, "basis must be an array");
    std::vector<Vector<T>> vs;
    for (const auto& row : b) vs.push_back(vector_from_json<T>(row, n, field));
    return Subspace<T>::span(vs, n, field);
  }
  throw Error(ErrorCode::SchemaError, "subspace needs 'basis' or 'span_indices'");
}

template <FieldScalar T>
json subspace_to_json(const Subspace<T>& U) {
  json out;
  out["dim"] = U.dim();
  out["basis"] = matrix_to_json<T>(U.basis());
  return out;
}

json invariants_to_json(const InvariantsReport& r);

}  // namespace liealg
