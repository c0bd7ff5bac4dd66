#include "liealg/json_io.hpp"

#include <set>

namespace liealg {

json field_to_json(const FieldSpec& field) {
  if (field.is_rational()) return "Q";
  json j;
  j["Fp"] = field.p;
  return j;
}

FieldSpec field_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return FieldSpec::rationals();
    throw Error(ErrorCode::SchemaError, "field must be \"Q\" or {\"Fp\": p}");
  }
  if (j.is_object() && j.size() == 1 && j.contains("Fp") && j["Fp"].is_number_integer()) {
    const long long p = j["Fp"].get<long long>();
    if (p < 2) throw Error(ErrorCode::InvalidField, "modulus " + std::to_string(p));
    return FieldSpec::prime(static_cast<std::uint64_t>(p));
  }
  throw Error(ErrorCode::SchemaError, "field must be \"Q\" or {\"Fp\": p}");
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, std::string("invalid JSON: ") + e.what());
  }
}

namespace {

int index_field(const json& entry, const char* key, int n) {
  if (!entry.contains(key) || !entry[key].is_number_integer())
    throw Error(ErrorCode::SchemaError, std::string("bracket needs integer '") + key + "'");
  const long long v = entry[key].get<long long>();
  if (v < 1 || v > n) throw Error(ErrorCode::IndexOutOfRange, std::string(key) + " = " + std::to_string(v));
  return static_cast<int>(v);
}

template <FieldScalar T>
LieAlgebra<T> read_brackets(const json& doc, int n, const FieldSpec& field) {
  LieAlgebra<T> L(n, field);
  const json& brackets = doc["brackets"];
  if (!brackets.is_array()) throw Error(ErrorCode::SchemaError, "'brackets' must be an array");
  std::set<std::pair<int, int>> seen;
  for (const auto& entry : brackets) {
    if (!entry.is_object()) throw Error(ErrorCode::SchemaError, "bracket entry must be an object");
    const int i = index_field(entry, "i", n);
    const int j = index_field(entry, "j", n);
    if (i >= j) throw Error(ErrorCode::IndexOutOfRange, "bracket needs i < j");
    if (!seen.insert({i, j}).second)
      throw Error(ErrorCode::DuplicateBracket, "[e_" + std::to_string(i) + ", e_" + std::to_string(j) + "] given twice");
    if (!entry.contains("terms") || !entry["terms"].is_array())
      throw Error(ErrorCode::SchemaError, "bracket needs a 'terms' array");
    SparseVec<T> terms;
    for (const auto& t : entry["terms"]) {
      if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string())
        throw Error(ErrorCode::SchemaError, "term must be [k, \"scalar\"]");
      const long long k = t[0].get<long long>();
      if (k < 1 || k > n) throw Error(ErrorCode::IndexOutOfRange, "k = " + std::to_string(k));
      T c = parse_scalar<T>(t[1].get<std::string>(), field);
      if (is_zero(c)) throw Error(ErrorCode::SchemaError, "zero coefficient in bracket terms");
      terms.emplace_back(static_cast<int>(k - 1), std::move(c));
    }
    L.set_bracket(i - 1, j - 1, std::move(terms));
  }
  return L;
}

}  // namespace

AnyAlgebra algebra_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::SchemaError, "algebra document must be an object");
  for (const char* key : {"field", "dim", "brackets"})
    if (!doc.contains(key)) throw Error(ErrorCode::SchemaError, std::string("missing '") + key + "'");
  const FieldSpec field = field_from_json(doc["field"]);
  if (!doc["dim"].is_number_integer()) throw Error(ErrorCode::SchemaError, "'dim' must be an integer");
  const long long n = doc["dim"].get<long long>();
  if (n < 1 || n > 100000) throw Error(ErrorCode::BadDimension, "dim = " + std::to_string(n));
  if (field.is_rational()) return read_brackets<Rational>(doc, static_cast<int>(n), field);
  return read_brackets<Fp>(doc, static_cast<int>(n), field);
}

AnyAlgebra load_json(std::string_view text) { return algebra_from_json(parse_document(text)); }

json invariants_to_json(const InvariantsReport& r) {
  auto nonzero = [](const std::vector<int>& dims) {
    json out = json::array();
    for (int d : dims)
      if (d != 0) out.push_back(d);
    return out;
  };
  json j;
  j["dim"] = r.dim;
  j["class"] = r.nilpotency_class ? json(*r.nilpotency_class) : json(nullptr);
  j["derived_length"] = r.derived_length ? json(*r.derived_length) : json(nullptr);
  j["derived_dims"] = nonzero(r.derived_dims);
  j["lower_central_dims"] = nonzero(r.lower_central_dims);
  j["generator_count"] = r.generator_count;
  j["filiform"] = r.filiform;
  j["nilpotent"] = r.nilpotent();
  j["solvable"] = r.solvable();
  j["layer_profile"] = r.derived_layers();
  return j;
}

}  // namespace liealg
