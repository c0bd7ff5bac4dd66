#include "liealg/search_io.hpp"

#include <algorithm>
#include <cmath>

namespace liealg {

int GradedSkeleton::find(int i, int j, int k) const {
  for (std::size_t p = 0; p < positions.size(); ++p)
    if (positions[p] == Position{i, j, k}) return static_cast<int>(p);
  return -1;
}

GradedSkeleton skeleton(const std::vector<std::int64_t>& weights) {
  GradedSkeleton sk{weights, {}};
  const int n = static_cast<int>(weights.size());
  if (n < 1) throw Error(ErrorCode::BadDimension, "skeleton needs at least one weight");
  for (auto w : weights)
    if (w < 1) throw Error(ErrorCode::BadDimension, "weights must be positive");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (weights[static_cast<std::size_t>(i)] + weights[static_cast<std::size_t>(j)] == weights[static_cast<std::size_t>(k)])
          sk.positions.push_back({i, j, k});
  std::stable_sort(sk.positions.begin(), sk.positions.end(), [&](const Position& a, const Position& b) {
    const auto wa = weights[static_cast<std::size_t>(a.k)], wb = weights[static_cast<std::size_t>(b.k)];
    if (wa != wb) return wa < wb;
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return a.k < b.k;
  });
  return sk;
}

json skeleton_to_json(const GradedSkeleton& sk) {
  json out;
  out["weights"] = sk.weights;
  json pos = json::array();
  for (const auto& p : sk.positions) pos.push_back(json::array({p.i + 1, p.j + 1, p.k + 1}));
  out["positions"] = std::move(pos);
  return out;
}

namespace {

std::uint64_t uint_field(const json& doc, const char* key, std::uint64_t fallback) {
  if (!doc.contains(key)) return fallback;
  if (!doc[key].is_number_unsigned()) throw Error(ErrorCode::SchemaError, std::string("'") + key + "' must be a non-negative integer");
  return doc[key].get<std::uint64_t>();
}

template <FieldScalar T>
SearchConfig<T> read_config(const json& doc, const FieldSpec& field) {
  SearchConfig<T> cfg;
  cfg.field = field;
  if (!doc.contains("weights") || !doc["weights"].is_array())
    throw Error(ErrorCode::SchemaError, "search config needs a 'weights' array");
  std::vector<std::int64_t> weights;
  for (const auto& w : doc["weights"]) {
    if (!w.is_number_integer()) throw Error(ErrorCode::SchemaError, "weights must be integers");
    weights.push_back(w.get<std::int64_t>());
  }
  cfg.skeleton = skeleton(weights);

  if (!doc.contains("target") || !doc["target"].is_object())
    throw Error(ErrorCode::SchemaError, "search config needs a 'target' object");
  const json& target = doc["target"];
  if (!target.contains("layers") || !target["layers"].is_array())
    throw Error(ErrorCode::SchemaError, "target needs 'layers'");
  int sum = 0;
  for (const auto& d : target["layers"]) {
    if (!d.is_number_integer() || d.get<int>() < 0) throw Error(ErrorCode::SchemaError, "layers must be non-negative integers");
    cfg.target.layers.push_back(d.get<int>());
    sum += d.get<int>();
  }
  if (sum != cfg.skeleton.dim()) throw Error(ErrorCode::DimensionMismatch, "layers must sum to the number of weights");
  if (target.contains("max_class")) cfg.target.max_class = target["max_class"].get<int>();
  if (target.contains("generator_count")) cfg.target.generator_count = target["generator_count"].get<int>();

  if (doc.contains("coefficients")) {
    if (!doc["coefficients"].is_array()) throw Error(ErrorCode::SchemaError, "'coefficients' must be an array");
    for (const auto& c : doc["coefficients"]) cfg.coefficients.push_back(scalar_from_json<T>(c, field));
  } else {
    for (int c : {-3, -2, -1, 1, 2, 3}) cfg.coefficients.push_back(scalar_from_int<T>(c, field));
  }
  if (doc.contains("fixed")) {
    if (!doc["fixed"].is_array()) throw Error(ErrorCode::SchemaError, "'fixed' must be an array");
    for (const auto& f : doc["fixed"]) {
      for (const char* key : {"i", "j", "k"})
        if (!f.contains(key) || !f[key].is_number_integer())
          throw Error(ErrorCode::SchemaError, std::string("fixed entry needs integer '") + key + "'");
      if (!f.contains("value")) throw Error(ErrorCode::SchemaError, "fixed entry needs 'value'");
      const int p = cfg.skeleton.find(f["i"].get<int>() - 1, f["j"].get<int>() - 1, f["k"].get<int>() - 1);
      if (p < 0) throw Error(ErrorCode::IndexOutOfRange, "fixed entry is not a skeleton position");
      cfg.fixed[p] = scalar_from_json<T>(f["value"], field);
    }
  }
  cfg.budget = uint_field(doc, "budget", cfg.budget);
  cfg.seed = uint_field(doc, "seed", cfg.seed);
  cfg.threads = static_cast<int>(uint_field(doc, "threads", 1));
  return cfg;
}

}  // namespace

AnySearchConfig search_config_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::SchemaError, "search config must be an object");
  const FieldSpec field = doc.contains("field") ? field_from_json(doc["field"]) : FieldSpec::rationals();
  if (field.is_rational()) return read_config<Rational>(doc, field);
  return read_config<Fp>(doc, field);
}

template <FieldScalar T>
std::string search_report_jsonl(const SearchConfig<T>& cfg, const SearchResult<T>& res) {
  std::string out;
  json indices = json::array();
  for (const auto& h : res.hits) {
    out += save_json(h.algebra);
    out += '\n';
    indices.push_back(h.candidate);
  }
  json summary;
  summary["status"] = res.exhaustive ? "complete" : "budget_exceeded";
  summary["mode"] = res.exhaustive ? "exhaustive" : "sampled";
  summary["examined"] = res.examined;
  summary["space_size"] = static_cast<double>(res.space_size);
  summary["jacobi_passed"] = res.jacobi_passed;
  summary["hits"] = res.hits.size();
  summary["hit_candidates"] = std::move(indices);
  summary["seed"] = cfg.seed;
  summary["budget"] = cfg.budget;
  summary["positions"] = cfg.skeleton.positions.size();
  summary["target_layers"] = cfg.target.layers;
  json wrapper;
  wrapper["summary"] = std::move(summary);
  out += wrapper.dump();
  out += '\n';
  return out;
}

template std::string search_report_jsonl<Rational>(const SearchConfig<Rational>&, const SearchResult<Rational>&);
template std::string search_report_jsonl<Fp>(const SearchConfig<Fp>&, const SearchResult<Fp>&);

}  // namespace liealg
