#pragma once

#include <string>
#include <variant>

#include "liealg/json_io.hpp"
#include "liealg/search.hpp"

namespace liealg {

using AnySearchConfig = std::variant<SearchConfig<Rational>, SearchConfig<Fp>>;

/// {"field", "weights", "target": {"layers", "max_class"?, "generator_count"?},
///  "coefficients"?, "fixed"?: [{"i","j","k","value"}], "budget"?, "seed"?, "threads"?}
AnySearchConfig search_config_from_json(const json& doc);

/// One algebra document per hit, then {"summary": {...}}; newline-terminated lines.
template <FieldScalar T>
std::string search_report_jsonl(const SearchConfig<T>& cfg, const SearchResult<T>& res);

json skeleton_to_json(const GradedSkeleton& sk);

}  // namespace liealg
