#include <gtest/gtest.h>

#include "liealg/catalog.hpp"
#include "liealg/search_io.hpp"
#include "test_util.hpp"

using namespace liealg;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::vector<int> layers_from_dims(int n, const std::vector<int>& dims) {
  std::vector<int> out;
  int prev = n;
  for (int d : dims) {
    out.push_back(prev - d);
    prev = d;
  }
  return out;
}

std::vector<std::int64_t> g14_skeleton_weights() {
  const auto w = g14_weights(1, 1);
  return {w.begin(), w.end()};
}

SearchConfig<Rational> small_config() {
  SearchConfig<Rational> cfg;
  cfg.field = Q;
  cfg.skeleton = skeleton({1, 1, 2, 3});
  cfg.target.layers = {2, 2};
  for (int c : {-3, -2, -1, 1, 2, 3}) cfg.coefficients.push_back(Rational(c));
  return cfg;
}

}  // namespace

TEST(Skeleton, Positions) {
  const auto sk = skeleton({1, 1, 2, 3});
  ASSERT_EQ(sk.positions.size(), 3U);
  EXPECT_EQ(sk.positions[0], (Position{0, 1, 2}));
  EXPECT_EQ(sk.positions[1], (Position{0, 2, 3}));
  EXPECT_EQ(sk.positions[2], (Position{1, 2, 3}));
  EXPECT_EQ(sk.find(1, 2, 3), 2);
  EXPECT_EQ(sk.find(0, 3, 3), -1);
  EXPECT_TRUE(skeleton({1, 1, 1}).positions.empty());
  EXPECT_THROW(skeleton({1, 0}), Error);
  EXPECT_THROW(skeleton({}), Error);
}

TEST(Skeleton, ContainsGradedCatalogAlgebras) {
  std::vector<std::int64_t> iota;
  for (int i = 1; i <= 15; ++i) iota.push_back(i);
  EXPECT_TRUE(pin_to_algebra(skeleton(iota), f_nine_tenths(15)).has_value());
  EXPECT_TRUE(pin_to_algebra(skeleton(g14_skeleton_weights()), g14()).has_value());
  // A bracket off the grading is rejected.
  LieAlgebra<Rational> L(3, Q);
  L.add_term(0, 1, 1, Rational(1));
  EXPECT_FALSE(pin_to_algebra(skeleton({1, 1, 2}), L).has_value());
}

TEST(Search, ExhaustiveMatchesDirectEnumeration) {
  const auto cfg = small_config();
  const auto res = search_graded(cfg);
  EXPECT_TRUE(res.exhaustive);
  EXPECT_EQ(res.examined, 343U);

  // Independent enumeration through the dense oracle.
  const std::vector<int> vals{0, -3, -2, -1, 1, 2, 3};
  std::uint64_t jacobi = 0, hits = 0;
  for (int a : vals)
    for (int b : vals)
      for (int c : vals) {
        LieAlgebra<Rational> L(4, Q);
        L.add_term(0, 1, 2, Rational(a));
        L.add_term(0, 2, 3, Rational(b));
        L.add_term(1, 2, 3, Rational(c));
        if (!oracle::jacobi_failures(L).empty()) continue;
        ++jacobi;
        const auto dims = oracle::derived_dims(L);
        if (!dims.empty() && dims.back() == 0 && layers_from_dims(4, dims) == cfg.target.layers) ++hits;
      }
  EXPECT_EQ(res.jacobi_passed, jacobi);
  EXPECT_EQ(res.hits.size(), hits);
  EXPECT_GT(hits, 0U);
  for (const auto& h : res.hits) {
    EXPECT_TRUE(satisfies_jacobi(h.algebra));
    EXPECT_EQ(h.invariants.derived_layers(), cfg.target.layers);
    EXPECT_TRUE(h.algebra == search_candidate(cfg, detail::plan_search(cfg), h.candidate, true));
  }
}

TEST(Search, TargetFilters) {
  auto cfg = small_config();
  cfg.target.max_class = 2;
  for (const auto& h : search_graded(cfg).hits) EXPECT_LE(*h.invariants.nilpotency_class, 2);
  cfg.target.max_class.reset();
  cfg.target.generator_count = 3;
  EXPECT_TRUE(search_graded(cfg).hits.empty());
  // The abelian target is met by the all-zero candidate, index 0.
  auto ab = small_config();
  ab.target.layers = {4};
  const auto res = search_graded(ab);
  ASSERT_EQ(res.hits.size(), 1U);
  EXPECT_EQ(res.hits[0].candidate, 0U);
  EXPECT_EQ(res.hits[0].algebra.bracket_count(), 0);
}

TEST(Search, PinnedG14) {
  SearchConfig<Rational> cfg;
  cfg.field = Q;
  cfg.skeleton = skeleton(g14_skeleton_weights());
  cfg.fixed = *pin_to_algebra(cfg.skeleton, g14());
  cfg.target.layers = layers_from_dims(14, oracle::derived_dims(g14()));
  cfg.target.max_class = 11;
  cfg.target.generator_count = 2;
  const auto res = search_graded(cfg);
  EXPECT_EQ(res.space_size, 1.0L);
  ASSERT_EQ(res.hits.size(), 1U);
  EXPECT_TRUE(res.hits[0].algebra == g14());
}

TEST(Search, DeterministicAcrossThreadsAndRuns) {
  SearchConfig<Rational> cfg;
  cfg.field = Q;
  cfg.skeleton = skeleton({1, 1, 2, 3, 4, 5});
  cfg.target.layers = {2, 3, 1};
  for (int c : {-2, -1, 1, 2}) cfg.coefficients.push_back(Rational(c));
  cfg.budget = 5000;
  cfg.seed = 7;
  cfg.threads = 1;
  const auto one = search_graded(cfg);
  EXPECT_FALSE(one.exhaustive);
  EXPECT_EQ(one.examined, 5000U);
  const std::string a = search_report_jsonl(cfg, one);
  cfg.threads = 4;
  const std::string b = search_report_jsonl(cfg, search_graded(cfg));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, search_report_jsonl(cfg, search_graded(cfg)));
  cfg.seed = 8;
  cfg.threads = 1;
  EXPECT_NE(a, search_report_jsonl(cfg, search_graded(cfg)));
}

TEST(SearchConfigJson, ParsesAndValidates) {
  const auto any = search_config_from_json(parse_document(
      R"({"weights":[1,1,2,3],"target":{"layers":[2,2],"max_class":3},"coefficients":["1","-1/2"],)"
      R"("fixed":[{"i":1,"j":2,"k":3,"value":"1"}],"budget":100,"seed":3})"));
  const auto& cfg = std::get<SearchConfig<Rational>>(any);
  EXPECT_EQ(cfg.skeleton.positions.size(), 3U);
  EXPECT_EQ(cfg.coefficients.size(), 2U);
  EXPECT_EQ(cfg.fixed.at(0), Rational(1));
  EXPECT_EQ(cfg.budget, 100U);
  EXPECT_EQ(cfg.target.max_class, 3);

  auto code = [](const char* text) {
    try {
      search_config_from_json(parse_document(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::MissingAssignment;
  };
  EXPECT_EQ(code(R"({"weights":[1,1,2],"target":{"layers":[2,2]}})"), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code(R"({"target":{"layers":[2,2]}})"), ErrorCode::SchemaError);
  EXPECT_EQ(code(R"({"weights":[1,1,2],"target":{"layers":[2,1]},"fixed":[{"i":1,"j":3,"k":2,"value":"1"}]})"),
            ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code(R"({"weights":[1,1,2],"target":{"layers":[2,1]},"field":{"Fp":6}})"), ErrorCode::InvalidField);
  EXPECT_TRUE(std::holds_alternative<SearchConfig<Fp>>(
      search_config_from_json(parse_document(R"({"weights":[1,1,2],"target":{"layers":[2,1]},"field":{"Fp":2}})"))));
}

TEST(SearchReport, SummaryLine) {
  const auto cfg = small_config();
  const std::string out = search_report_jsonl(cfg, search_graded(cfg));
  const auto last = out.substr(out.rfind('\n', out.size() - 2) + 1);
  const json s = parse_document(last)["summary"];
  EXPECT_EQ(s["status"], "complete");
  EXPECT_EQ(s["mode"], "exhaustive");
  EXPECT_EQ(s["examined"], 343);
  EXPECT_EQ(s["hits"].get<std::size_t>(), s["hit_candidates"].size());
}
