#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "liealg/series.hpp"

namespace liealg {

/// Allowed structure constant c_ij^k (0-based, i < j).
struct Position {
  int i, j, k;
  friend bool operator==(const Position&, const Position&) = default;
};

struct GradedSkeleton {
  std::vector<std::int64_t> weights;
  std::vector<Position> positions;  // sorted by (w_k, i, j)

  int dim() const { return static_cast<int>(weights.size()); }
  /// Index of (i, j, k) in positions, or -1.
  int find(int i, int j, int k) const;
};

/// All (i < j, k) with w_i + w_j = w_k; BadDimension if a weight is below 1.
GradedSkeleton skeleton(const std::vector<std::int64_t>& weights);

struct SearchTarget {
  std::vector<int> layers;          // (dim g/g^(1), dim g^(1)/g^(2), ...)
  std::optional<int> max_class;
  std::optional<int> generator_count;
};

template <FieldScalar T>
struct SearchConfig {
  FieldSpec field;
  GradedSkeleton skeleton;
  SearchTarget target;
  std::vector<T> coefficients;       // nonzero values tried besides 0
  std::map<int, T> fixed;            // position index -> pinned value (may be 0)
  std::uint64_t budget = 1000000;
  std::uint64_t seed = 0;
  int threads = 1;
};

template <FieldScalar T>
struct SearchHit {
  std::uint64_t candidate = 0;  // index in the enumeration (or sample number)
  LieAlgebra<T> algebra;
  InvariantsReport invariants;
};

template <FieldScalar T>
struct SearchResult {
  std::vector<SearchHit<T>> hits;
  std::uint64_t examined = 0;
  std::uint64_t jacobi_passed = 0;
  long double space_size = 0;
  bool exhaustive = true;  // false: seeded sampling, partial result
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Profile, class bound and generator count of a Lie algebra against the target.
inline bool matches_target(const InvariantsReport& r, const SearchTarget& target) {
  if (!r.solvable() || r.derived_layers() != target.layers) return false;
  if (target.max_class && (!r.nilpotency_class || *r.nilpotency_class > *target.max_class)) return false;
  if (target.generator_count && r.generator_count != *target.generator_count) return false;
  return true;
}

/// Pins every skeleton position to L's structure constant; empty if L has a
/// bracket outside the skeleton.
template <FieldScalar T>
std::optional<std::map<int, T>> pin_to_algebra(const GradedSkeleton& sk, const LieAlgebra<T>& L) {
  if (L.dim() != sk.dim()) return std::nullopt;
  bool inside = true;
  L.for_each_bracket([&](int i, int j, const SparseVec<T>& terms) {
    for (const auto& [k, c] : terms)
      if (sk.find(i, j, k) < 0) inside = false;
  });
  if (!inside) return std::nullopt;
  std::map<int, T> out;
  for (std::size_t p = 0; p < sk.positions.size(); ++p) {
    const auto& pos = sk.positions[p];
    out.emplace(static_cast<int>(p), L.structure_constant(pos.i, pos.j, pos.k));
  }
  return out;
}

namespace detail {

template <FieldScalar T>
struct SearchPlan {
  std::vector<std::vector<T>> values;  // per position, in enumeration order
  long double size = 1;
};

template <FieldScalar T>
SearchPlan<T> plan_search(const SearchConfig<T>& cfg) {
  SearchPlan<T> plan;
  for (std::size_t p = 0; p < cfg.skeleton.positions.size(); ++p) {
    auto it = cfg.fixed.find(static_cast<int>(p));
    std::vector<T> vals;
    if (it != cfg.fixed.end()) {
      vals.push_back(it->second);
    } else {
      vals.push_back(zero<T>(cfg.field));
      for (const auto& c : cfg.coefficients)
        if (!is_zero(c)) vals.push_back(c);
    }
    plan.size *= static_cast<long double>(vals.size());
    plan.values.push_back(std::move(vals));
  }
  return plan;
}

}  // namespace detail

/// Candidate number `index`: mixed radix with the first position most
/// significant when exhaustive, otherwise digits drawn from splitmix64.
template <FieldScalar T>
LieAlgebra<T> search_candidate(const SearchConfig<T>& cfg, const detail::SearchPlan<T>& plan, std::uint64_t index,
                               bool exhaustive) {
  const auto& pos = cfg.skeleton.positions;
  const std::size_t np = pos.size();
  std::vector<std::size_t> digit(np, 0);
  if (exhaustive) {
    std::uint64_t r = index;
    for (std::size_t p = np; p-- > 0;) {
      const auto radix = plan.values[p].size();
      digit[p] = static_cast<std::size_t>(r % radix);
      r /= radix;
    }
  } else {
    std::uint64_t state = splitmix64(cfg.seed ^ splitmix64(index));
    for (std::size_t p = 0; p < np; ++p) {
      state = splitmix64(state);
      digit[p] = static_cast<std::size_t>(state % plan.values[p].size());
    }
  }
  LieAlgebra<T> L(cfg.skeleton.dim(), cfg.field);
  for (std::size_t p = 0; p < np; ++p) L.add_term(pos[p].i, pos[p].j, pos[p].k, plan.values[p][digit[p]]);
  return L;
}

/// Enumerates or samples coefficient assignments on the skeleton and keeps the
/// Lie algebras whose invariants match the target. Work is split into chunks
/// and merged in index order, so the result does not depend on `threads`.
template <FieldScalar T>
SearchResult<T> search_graded(const SearchConfig<T>& cfg) {
  const auto plan = detail::plan_search(cfg);
  SearchResult<T> res;
  res.space_size = plan.size;
  res.exhaustive = plan.size <= static_cast<long double>(cfg.budget);
  const std::uint64_t count = res.exhaustive ? static_cast<std::uint64_t>(plan.size) : cfg.budget;

  constexpr std::uint64_t chunk = 1024;
  const std::uint64_t nchunks = (count + chunk - 1) / chunk;
  std::vector<std::vector<SearchHit<T>>> chunk_hits(static_cast<std::size_t>(nchunks));
  std::vector<std::uint64_t> chunk_jacobi(static_cast<std::size_t>(nchunks), 0);
  std::atomic<std::uint64_t> next{0};

  auto worker = [&] {
    while (true) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= nchunks) return;
      const std::uint64_t end = std::min(count, (c + 1) * chunk);
      for (std::uint64_t idx = c * chunk; idx < end; ++idx) {
        LieAlgebra<T> L = search_candidate(cfg, plan, idx, res.exhaustive);
        if (!satisfies_jacobi(L)) continue;
        ++chunk_jacobi[static_cast<std::size_t>(c)];
        InvariantsReport inv = invariants(L);
        if (matches_target(inv, cfg.target))
          chunk_hits[static_cast<std::size_t>(c)].push_back({idx, std::move(L), std::move(inv)});
      }
    }
  };
  const int nthreads = std::max(1, cfg.threads);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (std::size_t c = 0; c < chunk_hits.size(); ++c) {
    res.jacobi_passed += chunk_jacobi[c];
    for (auto& h : chunk_hits[c]) res.hits.push_back(std::move(h));
  }
  res.examined = count;
  return res;
}

}  // namespace liealg
