#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liealg/echelon.hpp"
#include "liealg/poly.hpp"

namespace liealg {

/// point + span(directions) inside K^n.
template <FieldScalar T>
struct AffineComponent {
  Vector<T> point;
  Subspace<T> directions;

  int dim() const { return directions.dim(); }

  bool contains(const Vector<T>& x) const { return directions.contains(Vector<T>(x - point)); }

  bool contains(const AffineComponent& o) const {
    return contains(o.point) && directions.contains(o.directions);
  }

  /// e.g. "(0, t1, 3*t1)".
  std::string str() const {
    std::string out = "(";
    for (Eigen::Index i = 0; i < point.size(); ++i) {
      std::string c = is_zero(point(i)) ? "" : render_scalar(point(i));
      for (int r = 0; r < dim(); ++r) {
        const T& d = directions.basis()(r, i);
        if (is_zero(d)) continue;
        std::string coef = render_scalar(d);
        std::string term = (coef == "1" ? "" : (coef == "-1" ? "-" : coef + "*")) + "t" + std::to_string(r + 1);
        if (c.empty()) c = term;
        else c += (term[0] == '-' ? " - " + term.substr(1) : " + " + term);
      }
      out += (i ? ", " : "") + (c.empty() ? std::string("0") : c);
    }
    return out + ")";
  }
};

template <FieldScalar T>
struct CaseLeaf {
  enum class Kind { Solution, Inconsistent, Unresolved };
  Kind kind;
  std::vector<std::string> path;  // branch decisions from the root
  std::optional<AffineComponent<T>> component;
  std::vector<MultiPoly<T>> remaining;  // for unresolved leaves
};

template <FieldScalar T>
struct CaseAnalysis {
  std::vector<CaseLeaf<T>> leaves;
  std::vector<AffineComponent<T>> components;  // maximal solution components

  bool complete() const {
    for (const auto& l : leaves)
      if (l.kind == CaseLeaf<T>::Kind::Unresolved) return false;
    return true;
  }

  bool contains(const Vector<T>& x) const {
    for (const auto& c : components)
      if (c.contains(x)) return true;
    return false;
  }
};

namespace detail {

inline std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Distinct roots in K of a univariate polynomial given by coefficients c[0..d].
template <FieldScalar T>
std::optional<std::vector<T>> univariate_roots(const std::vector<T>& c, const FieldSpec& field) {
  auto eval = [&](const T& x) {
    T acc = zero<T>(field);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  std::vector<T> roots;
  if constexpr (std::is_same_v<T, Rational>) {
    mpz_class l = 1;
    for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    const mpz_class a0 = (c.front() * Rational(l, 1)).num();
    const mpz_class ad = (c.back() * Rational(l, 1)).num();
    if (a0 == 0) {
      roots.push_back(Rational(0));
      std::vector<T> rest(c.begin() + 1, c.end());
      while (!rest.empty() && rest.front().is_zero()) rest.erase(rest.begin());
      auto more = univariate_roots<T>(rest, field);
      if (!more) return std::nullopt;
      roots.insert(roots.end(), more->begin(), more->end());
      return roots;
    }
    if (abs(a0) > mpz_class("1000000000000") || abs(ad) > mpz_class("1000000000000")) return std::nullopt;
    for (const auto& p : positive_divisors(a0))
      for (const auto& q : positive_divisors(ad))
        for (int s : {1, -1}) {
          Rational r(s * p, q);
          if (eval(r).is_zero() && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
    std::sort(roots.begin(), roots.end());
  } else {
    if (field.p > 1000000) return std::nullopt;
    for (std::uint32_t v = 0; v < field.p; ++v) {
      Fp x(static_cast<std::int64_t>(v), field.p);
      if (eval(x).is_zero()) roots.push_back(x);
    }
  }
  return roots;
}

template <FieldScalar T>
struct CaseState {
  std::vector<MultiPoly<T>> polys;
  std::vector<std::optional<MultiPoly<T>>> subst;
  std::vector<std::string> path;
};

template <FieldScalar T>
class CaseSolver {
 public:
  CaseSolver(int nvars, FieldSpec field, std::vector<std::string> names)
      : n_(nvars), field_(field), names_(std::move(names)) {}

  CaseAnalysis<T> run(const std::vector<MultiPoly<T>>& system) {
    CaseState<T> s;
    s.polys = system;
    s.subst.resize(static_cast<std::size_t>(n_));
    recurse(std::move(s), 0);
    collect();
    return std::move(out_);
  }

 private:
  using Kind = typename CaseLeaf<T>::Kind;

  MultiPoly<T> var(int v) const { return MultiPoly<T>::variable(n_, field_, v); }

  /// v := q in every polynomial and every earlier substitution.
  CaseState<T> assign(CaseState<T> s, int v, const MultiPoly<T>& q, std::string label) const {
    for (auto& p : s.polys) p = p.substitute(v, q);
    for (auto& e : s.subst)
      if (e) *e = e->substitute(v, q);
    s.subst[static_cast<std::size_t>(v)] = q;
    s.path.push_back(std::move(label));
    return s;
  }

  std::string eq_label(int v, const MultiPoly<T>& q) const { return names_[static_cast<std::size_t>(v)] + " = " + q.str(names_); }

  void leaf(Kind kind, const CaseState<T>& s, std::vector<MultiPoly<T>> remaining = {}) {
    CaseLeaf<T> l{kind, s.path, std::nullopt, std::move(remaining)};
    if (kind == Kind::Solution) l.component = component_of(s);
    out_.leaves.push_back(std::move(l));
  }

  AffineComponent<T> component_of(const CaseState<T>& s) const {
    const std::vector<T> origin(static_cast<std::size_t>(n_), zero<T>(field_));
    Vector<T> point = zero_vector<T>(n_, field_);
    std::vector<Vector<T>> dirs;
    for (int i = 0; i < n_; ++i)
      if (s.subst[static_cast<std::size_t>(i)]) point(i) = s.subst[static_cast<std::size_t>(i)]->evaluate(origin);
    for (int f = 0; f < n_; ++f) {
      if (s.subst[static_cast<std::size_t>(f)]) continue;
      Vector<T> d = zero_vector<T>(n_, field_);
      d(f) = one<T>(field_);
      Monomial m(static_cast<std::size_t>(n_), 0);
      m[static_cast<std::size_t>(f)] = 1;
      for (int i = 0; i < n_; ++i)
        if (s.subst[static_cast<std::size_t>(i)]) d(i) = s.subst[static_cast<std::size_t>(i)]->coefficient(m);
      dirs.push_back(d);
    }
    return {point, Subspace<T>::span(dirs, n_, field_)};
  }

  void recurse(CaseState<T> s, int depth) {
    std::vector<MultiPoly<T>> live;
    for (auto& p : s.polys) {
      if (p.is_zero()) continue;
      if (p.is_constant()) return leaf(Kind::Inconsistent, s);
      live.push_back(std::move(p));
    }
    std::stable_sort(live.begin(), live.end(), [](const auto& a, const auto& b) { return a.degree() < b.degree(); });
    s.polys = std::move(live);
    if (s.polys.empty()) return leaf(Kind::Solution, s);
    if (depth > 4 * n_ + 16) return leaf(Kind::Unresolved, s, s.polys);

    // Linear: solve for the highest-index variable.
    for (std::size_t t = 0; t < s.polys.size(); ++t) {
      const auto& p = s.polys[t];
      if (p.degree() != 1) continue;
      const int v = p.variables().back();
      Monomial m(static_cast<std::size_t>(n_), 0);
      m[static_cast<std::size_t>(v)] = 1;
      const T c = p.coefficient(m);
      MultiPoly<T> q = (var(v) - p * c.inverse());
      return recurse(assign(std::move(s), v, q, eq_label(v, q)), depth + 1);
    }
    // A variable dividing every term: v = 0, or the cofactor vanishes.
    for (std::size_t t = 0; t < s.polys.size(); ++t) {
      for (int v : s.polys[t].variables()) {
        const int e = s.polys[t].min_degree_in(v);
        if (e == 0) continue;
        const MultiPoly<T> zero_poly(n_, field_);
        recurse(assign(s, v, zero_poly, names_[static_cast<std::size_t>(v)] + " = 0"), depth + 1);
        CaseState<T> other = s;
        other.polys[t] = s.polys[t].divide_by_variable(v, e);
        other.path.push_back(other.polys[t].str(names_) + " = 0");
        return recurse(std::move(other), depth + 1);
      }
    }
    // Univariate: branch on the roots.
    for (std::size_t t = 0; t < s.polys.size(); ++t) {
      const auto vars = s.polys[t].variables();
      if (vars.size() != 1) continue;
      const int v = vars.front();
      std::vector<T> c(static_cast<std::size_t>(s.polys[t].degree_in(v) + 1), zero<T>(field_));
      for (const auto& [m, k] : s.polys[t].terms()) c[m[static_cast<std::size_t>(v)]] = k;
      auto roots = univariate_roots<T>(c, field_);
      if (!roots) continue;
      if (roots->empty()) {
        s.path.push_back(s.polys[t].str(names_) + " has no root");
        return leaf(Kind::Inconsistent, s);
      }
      for (const auto& r : *roots) {
        auto q = MultiPoly<T>::constant(n_, field_, r);
        recurse(assign(s, v, q, eq_label(v, q)), depth + 1);
      }
      return;
    }
    // Homogeneous in two variables a < b: a = 0, or b = r a for a root r.
    for (std::size_t t = 0; t < s.polys.size(); ++t) {
      const auto& p = s.polys[t];
      const auto vars = p.variables();
      if (vars.size() != 2 || !p.is_homogeneous()) continue;
      const int a = vars[0], b = vars[1];
      std::vector<T> c(static_cast<std::size_t>(p.degree_in(b) + 1), zero<T>(field_));
      for (const auto& [m, k] : p.terms()) c[m[static_cast<std::size_t>(b)]] = k;
      auto roots = univariate_roots<T>(c, field_);
      if (!roots) continue;
      const MultiPoly<T> zero_poly(n_, field_);
      recurse(assign(s, a, zero_poly, names_[static_cast<std::size_t>(a)] + " = 0"), depth + 1);
      for (const auto& r : *roots) {
        MultiPoly<T> q = var(a) * r;
        recurse(assign(s, b, q, eq_label(b, q)), depth + 1);
      }
      return;
    }
    leaf(Kind::Unresolved, s, s.polys);
  }

  void collect() {
    std::vector<AffineComponent<T>> all;
    for (const auto& l : out_.leaves)
      if (l.component) all.push_back(*l.component);
    // Larger components first so that duplicates keep the first occurrence.
    std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.dim() > y.dim(); });
    for (const auto& c : all) {
      bool covered = false;
      for (const auto& k : out_.components)
        if (k.contains(c)) covered = true;
      if (!covered) out_.components.push_back(c);
    }
  }

  int n_;
  FieldSpec field_;
  std::vector<std::string> names_;
  CaseAnalysis<T> out_;
};

}  // namespace detail

/// Branching solver for small systems whose polynomials eventually become
/// linear, monomial-divisible, univariate or homogeneous bivariate. Leaves
/// that fit none of these are reported as unresolved.
template <FieldScalar T>
CaseAnalysis<T> solve_by_cases(const std::vector<MultiPoly<T>>& system, const std::vector<std::string>& names) {
  if (system.empty()) throw Error(ErrorCode::DimensionMismatch, "empty system has no variable count");
  const int n = system.front().nvars();
  return detail::CaseSolver<T>(n, system.front().field(), names).run(system);
}

/// Every point of K^n (K = F_p) on which all polynomials vanish.
inline std::vector<Vector<Fp>> brute_force_zeros(const std::vector<MultiPoly<Fp>>& system, int nvars,
                                                 const FieldSpec& field) {
  std::vector<Vector<Fp>> out;
  std::vector<Fp> x(static_cast<std::size_t>(nvars), Fp(0, field.p));
  std::uint64_t total = 1;
  for (int i = 0; i < nvars; ++i) total *= field.p;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (int i = nvars - 1; i >= 0; --i) {
      x[static_cast<std::size_t>(i)] = Fp(static_cast<std::int64_t>(r % field.p), field.p);
      r /= field.p;
    }
    bool ok = true;
    for (const auto& p : system)
      if (!p.evaluate(x).is_zero()) {
        ok = false;
        break;
      }
    if (!ok) continue;
    Vector<Fp> v(nvars);
    for (int i = 0; i < nvars; ++i) v(i) = x[static_cast<std::size_t>(i)];
    out.push_back(v);
  }
  return out;
}

/// All F_p points of a component, in lexicographic order of the parameters.
inline std::vector<Vector<Fp>> component_points(const AffineComponent<Fp>& c, const FieldSpec& field) {
  std::vector<Vector<Fp>> out;
  const int d = c.dim();
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= field.p;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Vector<Fp> v = c.point;
    std::uint64_t r = idx;
    for (int i = d - 1; i >= 0; --i) {
      const Fp t(static_cast<std::int64_t>(r % field.p), field.p);
      r /= field.p;
      for (Eigen::Index j = 0; j < v.size(); ++j) v(j) += t * c.directions.basis()(i, j);
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace liealg
