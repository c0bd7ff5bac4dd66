#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "liealg/field.hpp"

namespace liealg {

/// Exponent vector over a fixed, ordered variable list.
using Monomial = std::vector<std::uint16_t>;

inline int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

/// Graded lex: total degree first, then the larger exponent of the earliest
/// differing variable wins.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

/// Sparse multivariate polynomial in a fixed number of variables.
template <FieldScalar T>
class MultiPoly {
 public:
  using Terms = std::map<Monomial, T, GrlexLess>;

  MultiPoly(int nvars, FieldSpec field) : nvars_(nvars), field_(field) {}

  static MultiPoly constant(int nvars, const FieldSpec& field, const T& c) {
    MultiPoly p(nvars, field);
    p.add_term(Monomial(static_cast<std::size_t>(nvars), 0), c);
    return p;
  }
  static MultiPoly variable(int nvars, const FieldSpec& field, int v) {
    Monomial m(static_cast<std::size_t>(nvars), 0);
    m[static_cast<std::size_t>(v)] = 1;
    MultiPoly p(nvars, field);
    p.add_term(m, one<T>(field));
    return p;
  }

  int nvars() const { return nvars_; }
  const FieldSpec& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }
  bool is_constant() const { return degree() <= 0; }

  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  const T& leading_coefficient() const { return terms_.rbegin()->second; }

  T coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? zero<T>(field_) : it->second;
  }

  void add_term(const Monomial& m, const T& c) {
    if (liealg::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (fresh) return;
    it->second += c;
    if (liealg::is_zero(it->second)) terms_.erase(it);
  }

  /// Variables with a positive exponent somewhere.
  std::vector<int> variables() const {
    std::set<int> vs;
    for (const auto& [m, c] : terms_)
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) vs.insert(static_cast<int>(i));
    return {vs.begin(), vs.end()};
  }

  int degree_in(int v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[static_cast<std::size_t>(v)]));
    return d;
  }

  /// Largest e with v^e dividing every term.
  int min_degree_in(int v) const {
    if (terms_.empty()) return 0;
    int d = INT32_MAX;
    for (const auto& [m, c] : terms_) d = std::min(d, static_cast<int>(m[static_cast<std::size_t>(v)]));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return total_degree(t.first) == d; });
  }

  /// Exact division by v^e; requires e <= min_degree_in(v).
  MultiPoly divide_by_variable(int v, int e) const {
    MultiPoly out(nvars_, field_);
    for (const auto& [m, c] : terms_) {
      Monomial q = m;
      q[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(q[static_cast<std::size_t>(v)] - e);
      out.terms_.emplace(std::move(q), c);
    }
    return out;
  }

  MultiPoly operator-() const {
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }
  MultiPoly& operator+=(const MultiPoly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, T(-c));
    return *this;
  }
  MultiPoly& operator*=(const T& s) {
    if (liealg::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const T& s) { return a *= s; }
  friend MultiPoly operator*(const T& s, MultiPoly a) { return a *= s; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    MultiPoly out(a.nvars_, a.field_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma;
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint16_t>(m[i] + mb[i]);
        out.add_term(m, ca * cb);
      }
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [m, c] : a.terms_) {
      if (m != ib->first || !(c == ib->second)) return false;
      ++ib;
    }
    return true;
  }

  MultiPoly pow(int e) const {
    MultiPoly out = constant(nvars_, field_, one<T>(field_));
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  /// Value at a point (one scalar per variable).
  T evaluate(const std::vector<T>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw Error(ErrorCode::DimensionMismatch, "evaluation point");
    T acc = zero<T>(field_);
    for (const auto& [m, c] : terms_) {
      T t = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (int e = 0; e < m[i]; ++e) t *= point[i];
      acc += t;
    }
    return acc;
  }

  /// Replaces variable v by the polynomial q.
  MultiPoly substitute(int v, const MultiPoly& q) const {
    check(q);
    MultiPoly out(nvars_, field_);
    std::vector<MultiPoly> powers{constant(nvars_, field_, one<T>(field_))};
    for (const auto& [m, c] : terms_) {
      const int e = m[static_cast<std::size_t>(v)];
      while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * q);
      Monomial rest = m;
      rest[static_cast<std::size_t>(v)] = 0;
      MultiPoly t(nvars_, field_);
      t.add_term(rest, c);
      out += t * powers[static_cast<std::size_t>(e)];
    }
    return out;
  }

  /// Substitutes every variable with an entry in `values`.
  MultiPoly substitute_values(const std::map<int, T>& values) const {
    MultiPoly out(nvars_, field_);
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      T coef = c;
      for (const auto& [v, x] : values) {
        for (int e = 0; e < m[static_cast<std::size_t>(v)]; ++e) coef *= x;
        rest[static_cast<std::size_t>(v)] = 0;
      }
      out.add_term(rest, coef);
    }
    return out;
  }

  /// Canonical scalar multiple: over Q, coprime integer coefficients with a
  /// positive leading coefficient; over F_p, monic.
  MultiPoly normalized() const {
    if (terms_.empty()) return *this;
    MultiPoly out = *this;
    if constexpr (std::is_same_v<T, Rational>) {
      mpz_class g = 0, l = 1;
      for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
      }
      Rational s(l, g);
      if (leading_coefficient().sign() < 0) s = -s;
      out *= s;
    } else {
      out *= leading_coefficient().inverse();
    }
    return out;
  }

  /// Text with the given variable names, highest term first.
  std::string str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string coef = render_scalar(c);
      bool neg = !coef.empty() && coef[0] == '-';
      if (neg) coef.erase(0, 1);
      if (first) os << (neg ? "-" : "");
      else os << (neg ? " - " : " + ");
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      if (mono.empty()) os << coef;
      else if (coef == "1") os << mono;
      else os << coef << "*" << mono;
    }
    return os.str();
  }

 private:
  void check(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) throw Error(ErrorCode::DimensionMismatch, "polynomial variable count");
    if (!(o.field_ == field_)) throw Error(ErrorCode::FieldMismatch, "polynomial fields");
  }

  int nvars_;
  FieldSpec field_;
  Terms terms_;
};

/// Maps rational coefficients into F_p (NonInvertibleModP on bad denominators).
inline MultiPoly<Fp> reduce_mod_p(const MultiPoly<Rational>& p, const FieldSpec& field) {
  MultiPoly<Fp> out(p.nvars(), field);
  for (const auto& [m, c] : p.terms()) out.add_term(m, ScalarTraits<Fp>::from_rational(c, field));
  return out;
}

}  // namespace liealg
