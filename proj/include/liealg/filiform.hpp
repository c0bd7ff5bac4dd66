#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liealg/algebra.hpp"
#include "liealg/poly.hpp"
#include "liealg/solver.hpp"

namespace liealg {

/// Label of the parameter alpha_{k,s}: coefficient of e_s in [e_k, e_{k+1}].
struct ParamIndex {
  int k = 0;
  int s = 0;
  std::string name() const { return "a" + std::to_string(k) + "_" + std::to_string(s); }
  friend auto operator<=>(const ParamIndex&, const ParamIndex&) = default;
};

/// {(k,s) : 2 <= k <= n/2, 2k+1 <= s <= n} plus (n/2, n) for n >= 4, sorted.
/// For n = 3 the extra pair would be (1,3), which clashes with [e_1,e_2] = e_3,
/// so it is left out.
std::vector<ParamIndex> parameter_indices(int n);

using QPoly = MultiPoly<Rational>;

/// Filiform algebra in an adapted basis with polynomial structure constants.
/// Basis indices are 1-based here, as in the adapted-basis formulas.
class SymbolicFiliform {
 public:
  explicit SymbolicFiliform(int n);

  int n() const { return n_; }
  const std::vector<ParamIndex>& params() const { return params_; }
  int nvars() const { return static_cast<int>(params_.size()); }
  std::vector<std::string> names() const;
  /// Variable number of a parameter, or -1.
  int var_of(const ParamIndex& p) const;

  /// Coefficients of [e_i, e_j] on e_1..e_n (entry 0 unused), any i, j.
  std::vector<QPoly> bracket(int i, int j) const;
  /// Stored coefficients for i < j.
  const std::vector<QPoly>& stored(int i, int j) const { return table_[slot(i, j)]; }

  QPoly zero_poly() const { return QPoly(nvars(), FieldSpec::rationals()); }

 private:
  friend SymbolicFiliform build_symbolic(int n);
  std::size_t slot(int i, int j) const { return static_cast<std::size_t>(i * (n_ + 1) + j); }

  int n_;
  std::vector<ParamIndex> params_;
  std::vector<std::vector<QPoly>> table_;
};

/// Seeds [e_1,e_i] = e_{i+1} and [e_k,e_{k+1}] = sum_s alpha_{k,s} e_s, then
/// fills [e_i,e_j] (j >= i+2) by [e_i,e_j] = ad(e_1)[e_i,e_{j-1}] - [e_{i+1},e_{j-1}].
SymbolicFiliform build_symbolic(int n);

/// One coordinate of J(e_a, e_b, e_c) (1-based).
struct Constraint {
  int a = 0, b = 0, c = 0;
  int s = 0;
  QPoly poly;
};

struct ConstraintSet {
  std::vector<Constraint> constraints;  // triples with 2 <= a < b < c, nonzero coordinates only
  int e1_triples = 0;                    // triples (1, b, c) expanded for verification
  bool e1_triples_vanish = true;
};

ConstraintSet jacobi_constraints(const SymbolicFiliform& sf);

using Assignment = std::map<ParamIndex, Rational>;

/// Throws MissingAssignment unless every parameter of the model is assigned.
std::vector<Rational> assignment_point(const SymbolicFiliform& sf, const Assignment& values);

template <FieldScalar T>
LieAlgebra<T> specialize_as(const SymbolicFiliform& sf, const Assignment& values, const FieldSpec& field) {
  const std::vector<Rational> point = assignment_point(sf, values);
  const int n = sf.n();
  LieAlgebra<T> L(n, field);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const auto& row = sf.stored(i, j);
      for (int s = 1; s <= n; ++s) {
        if (row[static_cast<std::size_t>(s)].is_zero()) continue;
        const Rational v = row[static_cast<std::size_t>(s)].evaluate(point);
        L.add_term(i - 1, j - 1, s - 1, ScalarTraits<T>::from_rational(v, field));
      }
    }
  return L;
}

LieAlgebra<Rational> specialize(const SymbolicFiliform& sf, const Assignment& values);
std::vector<Rational> specialize(const std::vector<Constraint>& cs, const SymbolicFiliform& sf,
                                 const Assignment& values);

/// Parameter values of f_{9/10,n}: alpha_{k,2k+1} = 6 / (k(k+1) C(2k-1, k-2)), others 0.
Assignment f910_parameters(int n);

/// [e_{i+1}, e_{n-i}] = (-1)^i alpha e_n for 1 <= i < n-1 with one common alpha
/// (zero when n is odd). Returns alpha when the condition holds.
std::optional<Rational> third_adapted_condition(const LieAlgebra<Rational>& L);

/// The printed relations in (x1, x2, x3) = (alpha_{4,9}, alpha_{3,7}, alpha_{2,5}).
std::vector<QPoly> printed_relations();

/// A constraint with every term divisible by alpha_{7,14}; `power` of it divided out.
struct DivisibleConstraint {
  Constraint source;
  int power = 0;
  QPoly quotient;
};

/// Linear relation var = expr obtained from the divisible constraints.
struct LinearRelation {
  ParamIndex var;
  QPoly expr;
};

/// A constraint that only involves x1, x2, x3 after the linear relations are
/// substituted, rewritten in those three variables.
struct ProjectedRelation {
  Constraint source;
  QPoly poly;
};

struct PrintedMatch {
  int printed = 0;                 // 0, 1, 2 for the three printed relations
  std::optional<std::size_t> projected;  // index into projected, best candidate
  bool exact = false;              // equal up to a nonzero scalar
  Rational scale;                  // printed = scale * generated (+ difference)
  QPoly difference;                // printed - scale * generated
  bool in_span = false;            // printed lies in the Q-span of all projected relations
};

template <FieldScalar T>
struct FiniteFieldCheck {
  std::uint32_t p = 0;
  std::size_t brute_force_count = 0;
  std::size_t solver_count = 0;
  bool solver_complete = false;
  bool agree = false;
  std::vector<Vector<T>> zeros;
};

struct SubsystemAnalysis {
  int n = 14;
  std::vector<std::string> x_names{"x1", "x2", "x3"};
  std::vector<ParamIndex> x_params{{4, 9}, {3, 7}, {2, 5}};
  ParamIndex top{7, 14};
  std::size_t constraint_count = 0;
  std::vector<DivisibleConstraint> divisible;
  std::vector<LinearRelation> relations;
  std::vector<ProjectedRelation> projected;
  std::vector<QPoly> printed;
  std::vector<PrintedMatch> matches;
  CaseAnalysis<Rational> printed_solutions;
  CaseAnalysis<Rational> generated_solutions;  // best-matching projected relations
  CaseAnalysis<Rational> projected_solutions;  // all projected relations
  std::vector<FiniteFieldCheck<Fp>> finite_field_checks;
};

/// Reduction of the n = 14 constraint system under alpha_{7,14} != 0 to the
/// parameters (x1, x2, x3), compared with the printed relations.
SubsystemAnalysis n14_subsystem();

/// Brute force over F_p^3 against the case solver for the printed relations.
FiniteFieldCheck<Fp> printed_system_check(std::uint32_t p);

}  // namespace liealg
