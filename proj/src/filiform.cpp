#include "liealg/filiform.hpp"

#include <set>

#include "liealg/catalog.hpp"

namespace liealg {

std::vector<ParamIndex> parameter_indices(int n) {
  std::set<ParamIndex> out;
  for (int k = 2; k <= n / 2; ++k)
    for (int s = 2 * k + 1; s <= n; ++s) out.insert({k, s});
  if (n >= 4) out.insert({n / 2, n});
  return {out.begin(), out.end()};
}

SymbolicFiliform::SymbolicFiliform(int n) : n_(n), params_(parameter_indices(n)) {
  if (n < 3) throw Error(ErrorCode::BadDimension, "filiform model needs n >= 3");
  table_.assign(static_cast<std::size_t>((n + 1) * (n + 1)),
                std::vector<QPoly>(static_cast<std::size_t>(n + 1), zero_poly()));
}

std::vector<std::string> SymbolicFiliform::names() const {
  std::vector<std::string> out;
  for (const auto& p : params_) out.push_back(p.name());
  return out;
}

int SymbolicFiliform::var_of(const ParamIndex& p) const {
  auto it = std::lower_bound(params_.begin(), params_.end(), p);
  return it != params_.end() && *it == p ? static_cast<int>(it - params_.begin()) : -1;
}

std::vector<QPoly> SymbolicFiliform::bracket(int i, int j) const {
  if (i == j) return std::vector<QPoly>(static_cast<std::size_t>(n_ + 1), zero_poly());
  if (i < j) return table_[slot(i, j)];
  std::vector<QPoly> out = table_[slot(j, i)];
  for (auto& p : out) p = -p;
  return out;
}

SymbolicFiliform build_symbolic(int n) {
  SymbolicFiliform sf(n);
  const int nv = sf.nvars();
  const FieldSpec q = FieldSpec::rationals();
  for (int i = 2; i <= n - 1; ++i) sf.table_[sf.slot(1, i)][static_cast<std::size_t>(i + 1)] = QPoly::constant(nv, q, Rational(1));
  for (int v = 0; v < nv; ++v) {
    const ParamIndex& p = sf.params_[static_cast<std::size_t>(v)];
    sf.table_[sf.slot(p.k, p.k + 1)][static_cast<std::size_t>(p.s)] += QPoly::variable(nv, q, v);
  }
  // ad(e_1) maps e_m to e_{m+1} for m >= 2 and kills e_n; brackets of e_i, e_j
  // with i, j >= 2 have no e_1 or e_2 component.
  for (int d = 2; d <= n - 2; ++d)
    for (int i = 2; i + d <= n; ++i) {
      const int j = i + d;
      auto& out = sf.table_[sf.slot(i, j)];
      const auto& prev = sf.table_[sf.slot(i, j - 1)];
      for (int s = 2; s < n; ++s) out[static_cast<std::size_t>(s + 1)] += prev[static_cast<std::size_t>(s)];
      const auto inner = sf.bracket(i + 1, j - 1);
      for (int s = 1; s <= n; ++s) out[static_cast<std::size_t>(s)] -= inner[static_cast<std::size_t>(s)];
    }
  return sf;
}

namespace {

/// Coordinates of J(e_a, e_b, e_c).
std::vector<QPoly> jacobiator(const SymbolicFiliform& sf, int a, int b, int c) {
  const int n = sf.n();
  std::vector<QPoly> out(static_cast<std::size_t>(n + 1), sf.zero_poly());
  auto term = [&](int x, int y, int z) {  // [e_x, [e_y, e_z]]
    const auto inner = sf.bracket(y, z);
    for (int m = 1; m <= n; ++m) {
      const auto& coef = inner[static_cast<std::size_t>(m)];
      if (coef.is_zero() || m == x) continue;
      const auto outer = sf.bracket(x, m);
      for (int s = 1; s <= n; ++s)
        if (!outer[static_cast<std::size_t>(s)].is_zero())
          out[static_cast<std::size_t>(s)] += coef * outer[static_cast<std::size_t>(s)];
    }
  };
  term(a, b, c);
  term(b, c, a);
  term(c, a, b);
  return out;
}

}  // namespace

ConstraintSet jacobi_constraints(const SymbolicFiliform& sf) {
  ConstraintSet cs;
  const int n = sf.n();
  for (int b = 2; b <= n; ++b)
    for (int c = b + 1; c <= n; ++c) {
      ++cs.e1_triples;
      for (const auto& p : jacobiator(sf, 1, b, c))
        if (!p.is_zero()) cs.e1_triples_vanish = false;
    }
  for (int a = 2; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        auto J = jacobiator(sf, a, b, c);
        for (int s = 1; s <= n; ++s)
          if (!J[static_cast<std::size_t>(s)].is_zero())
            cs.constraints.push_back({a, b, c, s, std::move(J[static_cast<std::size_t>(s)])});
      }
  return cs;
}

std::vector<Rational> assignment_point(const SymbolicFiliform& sf, const Assignment& values) {
  std::vector<Rational> point;
  for (const auto& p : sf.params()) {
    auto it = values.find(p);
    if (it == values.end()) throw Error(ErrorCode::MissingAssignment, "no value for " + p.name());
    point.push_back(it->second);
  }
  return point;
}

LieAlgebra<Rational> specialize(const SymbolicFiliform& sf, const Assignment& values) {
  return specialize_as<Rational>(sf, values, FieldSpec::rationals());
}

std::vector<Rational> specialize(const std::vector<Constraint>& cs, const SymbolicFiliform& sf,
                                 const Assignment& values) {
  const auto point = assignment_point(sf, values);
  std::vector<Rational> out;
  for (const auto& c : cs) out.push_back(c.poly.evaluate(point));
  return out;
}

Assignment f910_parameters(int n) {
  Assignment a;
  for (const auto& p : parameter_indices(n))
    a[p] = (p.s == 2 * p.k + 1) ? f_nine_tenths_coefficient(p.k, p.k + 1) : Rational(0);
  return a;
}

std::optional<Rational> third_adapted_condition(const LieAlgebra<Rational>& L) {
  const int n = L.dim();
  if (n < 3) return std::nullopt;
  // i = 1 gives [e_2, e_{n-1}] = -alpha e_n.
  const Rational alpha = -L.structure_constant(1, n - 2, n - 1);
  if (n % 2 == 1 && !alpha.is_zero()) return std::nullopt;
  for (int i = 1; i < n - 1; ++i) {
    const Rational expected = (i % 2 == 0) ? alpha : -alpha;
    const auto terms = L.bracket_basis(i, n - i - 1);  // [e_{i+1}, e_{n-i}] in 0-based indices
    if (expected.is_zero()) {
      if (!terms.empty()) return std::nullopt;
    } else if (terms.size() != 1 || terms.front().first != n - 1 || !(terms.front().second == expected)) {
      return std::nullopt;
    }
  }
  return alpha;
}

std::vector<QPoly> printed_relations() {
  const FieldSpec q = FieldSpec::rationals();
  const QPoly x1 = QPoly::variable(3, q, 0), x2 = QPoly::variable(3, q, 1), x3 = QPoly::variable(3, q, 2);
  auto k = [&](std::int64_t v) { return QPoly::constant(3, q, Rational(v)); };
  const QPoly f1 = x1 * (x2 + k(2) * x3);
  const QPoly f2 = k(3) * x1 * (x2 + k(2) * x3 - k(21) * x1) + k(2) * (k(3) * x2 - x3) * (x2 - x3);
  const QPoly f3 = x1 * (k(5) * x1 + k(3) * x2);
  return {f1, f2, f3};
}

FiniteFieldCheck<Fp> printed_system_check(std::uint32_t p) {
  const FieldSpec field = FieldSpec::prime(p);
  std::vector<MultiPoly<Fp>> system;
  for (const auto& f : printed_relations()) system.push_back(reduce_mod_p(f, field));
  FiniteFieldCheck<Fp> out;
  out.p = p;
  out.zeros = brute_force_zeros(system, 3, field);
  out.brute_force_count = out.zeros.size();
  const auto analysis = solve_by_cases(system, {"x1", "x2", "x3"});
  out.solver_complete = analysis.complete();
  auto key = [](const Vector<Fp>& v) {
    std::vector<std::int64_t> k;
    for (Eigen::Index i = 0; i < v.size(); ++i) k.push_back(v(i).value());
    return k;
  };
  std::set<std::vector<std::int64_t>> from_solver, from_scan;
  for (const auto& c : analysis.components)
    for (const auto& v : component_points(c, field)) from_solver.insert(key(v));
  for (const auto& v : out.zeros) from_scan.insert(key(v));
  out.solver_count = from_solver.size();
  out.agree = out.solver_complete && from_solver == from_scan;
  return out;
}

SubsystemAnalysis n14_subsystem() {
  SubsystemAnalysis r;
  const SymbolicFiliform sf = build_symbolic(r.n);
  const ConstraintSet cs = jacobi_constraints(sf);
  r.constraint_count = cs.constraints.size();
  const int nv = sf.nvars();
  const FieldSpec q = FieldSpec::rationals();
  const int t = sf.var_of(r.top);

  std::vector<int> x_vars;
  for (const auto& p : r.x_params) x_vars.push_back(sf.var_of(p));
  auto is_x = [&](int v) { return std::find(x_vars.begin(), x_vars.end(), v) != x_vars.end(); };

  for (const auto& c : cs.constraints) {
    const int e = c.poly.min_degree_in(t);
    if (e > 0) r.divisible.push_back({c, e, c.poly.divide_by_variable(t, e)});
  }

  // Linear quotients, eliminated with the x variables ordered last so that
  // other parameters get expressed through x1, x2, x3 where possible.
  std::vector<int> order;
  for (int v = 0; v < nv; ++v)
    if (!is_x(v)) order.push_back(v);
  for (int v = nv - 1; v >= 0; --v)
    if (is_x(v)) order.push_back(v);
  std::vector<int> column(static_cast<std::size_t>(nv));
  for (int c = 0; c < nv; ++c) column[static_cast<std::size_t>(order[static_cast<std::size_t>(c)])] = c;
  EchelonBuilder<Rational> lin(nv, q);
  for (const auto& d : r.divisible) {
    if (d.quotient.degree() != 1 || d.quotient.degree_in(t) > 0) continue;
    SparseVec<Rational> row;
    for (const auto& [m, c] : d.quotient.terms()) {
      if (total_degree(m) != 1) continue;  // inhomogeneous linear forms do not occur here
      const int v = static_cast<int>(std::find(m.begin(), m.end(), 1) - m.begin());
      row.emplace_back(column[static_cast<std::size_t>(v)], c);
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    lin.insert(std::move(row));
  }
  for (const auto& row : lin.reduced_rows()) {
    const int pv = order[static_cast<std::size_t>(row.front().first)];
    QPoly expr(nv, q);
    for (std::size_t e = 1; e < row.size(); ++e)
      expr -= QPoly::variable(nv, q, order[static_cast<std::size_t>(row[e].first)]) * row[e].second;
    r.relations.push_back({sf.params()[static_cast<std::size_t>(pv)], std::move(expr)});
  }

  // Rewrite every constraint; keep those left in x1, x2, x3 only.
  for (const auto& c : cs.constraints) {
    QPoly p = c.poly;
    for (const auto& rel : r.relations) p = p.substitute(sf.var_of(rel.var), rel.expr);
    if (p.is_zero()) continue;
    const auto vars = p.variables();
    if (!std::all_of(vars.begin(), vars.end(), is_x)) continue;
    QPoly small(3, q);
    for (const auto& [m, coef] : p.terms()) {
      Monomial m3(3, 0);
      for (int i = 0; i < 3; ++i) m3[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(x_vars[static_cast<std::size_t>(i)])];
      small.add_term(m3, coef);
    }
    r.projected.push_back({c, std::move(small)});
  }

  // Span test over the monomials that occur.
  r.printed = printed_relations();
  std::map<Monomial, int, GrlexLess> mono_index;
  auto index_all = [&](const QPoly& p) {
    for (const auto& [m, c] : p.terms()) mono_index.try_emplace(m, static_cast<int>(mono_index.size()));
  };
  for (const auto& pr : r.projected) index_all(pr.poly);
  for (const auto& f : r.printed) index_all(f);
  auto as_row = [&](const QPoly& p) {
    SparseVec<Rational> row;
    for (const auto& [m, c] : p.terms()) row.emplace_back(mono_index.at(m), c);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
  };
  EchelonBuilder<Rational> span(static_cast<int>(mono_index.size()), q);
  for (const auto& pr : r.projected) span.insert(as_row(pr.poly));

  for (int f = 0; f < 3; ++f) {
    const QPoly& printed = r.printed[static_cast<std::size_t>(f)];
    PrintedMatch m{f, std::nullopt, false, Rational(0), printed, span.contains(as_row(printed))};
    const Monomial& lead = printed.leading_monomial();
    for (std::size_t g = 0; g < r.projected.size(); ++g) {
      const QPoly& gen = r.projected[g].poly;
      const Rational gl = gen.coefficient(lead);
      if (gl.is_zero()) continue;
      const Rational scale = printed.leading_coefficient() / gl;
      QPoly diff = printed - gen * scale;
      const bool better = !m.projected || diff.size() < m.difference.size();
      if (better) {
        m.projected = g;
        m.scale = scale;
        m.difference = std::move(diff);
        m.exact = m.difference.is_zero();
      }
      if (m.exact) break;
    }
    r.matches.push_back(std::move(m));
  }

  r.printed_solutions = solve_by_cases(r.printed, r.x_names);
  std::vector<QPoly> chosen;
  std::set<std::size_t> used;
  for (const auto& m : r.matches)
    if (m.projected && used.insert(*m.projected).second) chosen.push_back(r.projected[*m.projected].poly);
  if (!chosen.empty()) r.generated_solutions = solve_by_cases(chosen, r.x_names);
  std::vector<QPoly> all;
  for (const auto& pr : r.projected) all.push_back(pr.poly);
  if (!all.empty()) r.projected_solutions = solve_by_cases(all, r.x_names);

  r.finite_field_checks.push_back(printed_system_check(2));
  r.finite_field_checks.push_back(printed_system_check(3));
  return r;
}

}  // namespace liealg
