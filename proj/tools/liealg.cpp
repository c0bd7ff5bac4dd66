#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "liealg/catalog.hpp"
#include "liealg/derivations.hpp"
#include "liealg/filiform.hpp"
#include "liealg/json_io.hpp"
#include "liealg/search_io.hpp"

using namespace liealg;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SchemaError, "cannot read " + path);
  ss << in.rdbuf();
  return ss.str();
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

template <FieldScalar T>
json terms_json(const Vector<T>& v) {
  json out = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (!is_zero(v(k))) out.push_back(json::array({k + 1, render_scalar(v(k))}));
  return out;
}

template <FieldScalar T>
LieAlgebra<T> convert(const LieAlgebra<Rational>& L, const FieldSpec& field) {
  if constexpr (std::is_same_v<T, Rational>) {
    return L;
  } else {
    LieAlgebra<Fp> out(L.dim(), field);
    L.for_each_bracket([&](int i, int j, const SparseVec<Rational>& terms) {
      for (const auto& [k, c] : terms) out.add_term(i, j, k, ScalarTraits<Fp>::from_rational(c, field));
    });
    return out;
  }
}

FieldSpec parse_field_option(const std::string& text) {
  if (text == "Q" || text == "q") return FieldSpec::rationals();
  std::string digits = text;
  if (digits.rfind("F", 0) == 0 || digits.rfind("f", 0) == 0) digits.erase(0, 1);
  if (digits.rfind("_", 0) == 0) digits.erase(0, 1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorCode::InvalidField, "field '" + text + "' (use Q or a prime)");
  return FieldSpec::prime(std::stoull(digits));
}

// ------------------------------------------------------------------ commands

struct CatalogArgs {
  std::string name;
  int n = 0;
  std::string field;
};

int cmd_catalog(const CatalogArgs& a) {
  const bool want_n = a.name == "standard-filiform" || a.name == "f910";
  if (want_n && a.n == 0) throw Error(ErrorCode::BadDimension, a.name + " needs --n");
  if (!want_n && a.n != 0) throw Error(ErrorCode::SchemaError, a.name + " takes no --n");
  FieldSpec field = a.field.empty() ? (a.name == "bokut12" ? FieldSpec::prime(2) : FieldSpec::rationals())
                                    : parse_field_option(a.field);
  LieAlgebra<Rational> base(1, FieldSpec::rationals());
  if (a.name == "standard-filiform") base = standard_filiform<Rational>(a.n, FieldSpec::rationals());
  else if (a.name == "f910") base = f_nine_tenths(a.n);
  else if (a.name == "g14") base = g14();
  else if (a.name == "filiform6") base = filiform6();
  else if (a.name == "bokut12") base = from_integer_table<Rational>(12, FieldSpec::rationals(), bokut12_table());
  else throw Error(ErrorCode::SchemaError, "unknown catalog name '" + a.name + "'");
  std::string out = field.is_rational() ? save_json(base) : save_json(convert<Fp>(base, field));
  std::cout << out << '\n';
  std::cerr << a.name << ": dim " << base.dim() << " over " << field.name() << ", " << base.bracket_count()
            << " brackets\n";
  return kOk;
}

int cmd_verify(const std::string& file) {
  return std::visit(
      [](const auto& L) {
        const auto report = jacobi_check(L);
        json out;
        out["field"] = field_to_json(L.field());
        out["dim"] = L.dim();
        out["jacobi_passed"] = report.passed();
        out["violation_count"] = report.violations.size();
        json vs = json::array();
        for (const auto& v : report.violations) {
          json e;
          e["triple"] = json::array({v.a + 1, v.b + 1, v.c + 1});
          e["residual"] = terms_json(v.residual);
          vs.push_back(std::move(e));
        }
        out["violations"] = std::move(vs);
        emit(out);
        std::cerr << "Jacobi " << (report.passed() ? "holds" : "fails") << " (" << report.violations.size()
                  << " violating triples)\n";
        return report.passed() ? kOk : kFailed;
      },
      load_json(read_input(file)));
}

int cmd_series(const std::string& file) {
  return std::visit(
      [](const auto& L) {
        json out;
        auto dump_series = [&](const auto& series) {
          json arr = json::array();
          for (const auto& U : series) arr.push_back(subspace_to_json(U));
          return arr;
        };
        const auto lcs = lower_central_series(L);
        const auto ds = derived_series(L);
        out["dim"] = L.dim();
        out["lower_central_dims"] = dims_of(lcs);
        out["derived_dims"] = dims_of(ds);
        out["lower_central"] = dump_series(lcs);
        out["derived"] = dump_series(ds);
        emit(out);
        return kOk;
      },
      load_json(read_input(file)));
}

int cmd_invariants(const std::string& file) {
  return std::visit(
      [](const auto& L) {
        const auto r = invariants(L);
        emit(invariants_to_json(r));
        std::cerr << "dim " << r.dim << ", class "
                  << (r.nilpotency_class ? std::to_string(*r.nilpotency_class) : "none") << ", derived length "
                  << (r.derived_length ? std::to_string(*r.derived_length) : "none") << '\n';
        return kOk;
      },
      load_json(read_input(file)));
}

int cmd_derivations(const std::string& file) {
  return std::visit(
      [](const auto& L) {
        const auto ds = derivation_space(L);
        json out;
        out["dim"] = ds.dim();
        json basis = json::array();
        for (const auto& D : ds.basis()) basis.push_back(matrix_to_json(D));
        out["basis"] = std::move(basis);
        emit(out);
        std::cerr << "derivation algebra of dimension " << ds.dim() << '\n';
        return kOk;
      },
      load_json(read_input(file)));
}

int cmd_grading(const std::string& file, std::int64_t bound) {
  return std::visit(
      [&](const auto& L) {
        const auto w = find_positive_grading(L, bound);
        json out;
        out["found"] = w.has_value();
        out["weights"] = w ? json(w->weights) : json(nullptr);
        out["total"] = w ? json(w->total()) : json(nullptr);
        out["bound"] = bound > 0 ? bound : 4 * static_cast<std::int64_t>(L.dim());
        emit(out);
        std::cerr << (w ? "positive grading found" : "no positive grading in the scanned box") << '\n';
        return kOk;
      },
      load_json(read_input(file)));
}

std::vector<std::int64_t> parse_weights(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("-0123456789") != std::string::npos)
      throw Error(ErrorCode::SchemaError, "weights must be comma-separated integers");
    out.push_back(std::stoll(item));
  }
  return out;
}

int cmd_extend(const std::string& file, const std::string& matrix_file, const std::string& weights) {
  return std::visit(
      [&](const auto& L) {
        using T = typename std::decay_t<decltype(L)>::value_type;
        Matrix<T> D;
        if (!weights.empty()) {
          D = diagonal_matrix<T>(parse_weights(weights), L.field());
        } else if (!matrix_file.empty()) {
          json doc = parse_document(read_input(matrix_file));
          if (doc.is_object() && doc.contains("matrix")) doc = doc["matrix"];
          D = matrix_from_json<T>(doc, L.field());
        } else {
          throw Error(ErrorCode::SchemaError, "extend needs a matrix file or --diag");
        }
        if (D.rows() != L.dim() || D.cols() != L.dim())
          throw Error(ErrorCode::DimensionMismatch, "matrix must be n x n");
        if (!is_derivation(L, D)) {
          json out;
          out["is_derivation"] = false;
          emit(out);
          std::cerr << "matrix is not a derivation\n";
          return kFailed;
        }
        const auto G = semidirect_extend(L, D);
        std::cout << save_json(G) << '\n';
        std::cerr << "extension of dimension " << G.dim() << (is_nonsingular(D, L.field()) ? " (D nonsingular)" : "")
                  << '\n';
        return kOk;
      },
      load_json(read_input(file)));
}

json poly_terms_json(const QPoly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::array();
    for (auto e : m) exps.push_back(e);
    out.push_back(json::array({std::move(exps), c.str()}));
  }
  return out;
}

json triple_json(const Constraint& c) { return json::array({c.a, c.b, c.c}); }

int cmd_filiform_build(int n) {
  const auto sf = build_symbolic(n);
  const auto names = sf.names();
  json out;
  out["n"] = n;
  out["params"] = names;
  json brackets = json::array();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      json terms = json::array();
      const auto& row = sf.stored(i, j);
      for (int s = 1; s <= n; ++s)
        if (!row[static_cast<std::size_t>(s)].is_zero())
          terms.push_back(json::array({s, row[static_cast<std::size_t>(s)].str(names)}));
      if (terms.empty()) continue;
      json e;
      e["i"] = i;
      e["j"] = j;
      e["terms"] = std::move(terms);
      brackets.push_back(std::move(e));
    }
  out["brackets"] = std::move(brackets);
  emit(out);
  std::cerr << "adapted filiform model, n = " << n << ", " << names.size() << " parameters\n";
  return kOk;
}

int cmd_filiform_constraints(int n) {
  const auto sf = build_symbolic(n);
  const auto names = sf.names();
  const auto cs = jacobi_constraints(sf);
  json out;
  out["n"] = n;
  out["params"] = names;
  out["e1_triples"] = cs.e1_triples;
  out["e1_triples_vanish"] = cs.e1_triples_vanish;
  json list = json::array();
  for (const auto& c : cs.constraints) {
    json e;
    e["triple"] = triple_json(c);
    e["coordinate"] = c.s;
    e["polynomial"] = poly_terms_json(c.poly);
    e["text"] = c.poly.str(names);
    list.push_back(std::move(e));
  }
  out["constraints"] = std::move(list);
  emit(out);
  std::cerr << cs.constraints.size() << " constraints in " << names.size() << " parameters\n";
  return cs.e1_triples_vanish ? kOk : kFailed;
}

json analysis_json(const CaseAnalysis<Rational>& a, const std::vector<std::string>& names) {
  json out;
  out["complete"] = a.complete();
  json comps = json::array();
  for (const auto& c : a.components) {
    json e;
    e["dim"] = c.dim();
    e["point"] = vector_to_json<Rational>(c.point);
    e["directions"] = matrix_to_json<Rational>(c.directions.basis());
    e["text"] = c.str();
    comps.push_back(std::move(e));
  }
  out["components"] = std::move(comps);
  json leaves = json::array();
  for (const auto& l : a.leaves) {
    json e;
    using K = CaseLeaf<Rational>::Kind;
    e["kind"] = l.kind == K::Solution ? "solution" : (l.kind == K::Inconsistent ? "inconsistent" : "unresolved");
    e["path"] = l.path;
    if (l.component) e["component"] = l.component->str();
    if (!l.remaining.empty()) {
      json rem = json::array();
      for (const auto& p : l.remaining) rem.push_back(p.str(names));
      e["remaining"] = std::move(rem);
    }
    leaves.push_back(std::move(e));
  }
  out["leaves"] = std::move(leaves);
  json probes = json::object();
  for (const auto& [label, x] : std::vector<std::pair<std::string, std::vector<int>>>{{"(0,0,0)", {0, 0, 0}},
                                                                                    {"(0,1,1)", {0, 1, 1}}}) {
    Vector<Rational> v(3);
    for (int i = 0; i < 3; ++i) v(i) = Rational(x[static_cast<std::size_t>(i)]);
    probes[label] = a.contains(v);
  }
  out["contains"] = std::move(probes);
  return out;
}

int cmd_filiform_subsystem() {
  const auto r = n14_subsystem();
  const auto sf = build_symbolic(r.n);
  const auto names = sf.names();
  json out;
  out["n"] = r.n;
  json xs = json::object();
  for (std::size_t i = 0; i < r.x_names.size(); ++i) xs[r.x_names[i]] = r.x_params[i].name();
  out["variables"] = std::move(xs);
  out["assumption"] = r.top.name() + " != 0";
  out["constraint_count"] = r.constraint_count;
  json div = json::array();
  for (const auto& d : r.divisible) {
    json e;
    e["triple"] = triple_json(d.source);
    e["coordinate"] = d.source.s;
    e["power"] = d.power;
    e["quotient"] = d.quotient.str(names);
    div.push_back(std::move(e));
  }
  out["divisible"] = std::move(div);
  json rels = json::array();
  for (const auto& rel : r.relations) {
    json e;
    e["var"] = rel.var.name();
    e["expr"] = rel.expr.str(names);
    rels.push_back(std::move(e));
  }
  out["linear_relations"] = std::move(rels);
  json proj = json::array();
  for (const auto& p : r.projected) {
    json e;
    e["triple"] = triple_json(p.source);
    e["coordinate"] = p.source.s;
    e["polynomial"] = p.poly.str(r.x_names);
    proj.push_back(std::move(e));
  }
  out["projected"] = std::move(proj);
  json printed = json::array();
  bool all_reproduced = true;
  for (const auto& m : r.matches) {
    json e;
    e["name"] = "f" + std::to_string(m.printed + 1);
    e["polynomial"] = r.printed[static_cast<std::size_t>(m.printed)].str(r.x_names);
    e["reproduced"] = m.exact;
    e["in_span"] = m.in_span;
    if (m.projected) {
      const auto& src = r.projected[*m.projected];
      e["nearest"] = {{"triple", triple_json(src.source)},
                      {"coordinate", src.source.s},
                      {"polynomial", src.poly.str(r.x_names)},
                      {"scale", m.scale.str()},
                      {"difference", m.difference.str(r.x_names)}};
    }
    all_reproduced = all_reproduced && m.exact;
    printed.push_back(std::move(e));
  }
  out["printed"] = std::move(printed);
  out["printed_solutions"] = analysis_json(r.printed_solutions, r.x_names);
  out["generated_solutions"] = analysis_json(r.generated_solutions, r.x_names);
  out["projected_solutions"] = analysis_json(r.projected_solutions, r.x_names);
  json ff = json::array();
  bool ff_ok = true;
  for (const auto& c : r.finite_field_checks) {
    json e;
    e["p"] = c.p;
    e["brute_force_count"] = c.brute_force_count;
    e["solver_count"] = c.solver_count;
    e["agree"] = c.agree;
    json zs = json::array();
    for (const auto& z : c.zeros) zs.push_back(vector_to_json<Fp>(z));
    e["zeros"] = std::move(zs);
    ff_ok = ff_ok && c.agree;
    ff.push_back(std::move(e));
  }
  out["finite_field_checks"] = std::move(ff);
  out["all_printed_reproduced"] = all_reproduced;
  emit(out);
  std::cerr << r.projected.size() << " projected relations; printed relations reproduced: ";
  for (const auto& m : r.matches) std::cerr << (m.exact ? "yes " : "no ");
  std::cerr << '\n';
  return all_reproduced && ff_ok ? kOk : kFailed;
}

int cmd_search(const std::string& file, int threads) {
  auto cfg_any = search_config_from_json(parse_document(read_input(file)));
  return std::visit(
      [&](auto& cfg) {
        if (threads > 0) cfg.threads = threads;
        const auto res = search_graded(cfg);
        std::cout << search_report_jsonl(cfg, res);
        std::cerr << res.examined << " candidates (" << (res.exhaustive ? "exhaustive" : "sampled") << "), "
                  << res.jacobi_passed << " Lie, " << res.hits.size() << " hits\n";
        return kOk;
      },
      cfg_any);
}

int cmd_decompose(const std::string& file, const std::string& a_file, const std::string& b_file) {
  return std::visit(
      [&](const auto& L) {
        using T = typename std::decay_t<decltype(L)>::value_type;
        const auto A = subspace_from_json<T>(parse_document(read_input(a_file)), L.dim(), L.field());
        const auto B = subspace_from_json<T>(parse_document(read_input(b_file)), L.dim(), L.field());
        const auto r = decomposition_check(L, A, B);
        auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
        json out;
        out["spans"] = r.spans;
        out["a_subalgebra"] = r.a_subalgebra;
        out["b_subalgebra"] = r.b_subalgebra;
        out["a_is_ideal"] = r.a_is_ideal;
        out["b_is_ideal"] = r.b_is_ideal;
        out["c_a"] = opt(r.c_a);
        out["c_b"] = opt(r.c_b);
        out["d_g"] = opt(r.d_g);
        out["estimate_holds"] = r.estimate_holds;
        emit(out);
        const bool ok = r.spans && r.estimate_holds;
        std::cerr << "decomposition " << (ok ? "verified" : "not verified") << '\n';
        return ok ? kOk : kFailed;
      },
      load_json(read_input(file)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lie algebra workbench"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (search)")->check(CLI::NonNegativeNumber);

  CatalogArgs cat;
  auto* c_cat = app.add_subcommand("catalog", "Print a catalog algebra");
  c_cat->add_option("name", cat.name, "standard-filiform | f910 | g14 | bokut12 | filiform6")->required();
  c_cat->add_option("--n", cat.n, "Dimension");
  c_cat->add_option("--field", cat.field, "Q or a prime p");

  std::string file, file2, file3, weights;
  std::int64_t bound = 0;
  int n = 0;
  auto* c_verify = app.add_subcommand("verify", "Check the Jacobi identity");
  c_verify->add_option("file", file)->required();
  auto* c_series = app.add_subcommand("series", "Lower central and derived series");
  c_series->add_option("file", file)->required();
  auto* c_inv = app.add_subcommand("invariants", "Class, derived length, series dimensions");
  c_inv->add_option("file", file)->required();
  auto* c_der = app.add_subcommand("derivations", "Basis of the derivation algebra");
  c_der->add_option("file", file)->required();
  auto* c_grad = app.add_subcommand("grading", "Find a positive integer grading");
  c_grad->add_option("file", file)->required();
  c_grad->add_option("--bound", bound, "Largest weight scanned (default 4n)");
  auto* c_ext = app.add_subcommand("extend", "Semidirect extension by a derivation");
  c_ext->add_option("file", file)->required();
  c_ext->add_option("matrix", file2, "Matrix JSON file");
  c_ext->add_option("--diag", weights, "Diagonal derivation, comma-separated");
  auto* c_fil = app.add_subcommand("filiform", "Adapted-basis filiform model");
  c_fil->require_subcommand(1);
  auto* c_fb = c_fil->add_subcommand("build", "Symbolic brackets");
  c_fb->add_option("--n", n)->required();
  auto* c_fc = c_fil->add_subcommand("constraints", "Jacobi constraint polynomials");
  c_fc->add_option("--n", n)->required();
  auto* c_fs = c_fil->add_subcommand("subsystem", "Reduction of the n = 14 system to three parameters");
  auto* c_search = app.add_subcommand("search", "Graded candidate search from a config file");
  c_search->add_option("config", file)->required();
  auto* c_dec = app.add_subcommand("decompose-check", "Verify a decomposition g = a + b");
  c_dec->add_option("file", file)->required();
  c_dec->add_option("a", file2)->required();
  c_dec->add_option("b", file3)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*c_cat) return cmd_catalog(cat);
    if (*c_verify) return cmd_verify(file);
    if (*c_series) return cmd_series(file);
    if (*c_inv) return cmd_invariants(file);
    if (*c_der) return cmd_derivations(file);
    if (*c_grad) return cmd_grading(file, bound);
    if (*c_ext) return cmd_extend(file, file2, weights);
    if (*c_fb) return cmd_filiform_build(n);
    if (*c_fc) return cmd_filiform_constraints(n);
    if (*c_fs) return cmd_filiform_subsystem();
    if (*c_search) return cmd_search(file, threads);
    if (*c_dec) return cmd_decompose(file, file2, file3);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
