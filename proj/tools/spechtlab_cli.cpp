/*
   Copyright 2026 The spechtlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "spechtlab/render.hpp"
#include "spechtlab.hpp"

namespace sl = spechtlab;
using nlohmann::json;

namespace {

struct Options {
  std::string format = "text";
  std::string lambda;
  std::string t;
  std::string u;
  int n = 0;
  int k = 0;
  int max_n = 0;
  bool slow = false;
  bool conjugate = false;
  std::vector<std::string> verify;
};

// Result of one subcommand: what to print and whether every check held.
struct Outcome {
  json data;
  std::string text;
  bool ok = true;
};

sl::Partition parse_lambda(const Options& o) { return sl::Partition::parse(o.lambda); }

void require_size(const sl::Partition& p, int max_n, const std::string& what) {
  if (p.weight() > max_n)
    throw sl::UsageError(what + ": |lambda| must be at most " + std::to_string(max_n));
}

Outcome cmd_tabs(const Options& o) {
  const auto shape = parse_lambda(o);
  const auto tabs = sl::enumerate_tableaux(shape);
  Outcome r;
  r.data = {{"lambda", sl::json::to_json(shape)}, {"count", tabs.size()},
            {"hook_length", sl::hook_length_count(shape.conjugate())}, {"tableaux", json::array()}};
  std::ostringstream os;
  for (const auto& t : tabs) {
    r.data["tableaux"].push_back(sl::json::to_json(t));
    os << t.str() << '\n';
  }
  const auto [tc, tr] = sl::extremal_tableaux(shape);
  r.data["tc"] = tc.str();
  r.data["tr"] = tr.str();
  os << "count " << tabs.size() << ", tc " << tc.str() << ", tr " << tr.str() << '\n';
  r.text = os.str();
  return r;
}

Outcome cmd_unit(const Options& o) {
  const auto shape = parse_lambda(o);
  require_size(shape, 6, "unit");
  const auto t = sl::StandardTableau::parse(o.t);
  const auto u = o.u.empty() ? t : sl::StandardTableau::parse(o.u);
  if (t.shape() != shape || u.shape() != shape) throw sl::UsageError("unit: tableaux do not have shape " + shape.str());
  const auto e = sl::matrix_unit(t, u);
  return {{{"t", t.str()}, {"u", u.str()}, {"element", sl::json::to_json(e)}, {"text", e.str()}}, e.str() + "\n"};
}

Outcome cmd_central(const Options& o) {
  const auto shape = parse_lambda(o);
  if (o.n != 0 && o.n != shape.weight()) throw sl::UsageError("central: --n differs from |lambda|");
  require_size(shape, 6, "central");
  const auto e = sl::central_idempotent(shape);
  return {{{"lambda", sl::json::to_json(shape)}, {"element", sl::json::to_json(e)}, {"text", e.str()}}, e.str() + "\n"};
}

Outcome cmd_jm(const Options& o) {
  const auto x = sl::jucys_murphy(o.n, o.k);
  return {{{"n", o.n}, {"k", o.k}, {"element", sl::json::to_json(x)}, {"text", x.str()}}, x.str() + "\n"};
}

Outcome cmd_specht(const Options& o) {
  const auto shape = parse_lambda(o);
  require_size(shape, 6, "specht");
  Outcome r;
  std::ostringstream os;
  r.data = {{"lambda", sl::json::to_json(shape)}, {"specht", json::array()}, {"young", json::array()}};
  std::vector<sl::Polynomial> sp;
  std::vector<sl::Polynomial> yb;
  os << "Specht basis\n";
  for (const auto& v : sl::specht_basis(shape)) {
    r.data["specht"].push_back({{"tableau", v.tableau.str()}, {"polynomial", sl::json::to_json(v.polynomial)}});
    os << "  " << v.tableau.str() << ": " << v.polynomial.str() << '\n';
    sp.push_back(v.polynomial);
  }
  os << "Young basis\n";
  for (const auto& v : sl::young_basis(shape)) {
    r.data["young"].push_back({{"tableau", v.tableau.str()}, {"polynomial", sl::json::to_json(v.polynomial)}});
    os << "  " << v.tableau.str() << ": " << v.polynomial.str() << '\n';
    yb.push_back(v.polynomial);
  }
  const auto f = sl::count_tableaux(shape);
  const auto rs = sl::polynomial_rank(sp);
  const auto ry = sl::polynomial_rank(yb);
  r.data["dimension"] = f;
  r.data["specht_rank"] = rs;
  r.data["young_rank"] = ry;
  r.ok = rs == f && ry == f;
  if (shape.weight() <= 5) {
    const auto iso = sl::isotype_of(shape);
    r.data["isotype"] = {{"columns", sl::json::to_json(iso.columns)}, {"rows", sl::json::to_json(iso.rows)}};
    os << "isotype: columns " << iso.columns.str() << ", rows " << iso.rows.str() << '\n';
  }
  os << "dimension " << f << ", ranks " << rs << " / " << ry << '\n';
  r.text = os.str();
  return r;
}

Outcome cmd_omega(const Options& o) {
  const auto shape = parse_lambda(o);
  const int n = shape.weight();
  Outcome r;
  std::ostringstream os;
  r.data["lambda"] = sl::json::to_json(shape);
  const std::set<std::string> known{"quasi", "decomp", "symmetry", "eq1", "g", "codepoly"};
  std::set<std::string> verify;
  for (const auto& v : o.verify) {
    if (!known.count(v)) throw sl::UsageError("omega: unknown check '" + v + "'");
    verify.insert(v);
  }
  if (verify.empty()) {
    require_size(shape, 6, "omega");
    const auto omega = sl::build_omega(shape);
    r.data["element"] = sl::json::to_json(omega);
    r.text = omega.str() + "\n";
    return r;
  }
  const int theorem_max = o.slow ? 6 : 5;
  r.data["checks"] = json::object();
  auto record = [&](const std::string& name, bool ok, json detail, const std::string& line) {
    r.data["checks"][name] = std::move(detail);
    r.ok = r.ok && ok;
    os << (ok ? "PASS " : "FAIL ") << name << ": " << line << '\n';
  };
  if (verify.count("quasi")) {
    require_size(shape, theorem_max, "omega --verify quasi");
    const auto q = sl::verify_quasi_idempotent(shape);
    record("quasi", q.ok, sl::json::to_json(q),
           q.ok ? "Omega^2 = (" + q.measured_scale->str() + ") Omega" : q.message);
  }
  if (verify.count("decomp")) {
    require_size(shape, 5, "omega --verify decomp");
    const auto d = sl::verify_decomposition(shape);
    record("decomp", d.ok(), sl::json::to_json(d),
           std::string("young form ") + (d.young_form_ok ? "ok" : "differs") + ", zeta pair form " +
               (d.pair_form_ok ? "ok" : "differs"));
  }
  if (verify.count("symmetry")) {
    require_size(shape, theorem_max, "omega --verify symmetry");
    const auto s = sl::verify_symmetries(shape);
    std::string line = s.failures.empty() ? "invariance and alternation hold" : s.failures.front();
    if (s.isotype) line += "; isotype columns " + s.isotype->columns.str() + ", rows " + s.isotype->rows.str();
    record("symmetry", s.ok(), sl::json::to_json(s), line);
  }
  if (verify.count("eq1")) {
    require_size(shape, 4, "omega --verify eq1");
    const auto p = sl::verify_pair_decomposition(n);
    std::string line;
    for (const auto& c : p.constants) line += c.shape.str() + ":" + c.measured.str() + " ";
    record("eq1", p.ok(), sl::json::to_json(p), "sandwich constants " + line);
  }
  if (verify.count("g")) {
    require_size(shape, o.slow ? 7 : 6, "omega --verify g");
    const auto g = sl::specialized_g(shape);
    record("g", g.ok(), sl::json::to_json(g),
           g.failures.empty() ? "g = " + g.kappa.str() + " e_{tr,tc}, quasi constant " + g.quasi_constant.str()
                              : g.failures.front());
  }
  if (verify.count("codepoly")) {
    const bool n7 = sl::Partition({4, 2, 1}) == shape;
    if (!(sl::Partition({3, 2}) == shape) && !n7)
      throw sl::UsageError("omega --verify codepoly: available for lambda = 3,2 and 4,2,1");
    if (n7 && !o.slow) throw sl::UsageError("omega --verify codepoly: lambda = 4,2,1 needs --slow");
    const auto f = sl::verify_factorized_examples(n7);
    const auto& c = f.cases.back();
    record("codepoly", c.ok(), sl::json::to_json(c),
           std::to_string(c.term_count) + " terms, scalar " + c.scalar.str() + ", extra monomial " +
               (c.extra ? c.extra->str(sl::VarFamily::y) : "none"));
  }
  r.data["ok"] = r.ok;
  r.text = os.str();
  return r;
}

Outcome cmd_gmap(const Options& o) {
  const auto shape = parse_lambda(o);
  require_size(shape, 7, "gmap");
  const auto g = sl::specialized_g(shape);
  Outcome r;
  r.data = sl::json::to_json(g);
  r.data["element"] = sl::json::to_json(g.g);
  r.ok = g.ok();
  std::ostringstream os;
  os << "mu " << g.mu.str() << ", point (";
  for (std::size_t i = 0; i < g.point.size(); ++i) os << (i ? "," : "") << g.point[i].str();
  os << ")\n";
  os << "g has " << g.g.size() << " terms\n";
  os << "g = " << g.kappa.str() << " e_{tr,tc}" << (g.proportional ? "" : " (NOT proportional)") << '\n';
  if (g.nilpotent) os << "g^2 " << (*g.nilpotent ? "= 0" : "!= 0") << '\n';
  os << "w = " << g.w.str() << ", (w g)^2 = " << g.quasi_constant.str() << " (w g)"
     << (g.idempotent_ok ? "" : " (check failed)") << '\n';
  for (const auto& f : g.failures) os << "FAIL " << f << '\n';
  r.text = os.str();
  return r;
}

Outcome cmd_codepoly(const Options& o) {
  const auto shape = parse_lambda(o);
  require_size(shape, 7, "codepoly");
  const int n = shape.weight();
  sl::AlgebraElement g = sl::specialize_element(sl::build_omega(shape), shape.conjugate());
  if (o.conjugate) {
    const auto w0 = sl::AlgebraElement::basis(sl::Permutation::longest(n));
    g = w0 * g * w0;
  }
  const auto p = sl::code_polynomial(g);
  return {{{"lambda", sl::json::to_json(shape)}, {"conjugate", o.conjugate}, {"terms", p.size()},
           {"polynomial", sl::json::to_json(p)}},
          p.str() + "\n"};
}

Outcome cmd_selftest(const Options& o) {
  const auto rep = sl::run_selftest(o.max_n, o.slow);
  Outcome r;
  r.ok = rep.ok();
  r.data = {{"max_n", rep.max_n}, {"slow", rep.slow}, {"ok", rep.ok()}, {"checks", json::array()}};
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& c : rep.checks) {
    r.data["checks"].push_back({{"name", c.name}, {"n", c.n}, {"lambda", c.lambda}, {"status", c.ok ? "pass" : "fail"},
                                {"seconds", c.seconds}, {"detail", c.detail}});
    passed += c.ok;
    os << (c.ok ? "PASS " : "FAIL ") << c.name << " n=" << c.n;
    if (!c.lambda.empty()) os << " lambda=" << c.lambda;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << '\n';
  }
  os << passed << "/" << rep.checks.size() << " checks passed\n";
  r.text = os.str();
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spechtlab: exact computations in the symmetric group algebra"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* tabs = app.add_subcommand("tabs", "List standard tableaux with given column lengths");
  tabs->add_option("--lambda", o.lambda, "Column lengths, e.g. 3,2")->required();

  auto* unit = app.add_subcommand("unit", "Orthogonal matrix unit e_{t,u}");
  unit->add_option("--lambda", o.lambda)->required();
  unit->add_option("--t", o.t, "Tableau as columns, e.g. 1,2,3|4,5")->required();
  unit->add_option("--u", o.u, "Second tableau (defaults to t)");

  auto* central = app.add_subcommand("central", "Central idempotent of a shape");
  central->add_option("--n", o.n);
  central->add_option("--lambda", o.lambda)->required();

  auto* jm = app.add_subcommand("jm", "Jucys-Murphy element X_k of S_n");
  jm->add_option("--n", o.n)->required();
  jm->add_option("--k", o.k)->required();

  auto* specht = app.add_subcommand("specht", "Specht and Young bases");
  specht->add_option("--lambda", o.lambda)->required();

  auto* omega = app.add_subcommand("omega", "Build Omega_lambda or verify its identities");
  omega->add_option("--lambda", o.lambda)->required();
  omega->add_option("--verify", o.verify, "quasi,decomp,symmetry,eq1,g,codepoly")->delimiter(',');
  omega->add_flag("--slow", o.slow, "Allow n = 6 theorem checks and n = 7 paths");

  auto* gmap = app.add_subcommand("gmap", "Specialize Omega_lambda at the row-shape point");
  gmap->add_option("--lambda", o.lambda)->required();

  auto* codepoly = app.add_subcommand("codepoly", "Code polynomial of the specialized element");
  codepoly->add_option("--lambda", o.lambda)->required();
  codepoly->add_flag("--conjugate", o.conjugate, "Use w0 g w0 with w0 the longest permutation");

  auto* selftest = app.add_subcommand("selftest", "Run the invariant battery");
  selftest->add_option("--max-n", o.max_n)->required();
  selftest->add_flag("--slow", o.slow, "Include the n = 6 theorem and the n = 7 code polynomial");

  for (auto* sub : app.get_subcommands({})) sub->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Outcome out;
    if (*tabs) out = cmd_tabs(o);
    else if (*unit) out = cmd_unit(o);
    else if (*central) out = cmd_central(o);
    else if (*jm) out = cmd_jm(o);
    else if (*specht) out = cmd_specht(o);
    else if (*omega) out = cmd_omega(o);
    else if (*gmap) out = cmd_gmap(o);
    else if (*codepoly) out = cmd_codepoly(o);
    else out = cmd_selftest(o);
    if (o.format == "json") std::cout << out.data.dump(2) << '\n';
    else std::cout << out.text;
    return out.ok ? 0 : 1;
  } catch (const sl::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const sl::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const sl::VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return 1;
  }
}
