// chowpush: pushforwards along projective-bundle towers from the command line.

#include <iostream>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chow/error.hpp"
#include "chow/expr.hpp"
#include "chow/fibration.hpp"
#include "chow/invariants.hpp"
#include "chow/pushforward.hpp"
#include "chow/structured.hpp"
#include "chow/tower_spec.hpp"
#include "chow/verify.hpp"

using namespace chow;
using nlohmann::json;

namespace {

struct Session {
  std::string tower;
  std::string params;
  std::string out = "text";
  std::uint64_t seed = 20240101;
  int max_degree = 12;

  bool structured() const { return out == "json"; }

  std::vector<std::string> param_names() const {
    std::vector<std::string> names;
    std::string cur;
    for (char ch : params + ",") {
      if (ch == ',' || ch == ' ') {
        if (!cur.empty()) names.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    return names;
  }

  TowerPtr load() const {
    if (tower.empty()) throw UserError("--tower is required for this command");
    return load_tower(tower, TowerSpecOptions{param_names(), max_degree});
  }
};

void emit(const Session& s, const json& j) { std::cout << j.dump(2) << "\n"; (void)s; }

int cmd_class(const Session& s, const std::string& text, const std::string& mode, const std::string& method) {
  const TowerPtr tower = s.load();
  ChowClass x = eval(text, tower);
  if (mode == "push") {
    if (!tower->is_bundle()) throw UserError("the tower has no bundle level to push forward along");
    if (method == "closed") x = pushforward_closed(x);
    else if (method == "oracle") x = pushforward_oracle(x);
    else x = pushforward(x);
  } else if (mode == "push-all") {
    x = push_to_root(x);
  }
  if (mode == "integrate") {
    const ParamPoly v = integrate(x);
    if (s.structured()) emit(s, {{"integral", to_structured(v, tower->params())}});
    else std::cout << format(v, *tower) << "\n";
    return 0;
  }
  if (s.structured()) emit(s, {{"class", to_structured(x)}});
  else std::cout << format(x) << "\n";
  return 0;
}

int cmd_svw(const Session& s) {
  json j = json::object();
  for (FibrationKind kind : {FibrationKind::E6, FibrationKind::E7, FibrationKind::E8}) {
    const ChowClass x = svw_integrand(kind);
    if (s.structured()) j[to_string(kind)] = to_structured(x);
    else std::cout << to_string(kind) << "  " << format(x) << "\n";
  }
  const ChowClass c2sq = second_chern_square_integrand_e8();
  if (s.structured()) {
    j["E8 c2^2"] = to_structured(c2sq);
    emit(s, j);
  } else {
    std::cout << "E8 c2^2  " << format(c2sq) << "\n";
  }
  return 0;
}

FibrationKind parse_kind(const std::string& k) {
  if (k == "E6" || k == "e6") return FibrationKind::E6;
  if (k == "E7" || k == "e7") return FibrationKind::E7;
  if (k == "E8" || k == "e8") return FibrationKind::E8;
  throw UserError("unknown fibration kind '" + k + "' (expected E6, E7 or E8)");
}

int cmd_k3(const Session& s, const std::string& kinds, const std::string& n) {
  std::vector<FibrationKind> list;
  if (kinds == "all") list = {FibrationKind::E6, FibrationKind::E7, FibrationKind::E8};
  else list = {parse_kind(kinds)};

  std::optional<Rational> value;
  std::string name = "n";
  if (std::regex_match(n, std::regex("-?[0-9]+"))) value = Rational::parse(n);
  else if (std::regex_match(n, std::regex("[A-Za-z_][A-Za-z0-9_]*"))) name = n;
  else throw UserError("--n must be an integer or a name, got '" + n + "'");
  const std::vector<std::string> names = {name};
  auto fix = [&](const ParamPoly& p) { return value ? p.substitute(0, ParamPoly(*value)) : p; };

  json out = json::array();
  for (FibrationKind kind : list) {
    const ChernNumberSet cn = chern_numbers_cy4(kind);
    std::vector<std::pair<std::string, ParamPoly>> rows;
    for (const auto& [label, v] : cn.entries()) rows.emplace_back(label, fix(v));
    for (int q = 0; q <= 2; ++q) rows.emplace_back("chi_" + std::to_string(q), fix(arithmetic_genus(q, cn)));
    if (s.structured()) {
      json j = {{"kind", to_string(kind)}};
      for (const auto& [label, v] : rows) j[label] = to_structured(v, names);
      out.push_back(j);
    } else {
      std::cout << to_string(kind) << "\n";
      for (const auto& [label, v] : rows) std::cout << "  " << label << " = " << v.format(names) << "\n";
    }
  }
  if (s.structured()) emit(s, out);
  return 0;
}

int cmd_plane_curve(const Session& s, const std::array<std::string, 4>& w, int base_dim) {
  if (base_dim < 1 || base_dim + 2 > s.max_degree)
    throw UserError("base dimension must lie in [1, max-degree - 2]");
  std::set<std::string> seen;
  std::vector<std::string> params;
  const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  for (const auto& text : w)
    for (auto it = std::sregex_iterator(text.begin(), text.end(), ident); it != std::sregex_iterator(); ++it)
      if (seen.insert(it->str()).second) params.push_back(it->str());
  for (const auto& p : s.param_names())
    if (seen.insert(p).second) params.push_back(p);
  for (const auto& p : params)
    if (p == "L" || (p.size() > 1 && p[0] == 'c' && std::isdigit(static_cast<unsigned char>(p[1]))))
      throw UserError("'" + p + "' is reserved for a base class");

  const TowerPtr base = formal_base_with_line(base_dim, params);
  const ChowClass line = ChowClass::symbol(base, "L");
  PlaneCurveData data{eval_param(w[0], base), eval_param(w[1], base), eval_param(w[2], base),
                      eval_param(w[3], base)};
  const FibrationSpec spec = make_plane_curve(base, line, data);
  const ChowClass pushed = pushforward_chern(spec);
  const ChowClass ratio = pushed * invert_unit(total_chern(base));

  std::vector<ParamPoly> x;
  bool cf_checked = false;
  bool cf_equal = false;
  if (base_dim == 3) {
    const FactorizationCheck cf = verify_factorization(spec);
    x = cf.x_coefficients;
    cf_checked = true;
    cf_equal = cf.equal;
  }

  std::string genus_text;
  std::string verdict;
  const ParamPoly cy_line = data.e - data.a - data.b;
  if (auto d = data.d.constant_value()) {
    genus_text = genus(spec).str();
    if (*d != Rational(3)) verdict = "not Calabi-Yau for any base";
    else verdict = "Calabi-Yau iff c1(B) = " + format(ChowClass(base, cy_line) * line);
  } else {
    genus_text = format((data.d - ParamPoly(1)) * (data.d - ParamPoly(2)) * Rational(1, 2), *base);
    verdict = "Calabi-Yau iff d = 3 and c1(B) = " + format(ChowClass(base, cy_line) * line);
  }

  if (s.structured()) {
    json j = {{"pushforward", to_structured(pushed)},
              {"pushforward_over_cB", to_structured(ratio)},
              {"genus", genus_text},
              {"calabi_yau", verdict}};
    if (cf_checked) {
      json xs = json::array();
      for (const auto& c : x) xs.push_back(to_structured(c, base->params()));
      j["X"] = xs;
      j["factorization_holds"] = cf_equal;
    }
    emit(s, j);
    return 0;
  }
  std::cout << "phi_* c(Y) = " << format(pushed) << "\n";
  std::cout << "phi_* c(Y) / c(B) = " << format(ratio) << "\n";
  if (cf_checked) {
    for (std::size_t k = 0; k < x.size(); ++k)
      std::cout << "X[L^" << k << "] = " << format(x[k], *base) << "\n";
    std::cout << "X*s(F)*c(B) matches: " << (cf_equal ? "yes" : "no") << "\n";
  }
  std::cout << "genus = " << genus_text << "\n";
  std::cout << verdict << "\n";
  return 0;
}

int cmd_verify(const Session& s, const std::string& suite, int cases, const std::string& convention) {
  IndexConvention conv = IndexConvention::Proof;
  if (convention == "off-by-one") conv = IndexConvention::OffByOne;
  else if (convention != "proof") throw UserError("--index-convention must be proof or off-by-one");

  std::vector<VerifyReport> reports;
  if (suite == "all" || suite == "tables") reports.push_back(verify_tables());
  if (suite == "all" || suite == "oracle") {
    reports.push_back(verify_oracle(s.seed, cases, conv));
    reports.push_back(verify_symbolic_consistency(s.seed, 20));
  }
  if (suite == "all" || suite == "properties") reports.push_back(verify_properties(s.seed));
  if (reports.empty()) throw UserError("unknown suite '" + suite + "'");

  bool ok = true;
  json out = json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    if (s.structured()) {
      out.push_back({{"suite", r.suite}, {"checks", r.checks}, {"failures", r.failures}});
      continue;
    }
    std::cout << r.suite << ": " << r.checks << " checks, " << r.failures.size() << " failures\n";
    if (!r.ok()) std::cout << "  first counterexample: " << r.failures.front() << "\n";
  }
  if (s.structured()) emit(s, out);
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact pushforwards along towers of projective bundles"};
  app.require_subcommand(1);
  Session s;
  app.add_option("--tower", s.tower, "Tower spec file or inline spec (levels separated by ';')");
  app.add_option("--params", s.params, "Comma-separated extra parameter names");
  app.add_option("--out", s.out, "Output mode")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", s.seed, "Seed for randomized suites");
  app.add_option("--max-degree", s.max_degree, "Reject towers of larger dimension");

  std::string expr;
  std::string method = "auto";
  bool all_levels = false;
  auto* push = app.add_subcommand("push", "Push a class forward one level (or to the root)");
  push->add_option("class", expr, "Class expression")->required();
  push->add_flag("--to-root", all_levels, "Push through every level");
  push->add_option("--method", method, "auto, closed or oracle")
      ->check(CLI::IsMember({"auto", "closed", "oracle"}));
  auto* ev = app.add_subcommand("eval", "Print the normal form of a class");
  ev->add_option("class", expr, "Class expression")->required();
  auto* integ = app.add_subcommand("integrate", "Degree of a class on a point-rooted tower");
  integ->add_option("class", expr, "Class expression")->required();

  auto* svw = app.add_subcommand("svw", "Euler characteristic integrands of the E6, E7, E8 fibrations");

  std::string kind = "all";
  std::string n = "n";
  auto* k3 = app.add_subcommand("k3-tower", "Chern numbers and arithmetic genera of the K3-fibered fourfolds");
  k3->add_option("--kind", kind, "E6, E7, E8 or all");
  k3->add_option("--n", n, "Twist: an integer or a symbol");

  std::array<std::string, 4> w = {"a", "b", "d", "e"};
  int base_dim = 3;
  auto* pc = app.add_subcommand("plane-curve", "Plane-curve fibration of class d*H + e*L in P(O + L^a + L^b)");
  pc->add_option("--a", w[0], "Expression for a");
  pc->add_option("--b", w[1], "Expression for b");
  pc->add_option("--d", w[2], "Expression for d");
  pc->add_option("--e", w[3], "Expression for e");
  pc->add_option("--base-dim", base_dim, "Dimension of the formal base");

  std::string suite = "all";
  int cases = 200;
  std::string convention = "proof";
  auto* ver = app.add_subcommand("verify", "Run the built-in checks");
  ver->add_option("--suite", suite, "all, oracle, tables or properties");
  ver->add_option("--cases", cases, "Random cases for the oracle suite");
  ver->add_option("--index-convention", convention, "proof or off-by-one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*push) return cmd_class(s, expr, all_levels ? "push-all" : "push", method);
    if (*ev) return cmd_class(s, expr, "eval", method);
    if (*integ) return cmd_class(s, expr, "integrate", method);
    if (*svw) return cmd_svw(s);
    if (*k3) return cmd_k3(s, kind, n);
    if (*pc) return cmd_plane_curve(s, w, base_dim);
    if (*ver) return cmd_verify(s, suite, cases, convention);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const UserError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
