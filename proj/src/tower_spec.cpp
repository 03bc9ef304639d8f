#include "chow/tower_spec.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "chow/error.hpp"
#include "chow/expr.hpp"

namespace chow {

namespace {

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Splits "kind key=value key=[..]" on whitespace outside brackets.
std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : line) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if ((c == ' ' || c == '\t') && depth == 0) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::map<std::string, std::string> key_values(const std::vector<std::string>& toks, int line_no) {
  std::map<std::string, std::string> kv;
  for (std::size_t i = 1; i < toks.size(); ++i) {
    const auto eq = toks[i].find('=');
    if (eq == std::string::npos || eq == 0)
      throw UserError("tower line " + std::to_string(line_no) + ": expected key=value, got '" +
                      toks[i] + "'");
    kv[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
  }
  return kv;
}

std::vector<std::string> name_list(const std::string& value) {
  std::vector<std::string> out;
  for (auto& n : split_list(value, ',')) {
    n = strip(n);
    if (!n.empty()) out.push_back(n);
  }
  return out;
}

void reject_unknown(const std::map<std::string, std::string>& kv,
                    std::initializer_list<std::string_view> allowed, int line_no) {
  for (const auto& [k, v] : kv) {
    bool ok = false;
    for (auto a : allowed) ok = ok || k == a;
    if (!ok) throw UserError("tower line " + std::to_string(line_no) + ": unknown key '" + k + "'");
  }
}

}  // namespace

TowerPtr parse_tower_spec(std::string_view text, const TowerSpecOptions& options) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      for (auto& part : split_list(line, ';')) lines.push_back(strip(part));
    }
  }

  TowerPtr tower;
  int line_no = 0;
  for (const auto& line : lines) {
    ++line_no;
    if (line.empty()) continue;
    const auto toks = tokens(line);
    const auto kv = key_values(toks, line_no);
    const std::string& kind = toks[0];

    if (kind == "point" || kind == "formal") {
      if (tower) throw UserError("tower line " + std::to_string(line_no) + ": root declared twice");
      std::vector<std::string> params = kv.count("params") ? name_list(kv.at("params")) : std::vector<std::string>{};
      for (const auto& p : options.extra_params)
        if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
      if (kind == "point") {
        reject_unknown(kv, {"params"}, line_no);
        tower = Tower::make_point(std::move(params));
      } else {
        reject_unknown(kv, {"dim", "divisors", "params"}, line_no);
        if (!kv.count("dim")) throw UserError("tower line " + std::to_string(line_no) + ": formal base needs dim=");
        int dim = 0;
        try {
          dim = std::stoi(kv.at("dim"));
        } catch (const std::exception&) {
          throw UserError("tower line " + std::to_string(line_no) + ": bad dim '" + kv.at("dim") + "'");
        }
        const auto divisors = kv.count("divisors") ? name_list(kv.at("divisors")) : std::vector<std::string>{};
        tower = Tower::make_formal_base(dim, divisors, std::move(params));
      }
    } else if (kind == "bundle") {
      if (!tower) throw UserError("tower line " + std::to_string(line_no) + ": bundle before root");
      reject_unknown(kv, {"exps", "L", "name"}, line_no);
      if (!kv.count("exps")) throw UserError("tower line " + std::to_string(line_no) + ": bundle needs exps=[...]");
      std::string exps = strip(kv.at("exps"));
      if (exps.size() < 2 || exps.front() != '[' || exps.back() != ']')
        throw UserError("tower line " + std::to_string(line_no) + ": exps must be a [list]");
      std::vector<ParamPoly> exponents;
      for (const auto& item : split_list(exps.substr(1, exps.size() - 2), ','))
        exponents.push_back(eval_param(strip(item), tower));
      ChowClass line_class(tower, 0);
      if (kv.count("L")) {
        line_class = eval(kv.at("L"), tower);
      } else if (tower->symbol_index("L")) {
        line_class = ChowClass::symbol(tower, "L");
      } else if (std::any_of(exponents.begin(), exponents.end(), [](const ParamPoly& a) { return !a.is_zero(); })) {
        throw UserError("tower line " + std::to_string(line_no) + ": bundle needs L=<class>");
      }
      tower = Tower::make_projective_bundle(tower, line_class, std::move(exponents),
                                            kv.count("name") ? kv.at("name") : std::string());
    } else {
      throw UserError("tower line " + std::to_string(line_no) + ": unknown level kind '" + kind + "'");
    }
    if (tower->dim() > options.max_degree)
      throw UserError("tower dimension " + std::to_string(tower->dim()) + " exceeds --max-degree " +
                      std::to_string(options.max_degree));
  }
  if (!tower) throw UserError("empty tower specification");
  return tower;
}

TowerPtr load_tower(const std::string& spec, const TowerSpecOptions& options) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream in(spec);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_tower_spec(buf.str(), options);
  }
  return parse_tower_spec(spec, options);
}

}  // namespace chow
