#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "desing/errors.hpp"
#include "desing/json_io.hpp"
#include "verify.hpp"

namespace desing::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

std::vector<Complex> parse_point(const std::string& text) {
  std::vector<Complex> s;
  for (const auto& p : split(text, ',')) s.push_back(parse_complex(p));
  if (s.empty()) throw ParameterError("empty point");
  return s;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> v;
  for (const auto& p : split(text, ',')) {
    try {
      size_t used = 0;
      v.push_back(std::stoi(p, &used));
      if (used != p.size()) throw ParameterError("bad integer '" + p + "'");
    } catch (const std::logic_error&) {
      throw ParameterError("bad integer '" + p + "'");
    }
  }
  return v;
}

// "a..b" per axis, axes separated by commas.
std::vector<std::pair<int, int>> parse_grid(const std::string& text) {
  std::vector<std::pair<int, int>> axes;
  for (const auto& axis : split(text, ',')) {
    auto dots = axis.find("..");
    if (dots == std::string::npos) throw ParameterError("grid axis must look like a..b: " + axis);
    auto lo = parse_ints(axis.substr(0, dots)), hi = parse_ints(axis.substr(dots + 2));
    if (lo[0] > hi[0]) throw ParameterError("empty grid axis " + axis);
    axes.emplace_back(lo[0], hi[0]);
  }
  return axes;
}

HLData load_data(const std::string& spec) {
  for (const char* name : {"ez2", "ez3", "mt2", "a2"})
    if (spec == name) return builtin_data(spec);
  std::ifstream in(spec);
  if (!in) throw ParameterError("no builtin or readable file named '" + spec + "'");
  try {
    return hl_data_from_json(Json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("cannot parse ") + spec + ": " + e.what());
  }
}

std::string complex_text(Complex z) {
  std::ostringstream os;
  os << std::setprecision(17) << z.real();
  if (z.imag() != 0) os << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

bool is_ez2(const HLData& data) { return data == builtin_data("ez2"); }

NumResult eval_point(const HLData& data, const std::vector<Complex>& s, bool des, const EvalConfig& cfg) {
  if (static_cast<int>(s.size()) != data.d)
    throw ParameterError("point has " + std::to_string(s.size()) + " coordinates, data has d = " + std::to_string(data.d));
  if (is_ez2(data)) return des ? ez2_des(s[0], s[1], cfg) : ez2_value(s[0], s[1], cfg);
  if (des) return evaluate_identity(desing_identity(data), s, cfg);
  return hl_zeta(data, s, cfg);
}

struct Options {
  std::string data = "ez2";
  std::string at, lambda, xi = "1,1", grid, suite, format = "json", n = "1";
  bool des = false, kl = false;
  int lmax = 5, r = 0;
  long c = 2, p = 3;
  double tol = 0;
};

void emit_result(std::ostream& out, const std::string& format, const Json& j, const std::string& text) {
  if (format == "json")
    out << j.dump(2) << "\n";
  else
    out << text << "\n";
}

int cmd_eval(const Options& o, const EvalConfig& cfg, std::ostream& out) {
  HLData data = load_data(o.data);
  auto s = parse_point(o.at);
  NumResult r = eval_point(data, s, o.des, cfg);
  Json j = to_json(r);
  Json pt = Json::array();
  for (auto z : s) pt.push_back(to_json(z));
  j["point"] = pt;
  j["des"] = o.des;
  std::string text = o.format == "csv" ? complex_text(r.value) + "," + std::to_string(r.error_bound) + "," + r.method
                                       : complex_text(r.value) + "  (error <= " + std::to_string(r.error_bound) + ", " + r.method + ")";
  emit_result(out, o.format, j, text);
  return 0;
}

int cmd_identity(const Options& o, std::ostream& out) {
  DesingIdentity id = desing_identity(load_data(o.data));
  Json j{{"identity", to_json(id)}, {"text", id.to_text()}, {"latex", id.to_latex()}};
  emit_result(out, o.format, j, id.to_text() + "\n" + id.to_latex());
  return 0;
}

int cmd_special(const Options& o, std::ostream& out) {
  HLData data = load_data(o.data);
  auto lambda = parse_ints(o.lambda);
  CyclotomicNumber v = special_value_nonpos(data, lambda);
  if (v.is_rational()) {
    emit_result(out, o.format, to_json(v.to_rational()), desing::to_string(v.to_rational()));
  } else {
    emit_result(out, o.format, to_json(v), v.to_string());
  }
  return 0;
}

int cmd_padic(const Options& o, std::ostream& out) {
  PadicLRequest req{parse_ints(o.n), o.c, o.p};
  if (o.r != 0 && o.r != static_cast<int>(req.n.size()))
    throw ParameterError("--r " + std::to_string(o.r) + " does not match " + std::to_string(req.n.size()) + " indices");
  req.validate();
  PadicLResult res = padic_L_sum(req);
  if (!res.sum.is_rational()) throw ConsistencyError("p-adic L-value is not rational: " + res.sum.to_string());
  std::optional<KLCheck> kl;
  if (o.kl) {
    if (req.n.size() != 1) throw ParameterError("--kl-check needs r = 1");
    kl = kubota_leopoldt_check(req.n[0], req.c, req.p);
  }
  std::string text = desing::to_string(res.sum.to_rational());
  if (kl) text += kl->equal ? "  (Kubota-Leopoldt: equal)" : "  (Kubota-Leopoldt: MISMATCH, expected " + desing::to_string(kl->rhs) + ")";
  emit_result(out, o.format, to_json(req, res, kl ? &*kl : nullptr), text);
  return kl && !kl->equal ? 5 : 0;
}

int cmd_singularities(const Options& o, std::ostream& out) {
  std::vector<Twist> xi;
  for (const auto& t : split(o.xi, ',')) xi.push_back(parse_twist(t));
  SingularityCatalog cat = singular_hyperplanes(xi, o.lmax);
  std::ostringstream text;
  if (cat.empty()) text << "entire";
  for (const auto& h : cat.hyperplanes) {
    text << h.tag << ": s_" << h.first;
    if (h.last != h.first) text << " + ... + s_" << h.last;
    text << " in {";
    for (size_t i = 0; i < h.constants.size(); ++i) text << (i ? ", " : "") << h.constants[i];
    text << "}  [" << h.family << "]\n";
  }
  emit_result(out, o.format, to_json(cat), text.str());
  return 0;
}

int cmd_verify(const Options& o, const EvalConfig& cfg, std::ostream& out) {
  std::vector<CheckLine> lines;
  if (o.suite == "paper-values")
    lines = published_value_checks();
  else if (o.suite == "trivial-relations")
    lines = trivial_relation_checks(cfg);
  else if (o.suite == "oracle")
    lines = oracle_checks(cfg);
  else
    throw ParameterError("unknown suite '" + o.suite + "'");
  bool all = true;
  Json arr = Json::array();
  std::ostringstream text;
  for (const auto& l : lines) {
    all = all && l.ok;
    arr.push_back(Json{{"name", l.name}, {"ok", l.ok}, {"detail", l.detail}});
    text << (l.ok ? "PASS " : "FAIL ") << l.name << (l.detail.empty() ? "" : "  " + l.detail) << "\n";
  }
  text << (all ? "all passed" : "mismatches found");
  emit_result(out, o.format, Json{{"suite", o.suite}, {"passed", all}, {"checks", arr}}, text.str());
  return all ? 0 : 1;
}

// One cell of a table; integer points go through exact closed forms when available.
struct Cell {
  std::vector<int> point;
  std::string value, method;
};

Cell table_cell(const HLData& data, const std::vector<int>& pt, bool des, const EvalConfig& cfg) {
  Cell cell{pt, "", ""};
  try {
    if (des && is_ez2(data)) {
      if (auto v = ez2_des_exact(pt[0], pt[1])) {
        cell.value = v->to_string();
        cell.method = "closed-form";
        return cell;
      }
    } else if (des) {
      bool nonpos = true;
      for (int k : pt) nonpos = nonpos && k <= 0;
      if (nonpos) {
        std::vector<int> lambda;
        for (int k : pt) lambda.push_back(-k);
        CyclotomicNumber v = special_value_nonpos(data, lambda);
        cell.value = v.to_string();
        cell.method = "closed-form";
        return cell;
      }
    }
    std::vector<Complex> s(pt.begin(), pt.end());
    NumResult r = eval_point(data, s, des, cfg);
    cell.value = complex_text(r.value);
    cell.method = r.method;
  } catch (const PoleError&) {
    cell.method = "pole";
  } catch (const RegionError&) {
    cell.method = "region";
  } catch (const AccuracyError&) {
    cell.method = "accuracy";
  }
  return cell;
}

int cmd_table(const Options& o, const EvalConfig& cfg, std::ostream& out) {
  HLData data = load_data(o.data);
  auto axes = parse_grid(o.grid);
  if (static_cast<int>(axes.size()) != data.d) throw ParameterError("grid dimension does not match d");
  std::vector<Cell> cells;
  std::vector<int> pt;
  for (auto& a : axes) pt.push_back(a.first);
  while (true) {
    cells.push_back(table_cell(data, pt, o.des, cfg));
    size_t j = 0;
    while (j < pt.size() && ++pt[j] > axes[j].second) pt[j] = axes[j].first, ++j;
    if (j == pt.size()) break;
  }
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& c : cells) arr.push_back(Json{{"point", c.point}, {"value", c.value}, {"method", c.method}});
    out << arr.dump(2) << "\n";
    return 0;
  }
  for (int j = 1; j <= data.d; ++j) out << "s" << j << ",";
  out << "value,method\n";
  for (const auto& c : cells) {
    for (int k : c.point) out << k << ",";
    out << '"' << c.value << "\"," << c.method << "\n";
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"desingularized multiple zeta-functions"};
  app.require_subcommand(1);
  Options o;
  auto format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  };

  auto* eval = app.add_subcommand("eval", "evaluate zeta or zeta^des at a point");
  eval->add_option("--data", o.data, "builtin (ez2, ez3, mt2, a2) or HLData JSON file");
  eval->add_option("--at", o.at, "point, e.g. 3,2 or 1.5+2i,-1")->required();
  eval->add_flag("--des", o.des, "desingularized function");
  eval->add_option("--tol", o.tol, "target tolerance (default from DESING_TOLERANCE)");
  format(eval);

  auto* ident = app.add_subcommand("desing-identity", "print the identity expressing zeta^des");
  ident->add_option("--data", o.data);
  format(ident);

  auto* special = app.add_subcommand("special", "exact zeta^des(-lambda)");
  special->add_option("--data", o.data);
  special->add_option("--lambda", o.lambda, "non-negative integers, e.g. 1,1")->required();
  format(special);

  auto* padic = app.add_subcommand("padic", "p-adic multiple L-value at non-positive integers");
  padic->add_option("--r", o.r, "depth (checked against --n)");
  padic->add_option("--n", o.n, "n_1,...,n_r");
  padic->add_option("--c", o.c);
  padic->add_option("--p", o.p);
  padic->add_flag("--kl-check", o.kl, "compare with the Kubota-Leopoldt closed form (r = 1)");
  format(padic);

  auto* sing = app.add_subcommand("singularities", "catalog of singular hyperplanes");
  sing->add_option("--xi", o.xi, "twists, e.g. 1,-1 or e(1/3),i");
  sing->add_option("--lmax", o.lmax);
  format(sing);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite)->required()->check(CLI::IsMember({"paper-values", "trivial-relations", "oracle"}));
  verify->add_option("--tol", o.tol);
  format(verify);

  auto* table = app.add_subcommand("table", "values on an integer grid");
  table->add_option("--data", o.data);
  table->add_option("--grid", o.grid, "e.g. -3..3,-3..3")->required();
  table->add_flag("--des", o.des);
  table->add_option("--tol", o.tol);
  table->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (table->parsed() && table->count("--format") == 0) o.format = "csv";

  try {
    EvalConfig cfg = EvalConfig::from_env();
    if (o.tol != 0) cfg.tolerance = o.tol;
    cfg.validate();
    if (eval->parsed()) return cmd_eval(o, cfg, out);
    if (ident->parsed()) return cmd_identity(o, out);
    if (special->parsed()) return cmd_special(o, out);
    if (padic->parsed()) return cmd_padic(o, out);
    if (sing->parsed()) return cmd_singularities(o, out);
    if (verify->parsed()) return cmd_verify(o, cfg, out);
    if (table->parsed()) return cmd_table(o, cfg, out);
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const PoleError& e) {
    err << "pole: " << e.what() << "\n";
    return 3;
  } catch (const RegionError& e) {
    err << "region: " << e.what() << "\n";
    return 3;
  } catch (const AccuracyError& e) {
    err << "accuracy: " << e.what() << " (achieved " << e.achieved() << ")\n";
    return 4;
  } catch (const ConsistencyError& e) {
    err << "internal consistency: " << e.what() << "\n";
    return 5;
  }
  return 2;
}

}  // namespace desing::cli
