#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "vee/catalog.hpp"
#include "vee/cms.hpp"
#include "vee/error.hpp"
#include "vee/numwdvv.hpp"
#include "vee/polycon.hpp"
#include "vee/vee_file.hpp"
#include "vee/veecheck.hpp"

using namespace vee;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Globals {
  std::size_t points = 10;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  double margin = 0.1;
  std::string metric = "vee";
  bool report_kv = false;
};

// key = value lines, printed after the human-readable report.
class KvReport {
 public:
  void add(const std::string& key, const std::string& value) { items_.emplace_back(key, value); }
  void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }
  void add(const std::string& key, std::size_t value) { add(key, std::to_string(value)); }
  void add(const std::string& key, const Rational& value) { add(key, to_string(value)); }

  void print(std::ostream& os) const {
    for (const auto& [k, v] : items_) os << k << " = " << v << "\n";
  }

 private:
  std::vector<std::pair<std::string, std::string>> items_;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x + 0.0);
  return buf;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", std::abs(x) < 5e-13 ? 0.0 : x);
  return buf;
}

std::string num(Complex z) {
  if (std::abs(z.imag()) < 1e-10) return num(z.real());
  return num(z.real()) + (z.imag() < 0 ? "-" : "+") + num(std::abs(z.imag())) + "i";
}

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw VeeError(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ConfigFile load(const std::string& path) { return parse_config_file(read_source(path)); }

VConfiguration numeric(const ConfigFile& f) {
  if (f.is_symbolic())
    throw VeeError(ErrorCode::InvalidArgument, "symbolic multiplicities; use 'constraints', 'family' or 'search'");
  return f.to_config();
}

std::optional<RatVector> parse_functional(const std::string& text) {
  if (text.empty()) return std::nullopt;
  RatVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  return v;
}

// Rows of whitespace-separated rationals; '#' comments.
Metric load_metric(const std::string& source, const VConfiguration& cfg) {
  if (source == "vee") return Metric::vee(cfg);
  std::istringstream in(read_source(source));
  std::vector<RatVector> rows;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream ls(line);
    RatVector row;
    std::string tok;
    while (ls >> tok) row.push_back(parse_rational(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.size() != cfg.dim())
    throw VeeError(ErrorCode::DimensionMismatch, "metric has " + std::to_string(rows.size()) + " rows, expected " +
                                                     std::to_string(cfg.dim()));
  for (const auto& r : rows)
    if (r.size() != cfg.dim()) throw VeeError(ErrorCode::DimensionMismatch, "metric row of wrong length");
  return Metric::from_matrix(RatMatrix::from_rows(rows));
}

std::string member_list(const VConfiguration& cfg, const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? ", " : "") + to_string(cfg.covector(idx[k]));
  return s + "}";
}

std::string series_line(const VConfiguration& cfg, const SeriesResidual& r) {
  return "alpha = " + to_string(cfg.covector(r.base)) + ", series " + member_list(cfg, r.members) +
         ": residual = " + to_string(r.residual);
}

ParamMap parse_params(const std::vector<std::string>& items) {
  ParamMap out;
  for (const auto& it : items) {
    auto eq = it.find('=');
    if (eq == std::string::npos) throw VeeError(ErrorCode::InvalidArgument, "expected name=value, got '" + it + "'");
    out[it.substr(0, eq)] = parse_rational(it.substr(eq + 1));
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_check(const Globals&, const std::string& path, const std::string& functional, std::ostream& os, KvReport& kv) {
  ConfigFile file = load(path);
  VConfiguration cfg = numeric(file);
  FullCheck fc = full_check(cfg, parse_functional(functional));
  kv.add("dim", cfg.dim());
  kv.add("entries", cfg.size());
  kv.add("det_g", cfg.gram_det());
  kv.add("degenerate", fc.degenerate);
  if (fc.degenerate) {
    os << "trig-vee: FAIL, form: degenerate (det G = 0)\n";
    kv.add("trig_vee", false);
    return kFail;
  }
  kv.add("trig_vee", fc.is_trig_vee);
  kv.add("irreducible", fc.is_irreducible);
  kv.add("components", fc.component_count);

  const std::string irr = fc.is_irreducible ? "yes" : "no";
  if (!fc.is_trig_vee) {
    const SeriesResidual* w = fc.series.first_failure();
    os << "trig-vee: FAIL, irreducible: " << irr << "\n";
    os << "witness: " << series_line(cfg, *w) << "\n";
    kv.add("witness_alpha", to_string(cfg.covector(w->base)));
    kv.add("witness_series", member_list(cfg, w->members));
    kv.add("witness_residual", w->residual);
    return kFail;
  }

  int code = kPass;
  switch (fc.lambda.status) {
    case LambdaStatus::Value:
      os << "trig-vee: PASS, irreducible: " << irr << ", lambda2 = " << to_string(fc.lambda.lambda_squared) << "\n";
      kv.add("lambda2_status", std::string("value"));
      kv.add("lambda2", fc.lambda.lambda_squared);
      break;
    case LambdaStatus::AnyLambda:
      os << "trig-vee: PASS, irreducible: " << irr << ", lambda2: any (condition is vacuous)\n";
      kv.add("lambda2_status", std::string("any"));
      break;
    case LambdaStatus::NoSolution:
      os << "trig-vee: PASS, irreducible: " << irr << "\n";
      os << "lambda2: NO SOLUTION" << (fc.is_irreducible ? "" : " (reducible configuration)") << "\n";
      if (fc.lambda.witness)
        os << "witness: P[" << fc.lambda.witness->row << "," << fc.lambda.witness->col << "] = " << to_string(fc.lambda.witness->p)
           << ", Q[" << fc.lambda.witness->row << "," << fc.lambda.witness->col << "] = " << to_string(fc.lambda.witness->q) << "\n";
      kv.add("lambda2_status", std::string("none"));
      code = kFail;
      break;
  }

  if (file.lambda2) {
    bool match = fc.lambda.has_value() && fc.lambda.lambda_squared == *file.lambda2;
    os << "declared lambda2 = " << to_string(*file.lambda2) << ": " << (match ? "MATCH" : "MISMATCH") << "\n";
    kv.add("lambda2_declared", *file.lambda2);
    kv.add("lambda2_declared_match", match);
    if (!match) code = kFail;
  }
  return code;
}

int cmd_series(const std::string& path, std::ostream& os, KvReport& kv) {
  VConfiguration cfg = numeric(load(path));
  SeriesCheckReport rep = check_series_condition(cfg);
  std::size_t failed = 0;
  for (const auto& r : rep.items) {
    os << (r.pass ? "PASS " : "FAIL ") << series_line(cfg, r) << "\n";
    if (!r.pass) ++failed;
  }
  os << "series: " << rep.items.size() << " checked, " << failed << " failed\n";
  kv.add("series_checked", rep.items.size());
  kv.add("series_failed", failed);
  kv.add("series_pass", rep.pass);
  return rep.pass ? kPass : kFail;
}

int cmd_lambda(const std::string& path, const std::string& functional, std::ostream& os, KvReport& kv) {
  VConfiguration cfg = numeric(load(path));
  PositiveSystem ps = positive_system(cfg, parse_functional(functional));
  LambdaSolution sol = solve_lambda_squared(cfg, ps);
  os << "positive system functional: " << to_string(ps.functional) << "\n";
  kv.add("functional", to_string(ps.functional));
  switch (sol.status) {
    case LambdaStatus::Value:
      os << "lambda2 = " << to_string(sol.lambda_squared) << "\n";
      kv.add("lambda2_status", std::string("value"));
      kv.add("lambda2", sol.lambda_squared);
      return kPass;
    case LambdaStatus::AnyLambda:
      os << "lambda2: any (condition is vacuous)\n";
      kv.add("lambda2_status", std::string("any"));
      return kPass;
    case LambdaStatus::NoSolution:
      os << "lambda2: NO SOLUTION\n";
      if (sol.witness)
        os << "witness: P[" << sol.witness->row << "," << sol.witness->col << "] = " << to_string(sol.witness->p) << ", Q["
           << sol.witness->row << "," << sol.witness->col << "] = " << to_string(sol.witness->q) << "\n";
      kv.add("lambda2_status", std::string("none"));
      return kFail;
  }
  return kFail;
}

int cmd_wdvv(const Globals& g, const std::string& path, const std::string& lambda_text, std::ostream& os, KvReport& kv) {
  ConfigFile file = load(path);
  VConfiguration cfg = numeric(file);
  Rational l2;
  if (!lambda_text.empty()) {
    l2 = parse_rational(lambda_text);
  } else if (file.lambda2) {
    l2 = *file.lambda2;
  } else {
    LambdaSolution sol = solve_lambda_squared(cfg, positive_system(cfg));
    if (!sol.has_value()) {
      os << "wdvv: no lambda2 available (none declared, none solvable)\n";
      return kFail;
    }
    l2 = sol.lambda_squared;
  }
  WdvvOptions opts{g.points, g.seed, g.margin};
  ResidualReport rep = wdvv_residual(cfg, l2, opts);
  bool pass = rep.aggregate < g.tol;
  os << "lambda2 = " << to_string(l2) << "\n";
  os << "wdvv: aggregate residual = " << sci(rep.aggregate) << " over " << rep.points << " points (seed " << rep.seed
     << "), tol " << sci(g.tol) << ": " << (pass ? "PASS" : "FAIL") << "\n";
  kv.add("lambda2", l2);
  kv.add("points", rep.points);
  kv.add("seed", std::to_string(rep.seed));
  kv.add("aggregate_residual", sci(rep.aggregate));
  kv.add("wdvv_pass", pass);
  return pass ? kPass : kFail;
}

int cmd_cms(const Globals& g, const std::string& path, std::ostream& os, KvReport& kv) {
  VConfiguration cfg = numeric(load(path));
  Metric metric = load_metric(g.metric, cfg);
  CmsOptions opts{g.points, g.seed, g.margin, g.tol};
  CmsReport rep = cms_identity_residual(cfg, metric, opts);
  Complex closed = eigenvalue_from_constant(cfg, metric, rep.mean);
  os << "metric: " << (metric.is_vee_form ? "vee-form" : g.metric) << "\n";
  os << "cms identity: constant = " << num(rep.mean) << ", max deviation = " << sci(rep.max_deviation) << ": "
     << (rep.constant ? "PASS" : "FAIL") << "\n";
  os << "eigenvalue: mu = " << num(rep.eigenvalue_estimate) << " (closed form " << num(closed) << ", spread "
     << sci(rep.eigenvalue_deviation) << ")\n";
  kv.add("identity_constant", num(rep.mean));
  kv.add("identity_max_deviation", sci(rep.max_deviation));
  kv.add("identity_pass", rep.constant);
  kv.add("eigenvalue", num(rep.eigenvalue_estimate));

  bool series_pass = false;
  try {
    CmsToVee conv = cms_to_vee(cfg, metric);
    series_pass = conv.metric_series.pass;
    os << "series with metric: " << (conv.metric_series.pass ? "PASS" : "FAIL") << "\n";
    if (const SeriesResidual* w = conv.metric_series.first_failure()) os << "witness: " << series_line(cfg, *w) << "\n";
    for (const auto& c : conv.components)
      os << "component: dim " << c.basis.size() << ", G = " << to_string(c.scalar) << " * metric^-1\n";
    os << "trig-vee (from metric): " << (conv.is_trig_vee ? "PASS" : "FAIL") << "\n";
    kv.add("metric_series_pass", conv.metric_series.pass);
    kv.add("components", conv.components.size());
    kv.add("trig_vee", conv.is_trig_vee);
  } catch (const VeeError& e) {
    if (e.code() != ErrorCode::NonScalarAction) throw;
    SeriesCheckReport s = check_series_with_metric(cfg, metric);
    series_pass = s.pass;
    os << "series with metric: " << (s.pass ? "PASS" : "FAIL") << "\n";
    os << "metric action: not scalar over Q on any splitting\n";
    kv.add("metric_series_pass", s.pass);
  }
  return rep.constant && series_pass ? kPass : kFail;
}

struct SymbolicSetup {
  std::vector<RatVector> vectors;
  std::vector<std::string> placeholders;  // one per entry
  std::vector<std::string> names;         // user-visible variables
};

SymbolicSetup symbolic_setup(const ConfigFile& file) {
  SymbolicSetup s;
  s.vectors = file.vectors();
  for (std::size_t k = 0; k < file.entries.size(); ++k) s.placeholders.push_back("_" + std::to_string(k + 1));
  s.names = file.is_symbolic() ? file.symbols() : default_symbols(file.entries.size());
  return s;
}

int cmd_constraints(const std::string& path, std::ostream& os, KvReport& kv) {
  ConfigFile file = load(path);
  SymbolicSetup s = symbolic_setup(file);
  ConstraintSet cs = series_constraints(s.vectors, s.placeholders);

  std::vector<MultiPoly> images;
  for (std::size_t k = 0; k < file.entries.size(); ++k) {
    const auto& m = file.entries[k].mult;
    if (!file.is_symbolic()) {
      images.push_back(MultiPoly::variable(s.names, k));
    } else if (const auto* sym = std::get_if<std::string>(&m)) {
      auto it = std::find(s.names.begin(), s.names.end(), *sym);
      images.push_back(MultiPoly::variable(s.names, static_cast<std::size_t>(it - s.names.begin())));
    } else {
      images.push_back(MultiPoly::constant(s.names, std::get<Rational>(m)));
    }
  }

  os << "variables:";
  for (const auto& n : s.names) os << " " << n;
  os << "\n";
  os << "nondegeneracy: " << cs.nondegeneracy.substitute(images).to_string() << " != 0\n";
  std::size_t count = 0;
  std::vector<std::string> seen;
  for (const auto& c : cs.constraints) {
    MultiPoly p = c.poly.substitute(images);
    if (p.is_zero()) continue;
    std::string text = p.to_string();
    if (std::find(seen.begin(), seen.end(), text) != seen.end()) continue;
    seen.push_back(text);
    os << "alpha = " << to_string(s.vectors[c.base]) << ", series {";
    for (std::size_t k = 0; k < c.members.size(); ++k) os << (k ? ", " : "") << to_string(s.vectors[c.members[k]]);
    os << "}: " << text << " = 0\n";
    ++count;
  }
  os << "constraints: " << count << " distinct nontrivial\n";
  kv.add("variables", s.names.size());
  kv.add("constraints", count);
  return kPass;
}

int cmd_family(const std::string& path, const std::vector<std::string>& sets, std::ostream& os, KvReport& kv) {
  ConfigFile file = load(path);
  if (!file.is_symbolic()) throw VeeError(ErrorCode::InvalidArgument, "'family' needs symbolic multiplicities (?name)");
  std::map<std::string, std::string> exprs;
  for (const auto& it : sets) {
    auto eq = it.find('=');
    if (eq == std::string::npos) throw VeeError(ErrorCode::InvalidArgument, "expected sym=expr, got '" + it + "'");
    exprs[it.substr(0, eq)] = it.substr(eq + 1);
  }
  std::vector<std::string> params;
  for (const auto& [sym, e] : exprs)
    for (const auto& id : expression_identifiers(e))
      if (std::find(params.begin(), params.end(), id) == params.end()) params.push_back(id);

  SymbolicSetup s = symbolic_setup(file);
  std::map<std::string, RationalFunction> param;
  for (std::size_t k = 0; k < file.entries.size(); ++k) {
    const auto& m = file.entries[k].mult;
    if (const auto* sym = std::get_if<std::string>(&m)) {
      auto it = exprs.find(*sym);
      if (it == exprs.end()) throw VeeError(ErrorCode::InvalidParams, "no --set for symbol '" + *sym + "'");
      param[s.placeholders[k]] = parse_rational_function(it->second, params);
    } else {
      param[s.placeholders[k]] = RationalFunction::constant(params, std::get<Rational>(m));
    }
  }
  FamilyReport rep = verify_family(s.vectors, s.placeholders, param);
  os << "parameters:";
  for (const auto& p : params) os << " " << p;
  os << "\n";
  os << "family: " << (rep.pass ? "PASS" : "FAIL") << "\n";
  for (std::size_t k = 0; k < rep.failing.size(); ++k)
    os << "failing constraint " << rep.failing[k] << ": " << rep.cleared[rep.failing[k]].to_string() << " != 0\n";
  os << "nondegeneracy: " << rep.nondegeneracy_numerator.to_string() << " != 0\n";
  os << "excluded: " << rep.denominator_locus.to_string() << " != 0\n";
  kv.add("family_pass", rep.pass);
  kv.add("failing", rep.failing.size());
  return rep.pass ? kPass : kFail;
}

int cmd_search(const Globals& g, const std::string& path, std::size_t normalize, std::size_t starts, std::ostream& os,
               KvReport& kv) {
  ConfigFile file = load(path);
  std::vector<RatVector> vectors = file.vectors();
  if (normalize < 1 || normalize > vectors.size()) throw VeeError(ErrorCode::InvalidArgument, "--normalize out of range");
  SearchOptions opts;
  opts.starts = starts;
  opts.seed = g.seed;
  auto found = find_multiplicities(vectors, normalize - 1, opts);
  os << "solutions: " << found.size() << "\n";
  for (std::size_t k = 0; k < found.size(); ++k) {
    std::vector<Entry> es;
    for (std::size_t i = 0; i < vectors.size(); ++i) es.push_back({Covector{vectors[i]}, found[k].mults[i], ""});
    VConfiguration cfg = VConfiguration::build(file.dim, std::move(es));
    LambdaSolution sol = solve_lambda_squared(cfg, positive_system(cfg));
    os << "solution " << k + 1 << ": mult " << to_string(found[k].mults);
    if (sol.has_value()) os << ", lambda2 = " << to_string(sol.lambda_squared);
    os << "\n";
    kv.add("solution_" + std::to_string(k + 1), to_string(found[k].mults));
  }
  kv.add("solutions", found.size());
  return found.empty() ? kFail : kPass;
}

std::string expected_text(const Expected& e) {
  std::string s = e.is_trig_vee ? "trig-vee pass" : "trig-vee fail";
  switch (e.lambda_kind) {
    case ExpectedLambda::Value: s += ", lambda2 = " + to_string(e.lambda_squared); break;
    case ExpectedLambda::NoSolution: s += ", lambda2: no solution"; break;
    case ExpectedLambda::Unspecified: break;
  }
  return s + " [" + std::string(to_string(e.provenance)) + "]";
}

int cmd_catalog_list(std::ostream& os) {
  for (const auto& info : catalog_list()) {
    os << info.name << ": " << info.description;
    if (!info.params.empty()) {
      os << " (";
      for (std::size_t k = 0; k < info.params.size(); ++k)
        os << (k ? ", " : "") << info.params[k].name << "=" << to_string(info.params[k].default_value);
      os << ")";
    }
    os << "\n";
  }
  return kPass;
}

int cmd_catalog_show(const std::string& name, const std::vector<std::string>& params, std::ostream& os) {
  CatalogEntry e = catalog_get(name, parse_params(params));
  os << e.name << ": " << e.description << "\n";
  if (e.expected) os << "expected: " << expected_text(*e.expected) << "\n";
  os << render(to_config_file(e.cfg));
  return kPass;
}

int cmd_catalog_export(const std::string& name, const std::vector<std::string>& params, std::ostream& os) {
  CatalogEntry e = catalog_get(name, parse_params(params));
  std::optional<Rational> l2;
  if (e.expected && e.expected->lambda_kind == ExpectedLambda::Value) l2 = e.expected->lambda_squared;
  os << "# " << e.name << "\n" << render(to_config_file(e.cfg, l2));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vee: trigonometric vee-systems, WDVV and CMS checks"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--points", g.points, "Sample points for numeric checks")->capture_default_str();
  app.add_option("--seed", g.seed, "Sampling seed")->capture_default_str();
  app.add_option("--tol", g.tol, "Numeric tolerance")->capture_default_str();
  app.add_option("--margin", g.margin, "Minimum |sin a(x)| at sample points")->capture_default_str();
  app.add_option("--metric", g.metric, "Metric for 'cms': a file of rows, or 'vee'")->capture_default_str();
  app.add_flag("--report-kv", g.report_kv, "Also print key = value lines");

  std::string file, functional, lambda_text, name;
  std::vector<std::string> sets, params;
  std::size_t normalize = 1, starts = 48;

  auto file_arg = [&](CLI::App* sub) { sub->add_option("file", file, "Configuration file, '-' for stdin")->required(); };

  auto* check = app.add_subcommand("check", "Series condition, irreducibility and lambda2");
  file_arg(check);
  check->add_option("--functional", functional, "Positive-system functional, e.g. 1,2");
  auto* series = app.add_subcommand("series", "Every alpha-series residual");
  file_arg(series);
  auto* lambda = app.add_subcommand("lambda", "Solve the lambda2 tensor condition");
  file_arg(lambda);
  lambda->add_option("--functional", functional, "Positive-system functional, e.g. 1,2");
  auto* wdvv = app.add_subcommand("wdvv", "Numeric WDVV residual of the trilogarithmic prepotential");
  file_arg(wdvv);
  wdvv->add_option("--lambda2", lambda_text, "Override lambda2");
  auto* cms = app.add_subcommand("cms", "CMS cotangent identity, eigenvalue and metric series check");
  file_arg(cms);
  auto* constraints = app.add_subcommand("constraints", "Polynomial constraints on the multiplicities");
  file_arg(constraints);
  auto* family = app.add_subcommand("family", "Verify a parametrized family of multiplicities");
  file_arg(family);
  family->add_option("--set", sets, "sym=expr for each symbolic multiplicity");
  auto* search = app.add_subcommand("search", "Search for exact multiplicities");
  file_arg(search);
  search->add_option("--normalize", normalize, "1-based entry fixed to multiplicity 1")->capture_default_str();
  search->add_option("--starts", starts, "Random starts")->capture_default_str();

  auto* catalog = app.add_subcommand("catalog", "Built-in configurations");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List entries");
  auto* show = catalog->add_subcommand("show", "Show an entry");
  show->add_option("name", name)->required();
  show->add_option("--param", params, "name=value");
  auto* cexport = catalog->add_subcommand("export", "Print an entry as a .vee file");
  cexport->add_option("name", name)->required();
  cexport->add_option("--param", params, "name=value");
  auto* exp = app.add_subcommand("export", "Same as 'catalog export'");
  exp->add_option("name", name)->required();
  exp->add_option("--param", params, "name=value");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  for (auto* sub : catalog->get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  KvReport kv;
  std::ostream& os = std::cout;
  int rc = kUsage;
  try {
    if (check->parsed()) {
      kv.add("command", std::string("check"));
      rc = cmd_check(g, file, functional, os, kv);
    } else if (series->parsed()) {
      kv.add("command", std::string("series"));
      rc = cmd_series(file, os, kv);
    } else if (lambda->parsed()) {
      kv.add("command", std::string("lambda"));
      rc = cmd_lambda(file, functional, os, kv);
    } else if (wdvv->parsed()) {
      kv.add("command", std::string("wdvv"));
      rc = cmd_wdvv(g, file, lambda_text, os, kv);
    } else if (cms->parsed()) {
      kv.add("command", std::string("cms"));
      rc = cmd_cms(g, file, os, kv);
    } else if (constraints->parsed()) {
      kv.add("command", std::string("constraints"));
      rc = cmd_constraints(file, os, kv);
    } else if (family->parsed()) {
      kv.add("command", std::string("family"));
      rc = cmd_family(file, sets, os, kv);
    } else if (search->parsed()) {
      kv.add("command", std::string("search"));
      rc = cmd_search(g, file, normalize, starts, os, kv);
    } else if (list->parsed()) {
      return cmd_catalog_list(os);
    } else if (show->parsed()) {
      return cmd_catalog_show(name, params, os);
    } else if (cexport->parsed() || exp->parsed()) {
      return cmd_catalog_export(name, params, os);
    }
  } catch (const VeeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  kv.add("exit", std::to_string(rc));
  if (g.report_kv) kv.print(os);
  return rc;
}
