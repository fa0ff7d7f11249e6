#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "crosscheck.hpp"
#include "hypercert/certify.hpp"
#include "hypercert/errors.hpp"
#include "hypercert/scan.hpp"
#include "hypercert/serialize.hpp"
#include "hypercert/verify.hpp"

namespace hypercert::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Text, Json, Csv };

struct CliConfig {
  double tolerance = kDefaultTolerance;
  double r_max = kDefaultRMax;
  int grid_radii = 32;
  int grid_angles = 256;
  int max_terms = kDefaultMaxTerms;
  std::string output_path;
  OutputFormat format = OutputFormat::Text;

  void validate() const {
    if (!(tolerance >= kMinTolerance && tolerance <= 1e-6)) {
      throw UsageError("--tol must lie in [1e-14, 1e-6]");
    }
    if (!(r_max > 0.0 && r_max <= 0.99)) throw UsageError("--r-max must lie in (0, 0.99]");
    if (grid_radii < 1 || grid_angles < 1) throw UsageError("grid sizes must be positive");
    if (max_terms < 2) throw UsageError("--max-terms must be at least 2");
  }
  SeriesOptions series() const { return {r_max, max_terms, Precision::Automatic}; }
  DiskGrid grid() const { return DiskGrid::standard(grid_radii, grid_angles, r_max); }
  TreeFormat tree() const { return format == OutputFormat::Json ? TreeFormat::Json : TreeFormat::Text; }
};

struct ParamArgs {
  double u = 0.0, v = 0.0, w = 0.0;
  std::optional<double> C, D;
  std::string convention = "minus";

  HypergeomParams params() const { return {u, v, w}; }
  std::optional<JanowskiPair> pair(bool required) const {
    if (!C || !D) {
      if (required || C || D) throw UsageError("Janowski targets need both --C and --D");
      return std::nullopt;
    }
    JanowskiPair j;
    j.C = *C;
    j.D = *D;
    j.convention = convention == "plus" ? JanowskiConvention::PlusD : JanowskiConvention::MinusD;
    return j;
  }
};

void add_param_options(CLI::App* cmd, ParamArgs& a, bool pair) {
  cmd->add_option("--u", a.u, "first numerator parameter")->required();
  cmd->add_option("--v", a.v, "second numerator parameter")->required();
  cmd->add_option("--w", a.w, "denominator parameter")->required();
  if (pair) {
    cmd->add_option("--C", a.C, "Janowski C");
    cmd->add_option("--D", a.D, "Janowski D");
    cmd->add_option("--convention", a.convention, "Janowski sign convention recorded in output")
        ->check(CLI::IsMember({"plus", "minus"}));
  }
}

const std::map<std::string, ConditionSet>& condition_names() {
  static const std::map<std::string, ConditionSet> m = {
      {"h1", ConditionSet::H1},
      {"h2", ConditionSet::H2},
      {"corollary-starlike", ConditionSet::CorollaryStarlike},
      {"janowski-convex", ConditionSet::JanowskiConvex},
      {"janowski-starlike", ConditionSet::JanowskiStarlike}};
  return m;
}

const std::map<std::string, FunctionalKind>& kind_names() {
  static const std::map<std::string, FunctionalKind> m = {
      {"function", FunctionalKind::Function},
      {"exp-convex", FunctionalKind::ExpConvex},
      {"exp-starlike", FunctionalKind::ExpStarlike},
      {"janowski-convex", FunctionalKind::JanowskiConvex},
      {"janowski-starlike", FunctionalKind::JanowskiStarlike}};
  return m;
}

std::string cli_name(FunctionalKind k) {
  for (const auto& [name, kind] : kind_names()) {
    if (kind == k) return name;
  }
  return "function";
}

std::string cli_name(ConditionSet c) {
  for (const auto& [name, set] : condition_names()) {
    if (set == c) return name;
  }
  return "h1";
}

// The claim a verification checks: the condition set whose certificate
// implies that the functional lies in its target.
ConditionSet claim_for(FunctionalKind k) {
  switch (k) {
    case FunctionalKind::Function: return ConditionSet::H1;
    case FunctionalKind::ExpConvex: return ConditionSet::H2;
    case FunctionalKind::ExpStarlike: return ConditionSet::CorollaryStarlike;
    case FunctionalKind::JanowskiConvex: return ConditionSet::JanowskiConvex;
    case FunctionalKind::JanowskiStarlike: return ConditionSet::JanowskiStarlike;
  }
  return ConditionSet::H1;
}

std::string num(double x) { return format_number(x); }

std::string pair_text(std::complex<double> z) {
  return "(" + num(z.real()) + ", " + num(z.imag()) + ")";
}

std::string target_flag(const Target& t) {
  switch (t.kind) {
    case Target::Kind::ExpDisk: return "exp-disk";
    case Target::Kind::ExpImage: return "exp-image";
    case Target::Kind::Janowski: return "janowski";
  }
  return "exp-disk";
}

std::string param_flags(const HypergeomParams& p, const std::optional<JanowskiPair>& j) {
  std::string s = "--u " + num(p.u) + " --v " + num(p.v) + " --w " + num(p.w);
  if (j) {
    s += " --C " + num(j->C) + " --D " + num(j->D) + " --convention " +
         std::string(to_string(j->convention));
  }
  return s;
}

std::string config_flags(const CliConfig& c) {
  return "--tol " + num(c.tolerance) + " --r-max " + num(c.r_max) + " --radii " +
         std::to_string(c.grid_radii) + " --angles " + std::to_string(c.grid_angles) +
         " --max-terms " + std::to_string(c.max_terms);
}

// A certified parameter point whose verification found violations.
void print_counterexample(std::ostream& err, const CliConfig& cfg, const Certificate& cert,
                          const VerificationReport& r) {
  const std::optional<JanowskiPair> pair =
      r.target.kind == Target::Kind::Janowski ? std::optional(r.target.pair) : cert.pair;
  err << "COUNTEREXAMPLE: " << to_string(cert.condition_set) << " certifies "
      << param_flags(cert.params, cert.pair) << " but " << to_string(r.kind) << " leaves "
      << to_string(r.target.kind) << " at " << r.violations << " of " << r.samples
      << " grid points\n";
  err << "  reproduce: hypercert verify " << cli_name(r.kind) << ' '
      << param_flags(r.params, pair) << " --target " << target_flag(r.target) << ' '
      << config_flags(cfg) << '\n';
  err << "  certify: hypercert certify " << cli_name(cert.condition_set) << ' '
      << param_flags(cert.params, cert.pair) << '\n';
  err << "  worst: z=" << pair_text(r.worst_point) << " value=" << pair_text(r.worst_value)
      << " margin=" << num(r.min_margin) << '\n';
  for (const auto& s : r.counterexamples) {
    err << "  point: z=" << pair_text(s.z) << " value=" << pair_text(s.value)
        << " margin=" << num(s.margin) << '\n';
  }
}

// Writes to --output when given, otherwise to `out`.
class Sink {
 public:
  Sink(const CliConfig& cfg, std::ostream& out) : out_(&out) {
    if (!cfg.output_path.empty()) {
      file_.open(cfg.output_path, std::ios::binary);
      if (!file_) throw UsageError("cannot open output file " + cfg.output_path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

std::string csv_join(std::initializer_list<std::string> cells) {
  std::string s;
  for (const auto& c : cells) s += (s.empty() ? "" : ",") + c;
  return s + "\n";
}

int cmd_eval(const CliConfig& cfg, const ParamArgs& a, std::pair<double, double> zin,
             const std::string& kind_name, std::ostream& out) {
  const auto p = a.params();
  const std::complex<double> z(zin.first, zin.second);
  const FunctionalKind kind = kind_names().at(kind_name);
  Sink sink(cfg, out);
  if (kind == FunctionalKind::Function) {
    const SeriesValue s = gauss_2f1(p, z, cfg.tolerance, cfg.series());
    if (cfg.format == OutputFormat::Csv) {
      sink.stream() << "value_re,value_im,tail_bound,terms_used,extended_precision\n"
                    << csv_join({num(s.value.real()), num(s.value.imag()), num(s.tail_bound),
                                 std::to_string(s.terms_used), s.extended ? "1" : "0"});
    } else {
      sink.stream() << render(s, cfg.tree());
    }
    return kExitOk;
  }
  const auto value = eval_functional(kind, p, z, cfg.tolerance, cfg.series());
  if (cfg.format == OutputFormat::Csv) {
    sink.stream() << "kind,u,v,w,z_re,z_im,value_re,value_im\n"
                  << csv_join({std::string(to_string(kind)), num(p.u), num(p.v), num(p.w),
                               num(z.real()), num(z.imag()), num(value.real()),
                               num(value.imag())});
  } else {
    sink.stream() << render_functional(kind, p, z, value, cfg.tree());
  }
  return kExitOk;
}

int cmd_certify(const CliConfig& cfg, const std::string& set_name, const ParamArgs& a,
                std::ostream& out) {
  const ConditionSet set = condition_names().at(set_name);
  const auto pair = a.pair(is_janowski(set));
  const Certificate c = certify(set, a.params(), pair);
  Sink sink(cfg, out);
  if (cfg.format == OutputFormat::Csv) {
    sink.stream() << "id,relation,lhs,rhs,holds,margin,required\n";
    for (const auto& s : c.sub_results) {
      sink.stream() << csv_join({s.id, std::string(to_string(s.relation)), num(s.lhs),
                                 num(s.rhs), s.holds ? "1" : "0", num(s.margin),
                                 s.required ? "1" : "0"});
    }
    sink.stream() << csv_join({"overall", "", "", "", c.overall ? "1" : "0", "", "1"});
  } else {
    sink.stream() << render(c, cfg.tree());
  }
  return c.overall ? kExitOk : kExitNegative;
}

int cmd_verify(const CliConfig& cfg, const std::string& kind_name, const ParamArgs& a,
               const std::string& target_name, std::ostream& out, std::ostream& err) {
  const FunctionalKind kind = kind_names().at(kind_name);
  const bool janowski =
      kind == FunctionalKind::JanowskiConvex || kind == FunctionalKind::JanowskiStarlike;
  const auto pair = a.pair(janowski);
  Target target = janowski ? Target::janowski(*pair) : Target::exp_disk();
  if (!target_name.empty()) {
    if (target_name == "janowski") {
      if (!janowski) throw UsageError("target janowski needs a Janowski kind");
    } else {
      if (janowski) throw UsageError("Janowski kinds take --target janowski");
      target = target_name == "exp-image" ? Target::exp_image() : Target::exp_disk();
    }
  }
  const auto p = a.params();
  const VerificationReport r =
      verify_on_disk(kind, p, target, cfg.grid(), cfg.tolerance, cfg.series());
  Sink sink(cfg, out);
  if (cfg.format == OutputFormat::Csv) {
    sink.stream() << "kind,target,u,v,w,samples,violations,min_margin,worst_re,worst_im,"
                     "denominator_alerts,evaluation_errors,passed\n"
                  << csv_join({std::string(to_string(kind)), std::string(to_string(target.kind)),
                               num(p.u), num(p.v), num(p.w), std::to_string(r.samples),
                               std::to_string(r.violations), num(r.min_margin),
                               num(r.worst_point.real()), num(r.worst_point.imag()),
                               std::to_string(r.denominator_alerts.size()),
                               std::to_string(r.evaluation_errors.size()),
                               r.passed ? "1" : "0"});
  } else {
    sink.stream() << render(r, cfg.tree());
  }
  if (r.passed) return kExitOk;
  if (r.violations > 0) {
    const Certificate c = certify(claim_for(kind), p, pair);
    if (c.overall) print_counterexample(err, cfg, c, r);
    return kExitNegative;
  }
  return kExitDenominator;
}

int cmd_crosscheck(const CliConfig& cfg, std::uint64_t seed, std::optional<std::size_t> samples,
                   const std::vector<std::string>& suites, std::ostream& out) {
  CrosscheckOptions o;
  o.seed = seed;
  o.samples = samples;
  o.suites = suites;
  o.tol = cfg.tolerance;
  o.series = cfg.series();
  o.series.r_max = kDefaultRMax;  // suites sample |z| <= 0.95 plus FD steps
  const auto results = run_crosscheck(o);
  bool ok = true;
  Sink sink(cfg, out);
  auto& s = sink.stream();
  if (cfg.format == OutputFormat::Csv) s << "suite,passed,total,worst,worst_case\n";
  if (cfg.format == OutputFormat::Json) s << "[\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const SuiteResult& r = results[i];
    ok = ok && r.ok();
    switch (cfg.format) {
      case OutputFormat::Text:
        s << r.name << ": " << (r.ok() ? "PASS" : "FAIL") << ' ' << r.passed << '/' << r.total
          << " worst=" << num(r.worst) << " at " << r.worst_case << '\n';
        break;
      case OutputFormat::Csv:
        s << csv_join({r.name, std::to_string(r.passed), std::to_string(r.total), num(r.worst),
                       "\"" + r.worst_case + "\""});
        break;
      case OutputFormat::Json:
        s << "  {\"suite\": \"" << r.name << "\", \"passed\": " << r.passed
          << ", \"total\": " << r.total << ", \"worst\": "
          << (std::isfinite(r.worst) ? num(r.worst) : "\"" + num(r.worst) + "\"")
          << ", \"worst_case\": \"" << r.worst_case << "\"}"
          << (i + 1 < results.size() ? ",\n" : "\n");
        break;
    }
  }
  if (cfg.format == OutputFormat::Json) s << "]\n";
  return ok ? kExitOk : kExitNegative;
}

ParamRange parse_range(const std::string& text, std::string& name) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw UsageError("range '" + text + "' is not name=lo:hi:steps");
  name = text.substr(0, eq);
  std::vector<std::string> parts;
  std::stringstream ss(text.substr(eq + 1));
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3) throw UsageError("range '" + text + "' is not name=lo:hi:steps");
  ParamRange r;
  try {
    std::size_t used = 0;
    r.lo = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
    r.hi = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
    r.steps = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
  } catch (const std::logic_error&) {
    throw UsageError("range '" + text + "' has a malformed number");
  }
  try {
    r.validate(name);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return r;
}

int cmd_scan(const CliConfig& cfg, const std::string& set_name,
             const std::vector<std::string>& ranges, const std::vector<std::string>& pairs,
             const std::string& convention, bool verify, const std::string& plot_path,
             std::ostream& out, std::ostream& err) {
  ScanSpec spec;
  spec.condition_set = condition_names().at(set_name);
  for (const auto& text : ranges) {
    std::string name;
    const ParamRange r = parse_range(text, name);
    if (!spec.ranges.emplace(name, r).second) throw UsageError("duplicate range for " + name);
  }
  for (const auto& text : pairs) {
    const auto colon = text.find(':');
    JanowskiPair j;
    try {
      if (colon == std::string::npos) throw std::invalid_argument(text);
      j.C = std::stod(text.substr(0, colon));
      j.D = std::stod(text.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw UsageError("pair '" + text + "' is not C:D");
    }
    spec.janowski_pairs.push_back(j);
  }
  const auto conv = convention == "plus" ? JanowskiConvention::PlusD : JanowskiConvention::MinusD;
  for (auto& j : spec.janowski_pairs) j.convention = conv;
  spec.verify_certified = verify;
  spec.grid = cfg.grid();
  spec.tol = cfg.tolerance;
  spec.series = cfg.series();
  try {
    spec.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  const auto rows = run_scan(spec);
  Sink sink(cfg, out);
  write_scan_csv(sink.stream(), spec, rows);
  if (!plot_path.empty()) {
    std::ofstream plot(plot_path, std::ios::binary);
    if (!plot) throw UsageError("cannot open plot-data file " + plot_path);
    write_plot_data(plot, spec, rows);
  }
  const ScanSummary summary = summarize(rows);
  std::ostream& report = sink.to_file() ? out : err;
  report << render(summary, rows, cfg.tree());
  for (const auto& row : rows) {
    if (row.verification && row.verification->violations > 0) {
      print_counterexample(err, cfg, *row.certificate, *row.verification);
    }
  }
  return summary.feasible > 0 ? kExitOk : kExitNegative;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certify and verify Gauss hypergeometric subordination conditions", "hypercert"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::string format = "text";
  app.add_option("--tol", cfg.tolerance, "series tolerance in [1e-14, 1e-6]")
      ->envname("HYPERCERT_TOL");
  app.add_option("--max-terms", cfg.max_terms, "series term cap")->envname("HYPERCERT_MAX_TERMS");
  app.add_option("--r-max", cfg.r_max, "largest sampled |z|");
  app.add_option("--radii", cfg.grid_radii, "grid radius count");
  app.add_option("--angles", cfg.grid_angles, "grid angle count");
  app.add_option("--output,-o", cfg.output_path, "write the primary output to a file");
  app.add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  ParamArgs eval_args, cert_args, verify_args;
  std::pair<double, double> z{0.0, 0.0};
  std::string eval_kind = "function";
  auto* eval = app.add_subcommand("eval", "evaluate F or a functional at z")->fallthrough();
  add_param_options(eval, eval_args, false);
  eval->add_option("--z", z, "z as re im")->required();
  eval->add_option("--kind", eval_kind, "function or a quotient functional")
      ->check(CLI::IsMember(kind_names()));

  std::string set_name;
  auto* cert = app.add_subcommand("certify", "check a parameter condition set")->fallthrough();
  cert->add_option("set", set_name, "condition set")->required()->check(CLI::IsMember(condition_names()));
  add_param_options(cert, cert_args, true);

  std::string verify_kind, target_name;
  auto* ver = app.add_subcommand("verify", "check a subordination claim on a disk grid")->fallthrough();
  ver->add_option("kind", verify_kind, "functional")->required()->check(CLI::IsMember(kind_names()));
  add_param_options(ver, verify_args, true);
  ver->add_option("--target", target_name, "exp-disk, exp-image or janowski")
      ->check(CLI::IsMember({"exp-disk", "exp-image", "janowski"}));

  std::uint64_t seed = 1;
  std::optional<std::size_t> samples;
  std::vector<std::string> suites;
  auto* cross = app.add_subcommand("crosscheck", "run the property suites")->fallthrough();
  cross->add_option("--seed", seed, "random seed");
  cross->add_option("--samples", samples, "samples per suite");
  cross->add_option("--suite", suites, "restrict to named suites")
      ->check(CLI::IsMember(crosscheck_suites()));

  std::string scan_set, scan_convention = "minus", plot_path;
  std::vector<std::string> ranges, pairs;
  bool scan_verify = false;
  auto* scan = app.add_subcommand("scan", "sweep a parameter box")->fallthrough();
  scan->add_option("set", scan_set, "condition set")->required()->check(CLI::IsMember(condition_names()));
  scan->add_option("--range", ranges, "name=lo:hi:steps for u, v, w, C, D")->required();
  scan->add_option("--pair", pairs, "explicit Janowski pair C:D (repeatable)");
  scan->add_option("--convention", scan_convention, "Janowski sign convention")
      ->check(CLI::IsMember({"plus", "minus"}));
  scan->add_flag("--verify", scan_verify, "verify every certified point");
  scan->add_option("--plot-data", plot_path, "also write whitespace-separated plot data");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    cfg.format = format == "json" ? OutputFormat::Json
                 : format == "csv" ? OutputFormat::Csv
                                   : OutputFormat::Text;
    cfg.validate();
    if (eval->parsed()) return cmd_eval(cfg, eval_args, z, eval_kind, out);
    if (cert->parsed()) return cmd_certify(cfg, set_name, cert_args, out);
    if (ver->parsed()) return cmd_verify(cfg, verify_kind, verify_args, target_name, out, err);
    if (cross->parsed()) return cmd_crosscheck(cfg, seed, samples, suites, out);
    return cmd_scan(cfg, scan_set, ranges, pairs, scan_convention, scan_verify, plot_path, out,
                    err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace hypercert::cli
