#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "superyangian/dsl.hpp"
#include "superyangian/faults.hpp"
#include "superyangian/relations.hpp"

namespace sy {

namespace {

struct Opts {
  std::uint32_t p = 3;
  std::string size = "1,1";
  std::string sigma;  // default: M zeros then N ones
  std::string mu;
  int series_order = 3;
  int gen_order = 3;
  int cubic_order = 2;
  int quartic_order = 2;
  int inj_sum = 4;
  std::vector<std::string> families{"all"};
  std::string report;
  int jobs = 1;
  bool deterministic = false;
  std::string fault;
  std::string expr;
  std::string out;
};

void add_context(CLI::App* c, Opts& o) {
  c->add_option("--p", o.p, "prime modulus")->capture_default_str();
  c->add_option("--size", o.size, "M,N")->capture_default_str();
  c->add_option("--sigma", o.sigma, "01-sequence with M zeros and N ones (default 0..01..1)");
  c->add_option("--mu", o.mu, "composition of M+N, e.g. 1,2,1");
  c->add_option("--series-order", o.series_order, "truncation order R")->capture_default_str();
}

std::pair<int, int> parse_size(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ConfigError("--size expects M,N, got '" + s + "'");
  try {
    std::size_t u1 = 0, u2 = 0;
    const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    const int M = std::stoi(a, &u1), N = std::stoi(b, &u2);
    if (u1 != a.size() || u2 != b.size()) throw ConfigError("--size expects M,N, got '" + s + "'");
    return {M, N};
  } catch (const std::logic_error&) {
    throw ConfigError("--size expects M,N, got '" + s + "'");
  }
}

AlgebraContext context_of(const Opts& o) {
  auto [M, N] = parse_size(o.size);
  if (M < 0 || N < 0) throw ConfigError("--size entries must be >= 0");
  std::string sigma = o.sigma.empty() ? std::string(static_cast<std::size_t>(M), '0') + std::string(static_cast<std::size_t>(N), '1') : o.sigma;
  return make_context(o.p, M, N, sigma);
}

std::optional<Composition> mu_of(const Opts& o, const AlgebraContext& ctx) {
  if (o.mu.empty()) return std::nullopt;
  Composition mu = Composition::parse(o.mu);
  if (mu.total() != ctx.dim())
    throw ConfigError("mu=(" + mu.str() + ") sums to " + std::to_string(mu.total()) + ", expected M+N = " + std::to_string(ctx.dim()));
  return mu;
}

// restores the fault flags on scope exit so repeated in-process runs stay clean
struct FaultScope {
  explicit FaultScope(const std::string& name) {
    if (name.empty()) return;
    if (!fault_hooks_enabled()) throw ConfigError("--fault needs a build with SUPERYANGIAN_FAULT_HOOKS");
    FaultHooks h;
    if (name == "straighten_sign")
      h.straighten_sign = true;
    else if (name == "psi_sign")
      h.psi_sign = true;
    else if (name == "gauss_d2")
      h.gauss_d2 = true;
    else if (name == "recursion_sign")
      h.recursion_sign = true;
    else
      throw ConfigError("unknown fault '" + name + "'");
    set_faults(h);
    active = true;
  }
  ~FaultScope() {
    if (active) set_faults(FaultHooks{});
  }
  bool active = false;
};

int cmd_verify(const Opts& o, std::ostream& out) {
  AlgebraContext ctx = context_of(o);
  RunConfig cfg;
  cfg.p = o.p;
  cfg.M = ctx.M();
  cfg.N = ctx.N();
  cfg.sigma = ctx.sigma();
  if (auto mu = mu_of(o, ctx)) cfg.mu = *mu;
  cfg.levels.R = o.series_order;
  cfg.levels.gen = o.gen_order;
  cfg.levels.cubic = o.cubic_order;
  cfg.levels.quartic = o.quartic_order;
  cfg.levels.inj_sum = o.inj_sum;
  cfg.families = o.families;
  cfg.jobs = o.jobs;
  cfg.deterministic = o.deterministic;
  FaultScope faults(o.fault);

  Report rep = full_suite(cfg);
  for (const auto& f : rep.families) {
    out << (f.passed() ? "PASS " : "FAIL ") << f.id << " checked=" << f.checked;
    if (!f.passed()) out << " failed=" << f.failed;
    out << "\n";
    for (const auto& [where, delta] : f.failures) out << "    " << where << " : " << delta << "\n";
  }
  out << "summary: families=" << rep.families.size() << " checked=" << rep.checked() << " failed=" << rep.failed() << "\n";
  if (!o.report.empty()) {
    const std::string json = report_json(rep);
    if (o.report == "-") {
      out << json;
    } else {
      std::ofstream f(o.report);
      if (!f) throw ConfigError("cannot write report to '" + o.report + "'");
      f << json;
    }
  }
  return rep.passed() ? 0 : 1;
}

int cmd_eval(const Opts& o, std::ostream& out) {
  AlgebraContext ctx = context_of(o);
  auto mu = mu_of(o, ctx);
  auto ast = parse_expr(o.expr);  // syntax errors before any algebra is built
  Yangian Y(ctx);
  Evaluator ev(Y, mu, o.series_order);
  out << to_text(ev.eval(*ast)) << "\n";
  return 0;
}

int cmd_gauss(const Opts& o, std::ostream& out) {
  AlgebraContext ctx = context_of(o);
  auto mu = mu_of(o, ctx);
  if (!mu) throw ConfigError("gauss needs --mu");
  if (o.series_order < 1) throw ConfigError("--series-order must be >= 1");
  FaultScope faults(o.fault);
  Yangian Y(ctx);
  const std::string dump = gauss_dump(gauss_decompose(Y, *mu, o.series_order));
  if (o.out.empty()) {
    out << dump;
  } else {
    std::ofstream f(o.out);
    if (!f) throw ConfigError("cannot write dump to '" + o.out + "'");
    f << dump;
  }
  return 0;
}

int cmd_families(std::ostream& out) {
  for (const auto& f : family_registry()) out << f.id << "\t" << f.group << "\tn>=" << f.min_blocks << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"syang: exact computations in the modular super Yangian"};
  app.require_subcommand(1);
  Opts o;

  auto* verify = app.add_subcommand("verify", "check relation families and write a report");
  add_context(verify, o);
  verify->add_option("--gen-order", o.gen_order, "generator level cap for coefficient relations")->capture_default_str();
  verify->add_option("--cubic-order", o.cubic_order, "level cap for cubic Serre relations")->capture_default_str();
  verify->add_option("--quartic-order", o.quartic_order, "level cap for quartic Serre relations")->capture_default_str();
  verify->add_option("--inj-sum", o.inj_sum, "bound on r+s in gr checks")->capture_default_str();
  verify->add_option("--families", o.families, "'all' or a comma-separated list of family ids")->delimiter(',');
  verify->add_option("--report", o.report, "write the JSON report here ('-' for stdout)");
  verify->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
  verify->add_flag("--deterministic", o.deterministic, "zero timings so reports are reproducible byte for byte");
  verify->add_option("--fault", o.fault, "inject a fault (test builds): straighten_sign, psi_sign, gauss_d2, recursion_sign");

  auto* eval = app.add_subcommand("eval", "evaluate an expression and print its normal form");
  add_context(eval, o);
  eval->add_option("--expr", o.expr, "expression, e.g. \"[t(1,2,1), t(2,1,1)]\"")->required();

  auto* gauss = app.add_subcommand("gauss", "dump the Gauss decomposition coefficients");
  add_context(gauss, o);
  gauss->add_option("--out", o.out, "write the dump to a file instead of stdout");
  gauss->add_option("--fault", o.fault, "inject a fault (test builds)");

  auto* families = app.add_subcommand("families", "list the relation families");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (eval->parsed()) return cmd_eval(o, out);
    if (gauss->parsed()) return cmd_gauss(o, out);
    if (families->parsed()) return cmd_families(out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace sy
