#include "conformal_cli/app.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "conformal/error.hpp"
#include "conformal/halfplane.hpp"
#include "conformal/spacetime.hpp"
#include "conformal_cli/config.hpp"
#include "conformal_cli/report.hpp"
#include "conformal_cli/suites.hpp"

namespace conformal::cli {
namespace {

// Raw flag values; unset optionals leave lower layers in place.
struct CommonFlags {
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::optional<double> fd_step;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::string> config;
  bool timing = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--seed", f.seed, "Sampler seed (default 42; env CONFORMAL_COHERENT_SEED)");
  cmd->add_option("--samples", f.samples, "Random samples per check (default 100)");
  cmd->add_option("--fd-step", f.fd_step, "Finite-difference step in [1e-9, 1e-2] (default 1e-5)");
  cmd->add_option("--out", f.out, "Output file (default stdout)");
  cmd->add_option("--format", f.format, "Output format: csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--config", f.config, "key=value configuration file");
}

RunConfig build_config(const CommonFlags& f, const char* env_seed, OutputFormat default_format) {
  RunConfig cfg;
  cfg.format = default_format;
  if (f.config) apply_config_file(*f.config, cfg);
  if (auto s = seed_from_env(env_seed)) cfg.seed = *s;
  if (f.seed) cfg.seed = *f.seed;
  if (f.samples) cfg.samples = *f.samples;
  if (f.fd_step) cfg.fd_step = *f.fd_step;
  if (f.out) cfg.output_path = *f.out;
  if (f.format) cfg.format = parse_format(*f.format);
  if (f.timing) cfg.timing = true;
  cfg.validate();
  return cfg;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output_path.empty()) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("cannot open output file '" + cfg.output_path + "'");
  file << text;
  if (!file) throw ConfigError("failed writing '" + cfg.output_path + "'");
}

// --- verify ----------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, const std::vector<std::string>& suites, std::ostream& out,
               std::ostream& err) {
  const std::vector<SuiteReport> reports = run_suites(suites, cfg);
  emit(cfg, cfg.format == OutputFormat::Json ? reports_to_json(reports) : reports_to_csv(reports), out);
  bool ok = true;
  for (const SuiteReport& r : reports) {
    if (!r.passed) {
      ok = false;
      err << "FAIL " << r.suite << ": residual " << format_double(r.max_residual) << " > tolerance "
          << format_double(r.tolerance) << "\n";
    }
  }
  return ok ? kExitPass : kExitFailure;
}

// --- sample-metric ---------------------------------------------------------

struct MetricArgs {
  std::string which = "rescaled";
  double L = 1.0;
  double t_min = -1.0, t_max = 1.0;
  int nt = 11;
  double r_min = 0.0, r_max = 2.0;
  int nr = 11;
};

int cmd_sample_metric(const RunConfig& cfg, const MetricArgs& a, std::ostream& out) {
  if (a.nt < 2 || a.nr < 2 || !(a.t_min < a.t_max) || !(a.r_min < a.r_max)) {
    throw Error(ErrorCode::InvalidGrid, "grid needs t_min < t_max, r_min < r_max and counts >= 2");
  }
  if (a.which == "induced" && !(a.L > 0.0)) throw ConfigError("L must be positive");
  const TRGrid grid{a.t_min, a.t_max, a.nt, a.r_min, a.r_max, a.nr};
  const char* keys[] = {"t", "r", "g_tt", "g_rr", "g_thth", "g_phph"};
  std::string csv = "t,r,g_tt,g_rr,g_thth,g_phph\n";
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const RadialPoint& p : grid.points(0.5 * std::numbers::pi, 0.0)) {
    const MetricSample g = a.which == "induced" ? induced_metric(a.L, p) : rescaled_metric(p);
    const double row[] = {p.t, p.r, g(0, 0), g(1, 1), g(2, 2), g(3, 3)};
    if (cfg.format == OutputFormat::Csv) {
      for (int k = 0; k < 6; ++k) csv += (k ? "," : "") + format_double(row[k]);
      csv += "\n";
    } else {
      nlohmann::ordered_json rec;
      for (int k = 0; k < 6; ++k) rec[keys[k]] = row[k];
      arr.push_back(std::move(rec));
    }
  }
  emit(cfg, cfg.format == OutputFormat::Csv ? csv : arr.dump(2) + "\n", out);
  return kExitPass;
}

// --- flow ------------------------------------------------------------------

struct FlowArgs {
  double t0 = 0.0;
  double r0 = 0.5;
  double alpha_max = 0.5;
  int steps = 50;
};

int cmd_flow(const RunConfig& cfg, const FlowArgs& a, std::ostream& out, std::ostream& err) {
  if (a.steps < 1) throw ConfigError("steps must be >= 1");
  const RadialPoint p0(a.t0, a.r0, 0.5 * std::numbers::pi, 0.0);
  const int rows = a.alpha_max == 0.0 ? 1 : a.steps + 1;
  std::string csv = "alpha,t,r\n";
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  RadialPoint prev = p0;
  double prev_alpha = 0.0;
  double worst = 0.0;
  for (int k = 0; k < rows; ++k) {
    const double alpha = rows == 1 ? 0.0 : a.alpha_max * k / a.steps;
    RadialPoint p;
    try {
      p = u1_flow(alpha, p0);
      // Composition spot check: one step from the previous sample.
      const RadialPoint stepped = u1_flow(alpha - prev_alpha, prev);
      const double scale = std::max({1.0, std::abs(p.t), p.r});
      worst = std::max(worst, std::max(std::abs(stepped.t - p.t), std::abs(stepped.r - p.r)) / scale);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ChartSingularity) throw;
      throw Error(ErrorCode::ChartSingularity,
                  "trajectory leaves the chart at alpha = " + format_double(alpha));
    }
    if (cfg.format == OutputFormat::Csv) {
      csv += format_double(alpha) + "," + format_double(p.t) + "," + format_double(p.r) + "\n";
    } else {
      arr.push_back({{"alpha", alpha}, {"t", p.t}, {"r", p.r}});
    }
    prev = p;
    prev_alpha = alpha;
  }
  emit(cfg, cfg.format == OutputFormat::Csv ? csv : arr.dump(2) + "\n", out);
  if (worst > 1e-10) {
    err << "flow composition check failed: " << format_double(worst) << "\n";
    return kExitFailure;
  }
  return kExitPass;
}

// --- quadrature ------------------------------------------------------------

struct QuadArgs {
  double q = 0.0, p = 1.0, dq = 1.0, dp = 0.0;
};

int cmd_quadrature(const RunConfig& cfg, const QuadArgs& a, std::ostream& out) {
  const HalfPlanePoint pt(a.q, a.p);
  const MetricPerturbation h{a.dq, a.dp};
  const double quad = dewitt_inner_product(pt, h, h);
  const double closed = dewitt_closed_form(pt, h);
  const double err = closed == 0.0 ? std::abs(quad) : std::abs(quad - closed) / std::abs(closed);
  if (cfg.format == OutputFormat::Csv) {
    emit(cfg,
         "q,p,dq,dp,quadrature,closed_form,relative_error\n" + format_double(a.q) + "," + format_double(a.p) +
             "," + format_double(a.dq) + "," + format_double(a.dp) + "," + format_double(quad) + "," +
             format_double(closed) + "," + format_double(err) + "\n",
         out);
  } else {
    nlohmann::ordered_json rec{{"q", a.q},           {"p", a.p},
                               {"dq", a.dq},         {"dp", a.dp},
                               {"quadrature", quad}, {"closed_form", closed},
                               {"relative_error", err}};
    emit(cfg, rec.dump(2) + "\n", out);
  }
  return err < 1e-8 ? kExitPass : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const char* env_seed) {
  CLI::App app{"Numerical verification of conformal coherent-state identities"};
  app.name("conformal-coherent");
  app.require_subcommand(1);

  CommonFlags verify_flags, metric_flags, flow_flags, quad_flags;
  std::vector<std::string> suites{"all"};
  MetricArgs metric;
  FlowArgs flow;
  QuadArgs quad;

  CLI::App* verify = app.add_subcommand("verify", "Run the seeded verification suites");
  add_common(verify, verify_flags);
  verify->add_option("--suites", suites, "Comma-separated: halfplane,disk,su22,tube,spacetime,all")
      ->delimiter(',');
  verify->add_flag("--timing", verify_flags.timing, "Record wall times (reports stop being byte-stable)");

  CLI::App* sample = app.add_subcommand("sample-metric", "Sample the induced or rescaled metric on a (t, r) grid");
  add_common(sample, metric_flags);
  sample->add_option("--which", metric.which, "induced or rescaled")->check(CLI::IsMember({"induced", "rescaled"}));
  sample->add_option("-L,--scale", metric.L, "Scale L of the induced metric");
  sample->add_option("--t-min", metric.t_min);
  sample->add_option("--t-max", metric.t_max);
  sample->add_option("--nt", metric.nt, "Number of t values (>= 2)");
  sample->add_option("--r-min", metric.r_min);
  sample->add_option("--r-max", metric.r_max);
  sample->add_option("--nr", metric.nr, "Number of r values (>= 2)");

  CLI::App* flow_cmd = app.add_subcommand("flow", "Sample a U(1) orbit in (t, r)");
  add_common(flow_cmd, flow_flags);
  flow_cmd->add_option("--t0", flow.t0);
  flow_cmd->add_option("--r0", flow.r0);
  flow_cmd->add_option("--alpha-max", flow.alpha_max);
  flow_cmd->add_option("--steps", flow.steps);

  CLI::App* quad_cmd = app.add_subcommand("quadrature", "Compare the DeWitt quadrature with its closed form");
  add_common(quad_cmd, quad_flags);
  quad_cmd->add_option("--q", quad.q);
  quad_cmd->add_option("--p", quad.p);
  quad_cmd->add_option("--dq", quad.dq);
  quad_cmd->add_option("--dp", quad.dp);

  std::vector<const char*> argv{"conformal-coherent"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) {
      return cmd_verify(build_config(verify_flags, env_seed, OutputFormat::Json), suites, out, err);
    }
    if (*sample) return cmd_sample_metric(build_config(metric_flags, env_seed, OutputFormat::Csv), metric, out);
    if (*flow_cmd) return cmd_flow(build_config(flow_flags, env_seed, OutputFormat::Csv), flow, out, err);
    if (*quad_cmd) return cmd_quadrature(build_config(quad_flags, env_seed, OutputFormat::Json), quad, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::QuadratureNotConverged:
      case ErrorCode::NumericalSingularity:
        return kExitFailure;
      default:
        return kExitUsage;
    }
  }
  return kExitUsage;
}

}  // namespace conformal::cli
