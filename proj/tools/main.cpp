#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "harness/cache.hpp"
#include "harness/compute.hpp"
#include "harness/output.hpp"
#include "harness/suites.hpp"
#include "harness/table.hpp"
#include "zetakit/errors.hpp"

namespace {

using namespace zetakit::cli;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitKernel = 3;

struct CommonFlags {
  long digits = 30;
  long max_terms = 1'000'000;
  std::string method;
  bool json = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--digits", f.digits, "Decimal digits of working precision (10..200)");
  cmd->add_option("--max-terms", f.max_terms, "Upper bound on series terms");
  cmd->add_option("--method", f.method, "Evaluation route");
  cmd->add_flag("--json", f.json, "JSON output");
}

struct PointFlags {
  std::string quantity;
  long m = 0;
  int deriv = 0;
  std::optional<std::string> s, x, angle;
};

void add_point(CLI::App* cmd, PointFlags& f, bool with_x) {
  cmd->add_option("quantity", f.quantity, "gamma_m, zeta, zeta_prime0, zeta_doubleprime0, digamma, log_gamma, sondow_gamma")
      ->required();
  cmd->add_option("-m", f.m, "Index of gamma_m");
  cmd->add_option("--deriv", f.deriv, "Order of the s-derivative (zeta, hasse)");
  cmd->add_option("-s", f.s, "Argument s (decimal or p/q)");
  if (with_x) {
    cmd->add_option("-x", f.x, "Argument x (decimal or p/q)");
    cmd->add_option("--angle", f.angle, "sondow_gamma at exp(i pi p/q), given as p/q");
  }
}

ComputeRequest make_request(const PointFlags& pf, const CommonFlags& cf) {
  ComputeRequest req;
  req.quantity = parse_quantity(pf.quantity);
  req.m = pf.m;
  req.deriv = pf.deriv;
  req.s = pf.s;
  req.x = pf.x;
  req.angle = pf.angle;
  req.method = cf.method;
  req.digits = cf.digits;
  req.max_terms = cf.max_terms;
  return req;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  return static_cast<bool>(out.flush());
}

int run_compute(const PointFlags& pf, const CommonFlags& cf, const std::optional<std::string>& cache_flag,
                bool no_cache) {
  const auto t0 = std::chrono::steady_clock::now();
  ComputeRequest req = normalized(make_request(pf, cf));
  RunMetadata meta = start_metadata();
  std::optional<ResultCache> cache;
  if (!no_cache) {
    if (auto dir = resolve_cache_dir(cache_flag)) cache.emplace(*dir, &std::cerr);
  }
  const std::string key = cache_key(req);
  std::optional<ComputeOutcome> out;
  if (cache) out = cache->get(key);
  meta.cache = !cache ? "disabled" : out ? "hit" : "miss";
  if (!out) {
    out = compute(req);
    if (cache && out->converged && !cache->put(key, *out)) {
      std::cerr << "zetakit: warning: could not write cache entry in " << cache->dir().string() << "\n";
    }
  }
  meta.elapsed_ms = elapsed_ms(t0);
  std::cout << render_compute(req, *out, meta);
  if (!out->converged) {
    std::cerr << "zetakit: " << (out->error.empty() ? "did not converge" : out->error) << "\n";
    return kExitKernel;
  }
  return kExitOk;
}

int run_validate(const std::vector<std::string>& suites, const CommonFlags& cf, const std::string& out_path) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::string> names = expand_suites(suites);
  if (cf.digits < 10 || cf.digits > 200) throw UsageError("--digits must lie in [10, 200]");
  zetakit::PrecisionConfig cfg = zetakit::config_for_digits(cf.digits);
  cfg.max_terms = cf.max_terms;
  cfg.validate();
  RunMetadata meta = start_metadata();
  SuiteRun run = run_suites(names, cfg);
  meta.elapsed_ms = elapsed_ms(t0);
  const std::string doc = render_report_file(run, cf.digits, meta);
  if (!out_path.empty() && !write_file(out_path, doc)) {
    std::cerr << "zetakit: cannot write " << out_path << "\n";
    return kExitKernel;
  }
  if (cf.json) {
    std::cout << doc;
  } else {
    std::cout << render_report_text(run);
    long ok = 0;
    for (const auto& r : run.reports) ok += r.as_expected() ? 1 : 0;
    std::cout << ok << "/" << run.reports.size() << " identities as expected, " << run.errors.size()
              << " kernel errors\n";
  }
  if (!run.errors.empty()) return kExitKernel;
  return run.all_as_expected() ? kExitOk : kExitFailed;
}

int run_table_cmd(const PointFlags& pf, const CommonFlags& cf, const std::string& grid, std::string format,
                  const std::string& out_path, unsigned workers) {
  const auto t0 = std::chrono::steady_clock::now();
  if (cf.json) format = "json";
  if (format != "csv" && format != "json") throw UsageError("--format must be csv or json");
  const std::vector<std::string> xs = parse_grid(grid);
  PointFlags probe = pf;
  probe.x = xs.front();
  ComputeRequest base = normalized(make_request(probe, cf));
  RunMetadata meta = start_metadata();
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<TableRow> rows = run_table(base, xs, workers);
  meta.elapsed_ms = elapsed_ms(t0);
  const std::string doc = format == "csv" ? render_table_csv(rows) : render_table_json(base, rows, meta);
  if (out_path.empty()) {
    std::cout << doc;
  } else if (!write_file(out_path, doc)) {
    std::cerr << "zetakit: cannot write " << out_path << "\n";
    return kExitKernel;
  }
  for (const auto& r : rows) {
    if (!r.outcome.converged) return kExitKernel;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zetakit: Hurwitz zeta, Stieltjes constants and related identities"};
  app.require_subcommand(1);

  CommonFlags compute_common;
  PointFlags compute_point;
  std::optional<std::string> cache_dir;
  bool no_cache = false;
  auto* compute_cmd = app.add_subcommand("compute", "Evaluate one quantity and print a JSON document");
  add_point(compute_cmd, compute_point, true);
  add_common(compute_cmd, compute_common);
  compute_cmd->add_option("--cache-dir", cache_dir, "Result cache directory (overrides ZETAKIT_CACHE_DIR)");
  compute_cmd->add_flag("--no-cache", no_cache, "Bypass the result cache");

  CommonFlags validate_common;
  validate_common.digits = 20;
  std::vector<std::string> suites;
  std::string validate_out;
  bool list_suites = false;
  auto* validate_cmd = app.add_subcommand("validate", "Run identity suites and write a JSON report");
  add_common(validate_cmd, validate_common);
  validate_cmd->add_option("--suite", suites, "Suite names (comma separated) or 'all'")->expected(0, -1);
  validate_cmd->add_option("--out", validate_out, "Path of the JSON report");
  validate_cmd->add_flag("--list", list_suites, "List suite names");

  CommonFlags table_common;
  PointFlags table_point;
  std::string grid, format = "csv", table_out;
  unsigned workers = 0;
  auto* table_cmd = app.add_subcommand("table", "Tabulate a quantity over an x grid");
  add_point(table_cmd, table_point, false);
  add_common(table_cmd, table_common);
  table_cmd->add_option("--grid", grid, "start:stop:count")->required();
  table_cmd->add_option("--format", format, "csv or json");
  table_cmd->add_option("--out", table_out, "Output path (default: standard output)");
  table_cmd->add_option("--workers", workers, "Worker threads (default: hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (compute_cmd->parsed()) return run_compute(compute_point, compute_common, cache_dir, no_cache);
    if (validate_cmd->parsed()) {
      if (list_suites) {
        for (auto n : suite_names()) std::cout << n << "\n";
        return kExitOk;
      }
      if (validate_cmd->count("--suite") == 0) suites = {"all"};
      return run_validate(suites, validate_common, validate_out);
    }
    if (table_cmd->parsed()) {
      return run_table_cmd(table_point, table_common, grid, format, table_out, workers);
    }
  } catch (const UsageError& e) {
    std::cerr << "zetakit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const zetakit::DomainError& e) {
    std::cerr << "zetakit: domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const zetakit::Error& e) {
    std::cerr << "zetakit: " << e.what() << "\n";
    return kExitKernel;
  }
  return kExitUsage;
}
