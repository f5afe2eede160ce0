#include "output.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include <gmp.h>
#include <mpfr.h>

#include "json.hpp"

namespace zetakit::cli {

namespace {

using nlohmann::ordered_json;

ordered_json metadata_json(const RunMetadata& meta) {
  ordered_json m{{"timestamp", meta.timestamp}, {"elapsed_ms", meta.elapsed_ms}, {"versions", library_versions()}};
  if (!meta.cache.empty()) m["cache"] = meta.cache;
  return m;
}

ordered_json params_json(const ComputeRequest& req) {
  ordered_json p = ordered_json::object();
  if (req.quantity == Quantity::kGammaM) p["m"] = req.m;
  if (req.deriv != 0) p["deriv"] = req.deriv;
  if (req.s) p["s"] = *req.s;
  if (req.x) p["x"] = *req.x;
  if (req.angle) p["angle"] = *req.angle;
  return p;
}

ordered_json outcome_json(const ComputeOutcome& out) {
  ordered_json j;
  j["value"] = out.value.empty() ? ordered_json(nullptr) : ordered_json(out.value);
  if (out.value_imag) j["value_imag"] = *out.value_imag;
  j["err_estimate"] = out.err_estimate.empty() ? ordered_json(nullptr) : ordered_json(out.err_estimate);
  j["terms_used"] = out.terms_used;
  j["converged"] = out.converged;
  if (!out.error.empty()) j["error"] = out.error;
  return j;
}

}  // namespace

RunMetadata start_metadata() {
  RunMetadata m;
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  m.timestamp = buf;
  return m;
}

std::string library_versions() {
  return std::string("zetakit 0.1.0, mpfr ") + mpfr_get_version() + ", gmp " + gmp_version;
}

std::string render_compute(const ComputeRequest& req, const ComputeOutcome& out, const RunMetadata& meta) {
  ordered_json j;
  j["quantity"] = std::string(quantity_name(req.quantity));
  j["params"] = params_json(req);
  j["method"] = req.method;
  j["digits"] = req.digits;
  j["max_terms"] = req.max_terms;
  const ordered_json result = outcome_json(out);
  for (const auto& [k, v] : result.items()) j[k] = v;
  if (out.closed_form) {
    j["closed_form"] = {{"formula", out.closed_form->formula},
                        {"value", out.closed_form->value},
                        {"residual", out.closed_form->residual}};
  }
  j["metadata"] = metadata_json(meta);
  return j.dump(2) + "\n";
}

std::string render_report_file(const SuiteRun& run, long digits, const RunMetadata& meta) {
  const int sig = static_cast<int>(digits);
  ordered_json ids = ordered_json::array();
  long passed = 0, failed = 0, xfail = 0, unexpected = 0;
  for (const auto& r : run.reports) {
    ordered_json e{{"id", r.id},
                   {"lhs", r.lhs.to_string(sig)},
                   {"rhs", r.rhs.to_string(sig)},
                   {"residual", r.residual.to_string(6)},
                   {"tolerance", r.tolerance.to_string(3)},
                   {"pass", r.pass}};
    if (r.x) e["x"] = r.x->to_string(sig);
    if (!r.meta.empty()) e["meta"] = r.meta;
    if (r.expected_failure()) e["paper_discrepancy"] = r.discrepancy;
    ids.push_back(std::move(e));
    if (r.pass) ++passed;
    else ++failed;
    if (r.expected_failure() && !r.pass) ++xfail;
    if (!r.as_expected()) ++unexpected;
  }
  ordered_json errs = ordered_json::array();
  for (const auto& e : run.errors) errs.push_back({{"check", e.check}, {"message", e.message}});
  ordered_json j;
  j["suites"] = run.suites;
  j["digits"] = digits;
  j["identities"] = std::move(ids);
  j["errors"] = std::move(errs);
  j["summary"] = {{"total", static_cast<long>(run.reports.size())},
                  {"passed", passed},
                  {"failed", failed},
                  {"expected_failures", xfail},
                  {"unexpected", unexpected},
                  {"kernel_errors", static_cast<long>(run.errors.size())}};
  j["metadata"] = metadata_json(meta);
  return j.dump(2) + "\n";
}

std::string render_report_text(const SuiteRun& run) {
  std::ostringstream out;
  for (const auto& r : run.reports) {
    const char* tag = r.pass ? "PASS " : (r.expected_failure() ? "XFAIL" : "FAIL ");
    out << tag << "  " << r.id << "  residual=" << r.residual.to_string(3) << "  tol=" << r.tolerance.to_string(3);
    if (r.expected_failure()) out << "  (paper discrepancy: " << r.discrepancy << ")";
    out << "\n";
  }
  for (const auto& e : run.errors) out << "ERROR  " << e.check << "  " << e.message << "\n";
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string render_table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "x,value,value_imag,err_estimate,terms_used,converged\r\n";
  for (const auto& r : rows) {
    out << csv_field(r.x) << ',' << csv_field(r.outcome.value) << ',' << csv_field(r.outcome.value_imag.value_or(""))
        << ',' << csv_field(r.outcome.err_estimate) << ',' << r.outcome.terms_used << ','
        << (r.outcome.converged ? "true" : "false") << "\r\n";
  }
  return out.str();
}

std::string render_table_json(const ComputeRequest& base, const std::vector<TableRow>& rows, const RunMetadata& meta) {
  ordered_json j;
  j["quantity"] = std::string(quantity_name(base.quantity));
  ordered_json params = params_json(base);
  params.erase("x");
  j["params"] = params;
  j["method"] = base.method;
  j["digits"] = base.digits;
  ordered_json out = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json row{{"x", r.x}};
    const ordered_json result = outcome_json(r.outcome);
    for (const auto& [k, v] : result.items()) row[k] = v;
    out.push_back(std::move(row));
  }
  j["rows"] = std::move(out);
  j["metadata"] = metadata_json(meta);
  return j.dump(2) + "\n";
}

}  // namespace zetakit::cli
