#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "harness/cache.hpp"
#include "harness/compute.hpp"
#include "harness/output.hpp"
#include "harness/suites.hpp"
#include "harness/table.hpp"
#include "json.hpp"
#include "zetakit/errors.hpp"

using namespace zetakit;
using namespace zetakit::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("zetakit-test-" + std::to_string(::getpid()) + "-" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

ComputeRequest gamma_request(const std::string& x, long digits = 20) {
  ComputeRequest r;
  r.quantity = Quantity::kGammaM;
  r.m = 0;
  r.x = x;
  r.digits = digits;
  return normalized(r);
}

}  // namespace

TEST(Parse, Quantities) {
  for (auto name : quantity_names()) EXPECT_EQ(quantity_name(parse_quantity(name)), name);
  EXPECT_THROW(parse_quantity("zeta2"), UsageError);
  EXPECT_EQ(methods_for(Quantity::kGammaM).front(), "hasse");
  EXPECT_EQ(methods_for(Quantity::kSondowGamma).size(), 3u);
}

TEST(Parse, Arguments) {
  const Precision p(128);
  const auto dec = parse_argument("0.25", p);
  EXPECT_FALSE(dec.exact.has_value());
  EXPECT_EQ(dec.value.to_double(), 0.25);
  const auto frac = parse_argument("2/6", p);
  ASSERT_TRUE(frac.exact.has_value());
  EXPECT_EQ(*frac.exact, Rational(1, 3));
  EXPECT_NEAR(frac.value.to_double(), 1.0 / 3, 1e-16);
  const auto big = parse_argument("7/2", p);
  EXPECT_FALSE(big.exact.has_value());
  EXPECT_EQ(big.value.to_double(), 3.5);
  EXPECT_THROW(parse_argument("1/0", p), UsageError);
  EXPECT_THROW(parse_argument("abc", p), UsageError);
  EXPECT_THROW(parse_argument("1/2/3", p), UsageError);
  EXPECT_THROW(parse_argument("", p), UsageError);
}

TEST(Parse, RequestNormalization) {
  ComputeRequest r;
  r.quantity = Quantity::kZeta;
  r.s = "2";
  r.x = "1";
  EXPECT_EQ(normalized(r).method, "hasse");
  r.digits = 9;
  EXPECT_THROW(normalized(r), UsageError);
  r.digits = 201;
  EXPECT_THROW(normalized(r), UsageError);
  r.digits = 200;
  EXPECT_NO_THROW(normalized(r));
  r.digits = 30;
  r.method = "bell";
  EXPECT_THROW(normalized(r), UsageError);
  ComputeRequest sondow;
  sondow.quantity = Quantity::kSondowGamma;
  EXPECT_THROW(normalized(sondow), UsageError);
  sondow.x = "0.5";
  sondow.angle = "1/2";
  EXPECT_THROW(normalized(sondow), UsageError);
}

TEST(Compute, EulerConstantAndClosedForm) {
  auto r = gamma_request("1", 30);
  const auto out = compute(r);
  EXPECT_TRUE(out.converged);
  EXPECT_EQ(out.value.substr(0, 32), "0.577215664901532860606512090082");
  ComputeRequest half;
  half.quantity = Quantity::kGammaM;
  half.m = 1;
  half.x = "1/2";
  const auto h = compute(normalized(half));
  ASSERT_TRUE(h.closed_form.has_value());
  EXPECT_EQ(h.closed_form->formula, "gamma_1 - log(2)^2 - 2 gamma log(2)");
  EXPECT_EQ(h.value.substr(0, 12), "-1.353459680");
}

TEST(Compute, NonConvergenceIsReportedNotThrown) {
  auto r = gamma_request("1", 30);
  r.max_terms = 3;
  const auto out = compute(r);
  EXPECT_FALSE(out.converged);
  EXPECT_FALSE(out.error.empty());
}

TEST(Compute, CacheKeyIncludesEveryInput) {
  const auto a = gamma_request("1", 20), b = gamma_request("1", 30), c = gamma_request("2", 20);
  EXPECT_NE(cache_key(a), cache_key(b));
  EXPECT_NE(cache_key(a), cache_key(c));
  EXPECT_EQ(cache_key(a), cache_key(gamma_request("1", 20)));
}

TEST(Cache, RoundTripAndPrecisionRule) {
  TempDir dir;
  ResultCache cache(dir.path, nullptr);
  const auto req20 = gamma_request("1", 20);
  const auto out = compute(req20);
  EXPECT_FALSE(cache.get(cache_key(req20)).has_value());
  ASSERT_TRUE(cache.put(cache_key(req20), out));
  const auto hit = cache.get(cache_key(req20));
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->value, out.value);
  EXPECT_EQ(hit->err_estimate, out.err_estimate);
  EXPECT_EQ(hit->terms_used, out.terms_used);
  EXPECT_FALSE(cache.get(cache_key(gamma_request("1", 30))).has_value());
}

TEST(Cache, UnconvergedResultsAreNotStored) {
  TempDir dir;
  ResultCache cache(dir.path, nullptr);
  ComputeOutcome bad;
  bad.value = "1";
  bad.converged = false;
  EXPECT_FALSE(cache.put("k", bad));
  EXPECT_FALSE(cache.get("k").has_value());
}

TEST(Cache, CorruptedEntryWarnsAndMisses) {
  TempDir dir;
  std::ostringstream warn;
  ResultCache cache(dir.path, &warn);
  const auto req = gamma_request("1", 20);
  ASSERT_TRUE(cache.put(cache_key(req), compute(req)));
  std::ofstream(cache.path_for(cache_key(req)), std::ios::trunc) << "{ not json";
  EXPECT_FALSE(cache.get(cache_key(req)).has_value());
  EXPECT_NE(warn.str().find("corrupted cache entry"), std::string::npos);
}

TEST(Cache, DirectoryResolution) {
  ::setenv("ZETAKIT_CACHE_DIR", "/tmp/from-env", 1);
  EXPECT_EQ(resolve_cache_dir(std::nullopt), fs::path("/tmp/from-env"));
  EXPECT_EQ(resolve_cache_dir(std::string("/tmp/flag")), fs::path("/tmp/flag"));
  ::unsetenv("ZETAKIT_CACHE_DIR");
  EXPECT_FALSE(resolve_cache_dir(std::nullopt).has_value());
  EXPECT_NE(fnv1a64("a"), fnv1a64("b"));
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
}

TEST(Grid, Parsing) {
  const auto g = parse_grid("0.1:0.9:9");
  ASSERT_EQ(g.size(), 9u);
  EXPECT_EQ(g.front(), "0.1");
  EXPECT_EQ(g[4], "0.5");
  EXPECT_EQ(g.back(), "0.9");
  EXPECT_EQ(parse_grid("1:5:5"), (std::vector<std::string>{"1", "2", "3", "4", "5"}));
  EXPECT_EQ(parse_grid("2:3:1").size(), 1u);
  for (const char* bad : {"", "1:2", "0:1:3", "-1:1:3", "2:1:3", "1:2:0", "1:2:1.5", "a:b:c", "1:2:3:4"}) {
    EXPECT_THROW(parse_grid(bad), UsageError) << bad;
  }
}

TEST(Table, RowsInGridOrderWithParallelWorkers) {
  ComputeRequest base;
  base.quantity = Quantity::kDigamma;
  base.digits = 20;
  base.x = "1";
  base = normalized(base);
  const auto rows = run_table(base, parse_grid("1:5:5"), 4);
  ASSERT_EQ(rows.size(), 5u);
  // psi(5) = -gamma + 25/12
  EXPECT_EQ(rows[0].x, "1");
  EXPECT_EQ(rows[0].outcome.value.substr(0, 10), "-0.5772156");
  EXPECT_EQ(rows[4].outcome.value.substr(0, 10), "1.50611766");
  const auto serial = run_table(base, parse_grid("1:5:5"), 1);
  for (size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i].outcome.value, serial[i].outcome.value);
}

TEST(Csv, QuotingAndLayout) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
  TableRow row{"0.5", {}};
  row.outcome.value = "1.5";
  row.outcome.err_estimate = "1e-20";
  row.outcome.terms_used = 7;
  row.outcome.converged = true;
  EXPECT_EQ(render_table_csv({row}),
            "x,value,value_imag,err_estimate,terms_used,converged\r\n0.5,1.5,,1e-20,7,true\r\n");
}

TEST(Output, ComputeDocumentIsDeterministicOutsideMetadata) {
  const auto req = gamma_request("1", 20);
  const auto out = compute(req);
  RunMetadata m1{"2020-01-01T00:00:00Z", 1.0, "miss"}, m2{"2021-01-01T00:00:00Z", 99.0, "hit"};
  auto a = nlohmann::json::parse(render_compute(req, out, m1));
  auto b = nlohmann::json::parse(render_compute(req, out, m2));
  EXPECT_NE(a["metadata"], b["metadata"]);
  a.erase("metadata");
  b.erase("metadata");
  EXPECT_EQ(a, b);
  for (const char* key : {"quantity", "params", "method", "value", "err_estimate", "terms_used", "digits"}) {
    EXPECT_TRUE(a.contains(key)) << key;
  }
  EXPECT_TRUE(a["value"].is_string());
}

TEST(Suites, Expansion) {
  const auto all = expand_suites({"all"});
  EXPECT_EQ(all.size(), suite_names().size());
  EXPECT_EQ(expand_suites({"adamchik,sondow"}), (std::vector<std::string>{"adamchik", "sondow"}));
  EXPECT_THROW(expand_suites({}), UsageError);
  EXPECT_THROW(expand_suites({""}), UsageError);
  EXPECT_THROW(expand_suites({"nope"}), UsageError);
}

TEST(Suites, AdamchikReportSortedWithResiduals) {
  const auto run = run_suites(expand_suites({"adamchik"}), config_for_digits(20));
  EXPECT_TRUE(run.all_as_expected());
  EXPECT_TRUE(run.errors.empty());
  std::vector<std::string> ids;
  for (const auto& r : run.reports) ids.push_back(r.id);
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  for (const char* frac : {"1-3", "1-4", "2-5"}) {
    const bool found = std::any_of(ids.begin(), ids.end(),
                                   [&](const std::string& id) { return id.find(std::string("adamchik-reflection-") + frac) == 0; });
    EXPECT_TRUE(found) << frac;
  }
  const auto doc = nlohmann::json::parse(render_report_file(run, 20, start_metadata()));
  ASSERT_TRUE(doc["identities"].is_array());
  for (const auto& entry : doc["identities"]) EXPECT_TRUE(entry["residual"].is_string());
  EXPECT_NE(render_report_text(run).find("PASS"), std::string::npos);
}
