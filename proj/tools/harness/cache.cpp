#include "cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <unistd.h>

#include "json.hpp"

namespace zetakit::cli {

namespace {

using nlohmann::json;

json to_json(const std::string& key, const ComputeOutcome& o) {
  json j{{"key", key},
         {"value", o.value},
         {"err_estimate", o.err_estimate},
         {"terms_used", o.terms_used}};
  if (o.value_imag) j["value_imag"] = *o.value_imag;
  if (o.closed_form) {
    j["closed_form"] = {{"formula", o.closed_form->formula},
                        {"value", o.closed_form->value},
                        {"residual", o.closed_form->residual}};
  }
  return j;
}

ComputeOutcome from_json(const json& j) {
  ComputeOutcome o;
  o.value = j.at("value").get<std::string>();
  o.err_estimate = j.at("err_estimate").get<std::string>();
  o.terms_used = j.at("terms_used").get<long>();
  o.converged = true;
  if (j.contains("value_imag")) o.value_imag = j.at("value_imag").get<std::string>();
  if (j.contains("closed_form")) {
    const json& c = j.at("closed_form");
    o.closed_form = ClosedForm{c.at("formula").get<std::string>(), c.at("value").get<std::string>(),
                               c.at("residual").get<std::string>()};
  }
  if (o.value.empty()) throw std::runtime_error("empty value");
  return o;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

ResultCache::ResultCache(std::filesystem::path dir, std::ostream* warn) : dir_(std::move(dir)), warn_(warn) {}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(key) << ".json";
  return dir_ / name.str();
}

std::optional<ComputeOutcome> ResultCache::get(const std::string& key) const {
  const auto path = path_for(key);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    json j = json::parse(in);
    if (j.at("key").get<std::string>() != key) return std::nullopt;
    return from_json(j);
  } catch (const std::exception&) {
    if (warn_) *warn_ << "zetakit: warning: ignoring corrupted cache entry " << path.string() << "\n";
    return std::nullopt;
  }
}

bool ResultCache::put(const std::string& key, const ComputeOutcome& outcome) const {
  if (!outcome.converged || outcome.value.empty()) return false;
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return false;
  const auto path = path_for(key);
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return false;
    out << to_json(key, outcome).dump(2) << "\n";
    if (!out.flush()) {
      std::filesystem::remove(tmp, ec);
      return false;
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    return false;
  }
  return true;
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv("ZETAKIT_CACHE_DIR"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

}  // namespace zetakit::cli
