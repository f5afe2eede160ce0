#include "table.hpp"

#include <atomic>
#include <exception>
#include <thread>

#include "zetakit/real.hpp"

namespace zetakit::cli {

namespace {

std::string trimmed(const Real& v) {
  std::string s = v.to_string(15);
  if (s.find('.') != std::string::npos && s.find('e') == std::string::npos) {
    s.erase(s.find_last_not_of('0') + 1);
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

}  // namespace

std::vector<std::string> parse_grid(std::string_view spec) {
  const auto a = spec.find(':');
  const auto b = a == std::string_view::npos ? a : spec.find(':', a + 1);
  if (b == std::string_view::npos || spec.find(':', b + 1) != std::string_view::npos) {
    throw UsageError("grid must look like start:stop:count, got '" + std::string(spec) + "'");
  }
  const Precision p = precision_for_digits(40);
  const Real start = parse_argument(spec.substr(0, a), p).value;
  const Real stop = parse_argument(spec.substr(a + 1, b - a - 1), p).value;
  const Argument count_arg = parse_argument(spec.substr(b + 1), p);
  if (!count_arg.value.is_integer() || count_arg.value < 1) throw UsageError("grid count must be a positive integer");
  const long count = count_arg.value.to_long();
  if (!(start > 0)) throw UsageError("grid start must be positive");
  if (stop < start) throw UsageError("grid stop must not be below start");
  if (count > 100000) throw UsageError("grid count is too large");
  std::vector<std::string> out;
  if (count == 1) {
    out.push_back(trimmed(start));
    return out;
  }
  const Real step = (stop - start) / (count - 1);
  for (long i = 0; i < count; ++i) out.push_back(trimmed(start + step * i));
  return out;
}

std::vector<TableRow> run_table(const ComputeRequest& base, const std::vector<std::string>& xs, unsigned workers) {
  std::vector<TableRow> rows(xs.size());
  std::vector<std::exception_ptr> failures(xs.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < xs.size(); i = next++) {
      try {
        ComputeRequest req = base;
        req.x = xs[i];
        rows[i] = TableRow{xs[i], compute(req)};
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(xs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return rows;
}

}  // namespace zetakit::cli
