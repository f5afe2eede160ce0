#pragma once

// File-per-key cache of converged compute results.
//
// Each entry is a small JSON file named by the FNV-1a hash of its key and
// stores the full key, so hash collisions read as misses. Writes go to a
// temporary file and are renamed into place. Digits are part of the key,
// so an entry computed at lower precision is never served for a
// higher-precision request. I/O failures and corrupted files degrade to
// a miss.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "compute.hpp"

namespace zetakit::cli {

class ResultCache {
 public:
  /// Warnings about unreadable entries go to `warn` (may be null).
  ResultCache(std::filesystem::path dir, std::ostream* warn);

  std::optional<ComputeOutcome> get(const std::string& key) const;
  /// Returns false when the entry could not be written.
  bool put(const std::string& key, const ComputeOutcome& outcome) const;

  std::filesystem::path path_for(const std::string& key) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::ostream* warn_;
};

/// Cache directory from the flag, else ZETAKIT_CACHE_DIR, else none.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

std::uint64_t fnv1a64(std::string_view data);

}  // namespace zetakit::cli
