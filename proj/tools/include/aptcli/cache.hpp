#pragma once

// On-disk cache of class groups and basis tables. A cached document is only
// used after its invariants have been re-checked; anything else is
// recomputed and rewritten.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "apt/basis.hpp"
#include "aptcli/json_io.hpp"

namespace aptcli {

inline constexpr const char* kCacheVersion = "aptriples-cache/1";

/// --cache-dir, then $APTRIPLES_CACHE_DIR, $XDG_CACHE_HOME/aptriples,
/// $HOME/.cache/aptriples. Empty when none is available.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);

/// Full document for one field, pillar configuration and bound.
Json build_document(const apt::BasisBuilder& basis, std::int64_t bound);

/// Empty string when the document is sound for these parameters, otherwise
/// the first problem found.
std::string check_document(const Json& doc, const apt::Modulus& mod, const apt::PillarConfig& config,
                           std::int64_t bound);

std::filesystem::path document_path(const std::filesystem::path& dir, const apt::Modulus& mod,
                                    const apt::PillarConfig& config);

struct CacheOutcome {
  Json document;
  bool from_cache = false;
  std::string rejected;  // why an existing file was not used
};

/// Loads the document from `dir` if sound and large enough, otherwise
/// computes it and writes it back (best effort). An empty `dir` disables
/// the cache.
CacheOutcome obtain_document(const apt::BasisBuilder& basis, std::int64_t bound, const std::filesystem::path& dir);

}  // namespace aptcli
