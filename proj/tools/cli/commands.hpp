#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace knightpaths::cli {

/// Exit codes shared by every subcommand.
enum exit_code : int {
    ok = 0,
    bad_input = 1,
    engine_disagreement = 2,
    check_failed = 3,
    fetch_failed = 4,
};

/// Entry point for the `knightpaths` binary; writes to `out`/`err` instead of
/// the process streams so tests can drive it in-process.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Downloads the b-file for `id` from `base_url` (e.g. "https://oeis.org").
/// Returns the body, or nullopt with `why` set.
std::optional<std::string> download_bfile(const std::string& base_url, const std::string& id, std::string& why);

/// Cache directory: the explicit flag, then $KNIGHTPATHS_OEIS_CACHE, then ./oeis-cache.
std::filesystem::path resolve_cache_dir(const std::string& flag);

}  // namespace knightpaths::cli
