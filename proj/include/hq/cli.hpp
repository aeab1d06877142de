#pragma once

/**
 * @file cli.hpp
 * @brief Command implementations behind the hq executable.
 *
 * Exit codes: 0 pass, 1 usage error (including exhausted budgets), 2 audit
 * failure or expected-value mismatch.
 */

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hq/io.hpp"

namespace hq::cli {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kCacheEnv = "HQ_CACHE_DIR";

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ReproduceOptions {
    std::optional<std::string> cache_dir;
    unsigned threads = 0;
};

struct ReproduceResult {
    io::json report;  // includes "checks" and "all_pass"
    bool all_pass = false;
};

/// Runs the named scenario (1 or 2); throws UsageError for anything else.
ReproduceResult reproduce(int example, const ReproduceOptions& opts = {});

/// Drops metadata.timing, for comparing runs.
io::json strip_timing(io::json report);

}  // namespace hq::cli
