#pragma once

#include "ginoe/kernel.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace ginoe::cli {

/// Text form: a header line, then one "row col value" line per entry in the exact grammar.
std::string serialize_rho(const RhoMatrix& rho);
RhoMatrix parse_rho(const std::string& text);

/// Cache directory: explicit path, else $GINOE_CACHE_DIR, else $XDG_CACHE_HOME/ginoe or ~/.cache/ginoe.
std::filesystem::path default_cache_dir();

struct RhoLookup {
    RhoMatrix rho;
    bool from_cache = false;
};

/// Reads rho_<n>.txt from dir when present, otherwise computes and stores it.
/// No directory means no caching.
RhoLookup load_or_compute_rho(int n, const std::optional<std::filesystem::path>& dir);

}  // namespace ginoe::cli
