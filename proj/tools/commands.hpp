#pragma once

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

namespace ginoe::cli {

using json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 2;
inline constexpr int kExitInvalidInput = 3;

enum class OutputFormat { json, csv, pretty };

struct Config {
    int exact_cap = 20;
    int float_cap = 64;
    std::optional<std::filesystem::path> cache_dir;  // empty disables the rho cache
    OutputFormat format = OutputFormat::pretty;
};

/// Rejected arguments; maps to exit code 3.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A command's document: scalar metadata plus a "rows" array of flat-ish records.
struct Outcome {
    json doc;
    int exit_code = kExitOk;
};

Outcome cmd_probs(const Config& cfg, int n, bool exact);
Outcome cmd_genfunc(const Config& cfg, int n);
Outcome cmd_moments(const Config& cfg, int n, int q);
Outcome cmd_en(const Config& cfg, int n);

struct VerifyOptions {
    std::string suite;
    std::optional<int> n;
    std::optional<int> ell;
    std::uint64_t seed = 1;
    int instances = 1;
};
Outcome cmd_verify(const Config& cfg, const VerifyOptions& opts);

Outcome cmd_mc(const Config& cfg, int n, std::int64_t samples, std::uint64_t seed, int workers);

/// JSON text, CSV of the rows (nested keys joined with '.'), or an aligned table.
std::string format_output(const json& doc, OutputFormat format);

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

}  // namespace ginoe::cli
