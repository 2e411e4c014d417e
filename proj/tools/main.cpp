#include "commands.hpp"
#include "rho_cache.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <thread>

using namespace ginoe::cli;

int main(int argc, char** argv) {
    CLI::App app{"Real-eigenvalue statistics of real Gaussian random matrices"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    std::string out = "pretty";
    std::string cache_dir;
    bool no_cache = false;
    app.add_option("--out", out, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--exact-cap", cfg.exact_cap, "Largest n computed in exact arithmetic")->check(CLI::PositiveNumber);
    app.add_option("--float-cap", cfg.float_cap, "Largest n for the float probability table")->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", cache_dir, "Directory for cached rho matrices (env GINOE_CACHE_DIR)");
    app.add_flag("--no-cache", no_cache, "Do not read or write the rho cache");

    int n = 0;
    int q = 1;
    bool exact = false, use_float = false;
    auto* probs = app.add_subcommand("probs", "Probabilities p(n,k) of exactly k real eigenvalues");
    probs->add_option("n", n)->required();
    auto* exact_flag = probs->add_flag("--exact", exact, "Exact values in Q(sqrt2) (default)");
    probs->add_flag("--float", use_float, "Multiprecision float evaluation")->excludes(exact_flag);

    auto* genfunc = app.add_subcommand("genfunc", "Coefficients of the generating function");
    genfunc->add_option("n", n)->required();

    auto* moments = app.add_subcommand("moments", "Integer moment of the number of real eigenvalues");
    moments->add_option("n", n)->required();
    moments->add_option("q", q)->required();

    auto* en = app.add_subcommand("en", "Expected number of real eigenvalues");
    en->add_option("n", n)->required();

    VerifyOptions vopts;
    int vn = 0, vell = 0;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", vopts.suite)
        ->required()
        ->check(CLI::IsMember({"traces", "pfaffian-theorem", "strings", "projection", "one-pair"}));
    auto* vn_opt = verify->add_option("--n", vn, "Matrix size (suite default when omitted)");
    auto* vell_opt = verify->add_option("--ell", vell, "Number of complex pairs");
    verify->add_option("--seed", vopts.seed, "Seed for randomized instances");
    verify->add_option("--instances", vopts.instances, "Randomized instances to check");

    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    auto* mc = app.add_subcommand("mc", "Monte Carlo count of real eigenvalues");
    mc->add_option("n", n)->required();
    mc->add_option("samples", samples)->required();
    mc->add_option("seed", seed)->required();
    mc->add_option("--workers", workers, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    static const std::map<std::string, OutputFormat> formats = {
        {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"pretty", OutputFormat::pretty}};
    cfg.format = formats.at(out);
    if (!no_cache) cfg.cache_dir = cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir);

    try {
        Outcome result;
        if (*probs) result = cmd_probs(cfg, n, !use_float);
        else if (*genfunc) result = cmd_genfunc(cfg, n);
        else if (*moments) result = cmd_moments(cfg, n, q);
        else if (*en) result = cmd_en(cfg, n);
        else if (*verify) {
            if (*vn_opt) vopts.n = vn;
            if (*vell_opt) vopts.ell = vell;
            result = cmd_verify(cfg, vopts);
        } else result = cmd_mc(cfg, n, samples, seed, workers);
        std::cout << format_output(result.doc, cfg.format);
        return result.exit_code;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
