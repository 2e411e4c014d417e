#include "rho_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ginoe::cli {

namespace {

constexpr const char* kMagic = "ginoe-rho v1";

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

std::string serialize_rho(const RhoMatrix& rho) {
    std::ostringstream os;
    const std::size_t dim = rho.entries.rows();
    os << kMagic << " n=" << rho.n << " parity=" << parity_name(rho.parity) << " dim=" << dim << '\n';
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) os << i << ' ' << j << ' ' << render(rho.entries(i, j)) << '\n';
    return os.str();
}

RhoMatrix parse_rho(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind(kMagic, 0) != 0) throw std::runtime_error("not a rho cache file");
    RhoMatrix rho;
    std::string parity;
    std::size_t dim = 0;
    {
        std::istringstream header(line.substr(std::string(kMagic).size()));
        std::string field;
        while (header >> field) {
            const auto eq = field.find('=');
            if (eq == std::string::npos) throw std::runtime_error("bad rho cache header");
            const std::string key = field.substr(0, eq), value = field.substr(eq + 1);
            if (key == "n") rho.n = std::stoi(value);
            else if (key == "parity") parity = value;
            else if (key == "dim") dim = std::stoul(value);
        }
    }
    if (parity != "even" && parity != "odd") throw std::runtime_error("bad rho cache parity");
    rho.parity = parity == "even" ? Parity::even : Parity::odd;
    rho.entries = Matrix<QSqrt2>(dim, dim);
    std::size_t seen = 0;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::size_t i = 0, j = 0;
        if (!(row >> i >> j) || i >= dim || j >= dim) throw std::runtime_error("bad rho cache entry");
        std::string value;
        std::getline(row >> std::ws, value);
        rho.entries(i, j) = parse_qsqrt2(value);
        ++seen;
    }
    if (seen != dim * dim) throw std::runtime_error("truncated rho cache file");
    return rho;
}

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("GINOE_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "ginoe";
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "ginoe";
    return std::filesystem::temp_directory_path() / "ginoe";
}

RhoLookup load_or_compute_rho(int n, const std::optional<std::filesystem::path>& dir) {
    if (!dir) return {rho_matrix(n), false};
    const auto file = *dir / ("rho_" + std::to_string(n) + ".txt");
    if (std::filesystem::exists(file)) {
        try {
            RhoMatrix cached = parse_rho(read_file(file));
            if (cached.n == n) return {std::move(cached), true};
        } catch (const std::exception&) {
            // Unreadable entries are recomputed and overwritten below.
        }
    }
    RhoMatrix fresh = rho_matrix(n);
    std::filesystem::create_directories(*dir);
    const auto tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << serialize_rho(fresh);
    }
    std::filesystem::rename(tmp, file);
    return {std::move(fresh), false};
}

}  // namespace ginoe::cli
