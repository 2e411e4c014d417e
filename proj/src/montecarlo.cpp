#include "ginoe/montecarlo.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace ginoe {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t splitmix(std::uint64_t x) {
    x += kGolden;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform in (0, 1].
double unit_open(std::uint64_t bits) { return (static_cast<double>(bits >> 11) + 1.0) * 0x1p-53; }

template <class Fn>
void parallel_chunks(std::int64_t samples, int workers, Fn&& body) {
    workers = static_cast<int>(std::min<std::int64_t>(workers, std::max<std::int64_t>(samples, 1)));
    std::vector<std::thread> threads;
    const std::int64_t chunk = samples / workers;
    const std::int64_t extra = samples % workers;
    std::int64_t begin = 0;
    for (int w = 0; w < workers; ++w) {
        const std::int64_t end = begin + chunk + (w < extra ? 1 : 0);
        threads.emplace_back([&body, w, begin, end] { body(w, begin, end); });
        begin = end;
    }
    for (auto& t : threads) t.join();
}

void check_config(const MCConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("n must be positive");
    if (cfg.samples < 0) throw std::invalid_argument("samples must be non-negative");
    if (cfg.workers < 1) throw std::invalid_argument("workers must be positive");
}

}  // namespace

double MCRunResult::frequency(int k) const {
    const auto it = counts.find(k);
    return it == counts.end() || samples == 0 ? 0.0 : static_cast<double>(it->second) / static_cast<double>(samples);
}

Eigen::MatrixXd sample_matrix(int n, std::uint64_t master_seed, std::uint64_t sample_index) {
    const std::uint64_t key = splitmix(splitmix(master_seed) ^ (sample_index * kGolden));
    Eigen::MatrixXd m(n, n);
    const int entries = n * n;
    for (int e = 0, pair = 0; e < entries; ++pair) {
        const double u1 = unit_open(splitmix(key + 2 * static_cast<std::uint64_t>(pair)));
        const double u2 = unit_open(splitmix(key + 2 * static_cast<std::uint64_t>(pair) + 1));
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        m(e / n, e % n) = r * std::cos(angle);
        ++e;
        if (e < entries) {
            m(e / n, e % n) = r * std::sin(angle);
            ++e;
        }
    }
    return m;
}

std::vector<double> real_eigenvalues(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
    Eigen::RealSchur<Eigen::MatrixXd> schur(m, false);
    if (schur.info() != Eigen::Success) throw std::runtime_error("real Schur iteration did not converge");
    const Eigen::MatrixXd& t = schur.matrixT();
    std::vector<double> out;
    const Eigen::Index n = t.rows();
    for (Eigen::Index i = 0; i < n;) {
        if (i + 1 < n && t(i + 1, i) != 0.0) {
            i += 2;
        } else {
            out.push_back(t(i, i));
            ++i;
        }
    }
    return out;
}

int count_real_eigs(const Eigen::MatrixXd& m) { return static_cast<int>(real_eigenvalues(m).size()); }

MCRunResult run_mc(const MCConfig& cfg) {
    check_config(cfg);
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::vector<std::int64_t>> partial(cfg.workers, std::vector<std::int64_t>(cfg.n + 1, 0));
    parallel_chunks(cfg.samples, cfg.workers, [&](int w, std::int64_t begin, std::int64_t end) {
        for (std::int64_t s = begin; s < end; ++s)
            ++partial[w][count_real_eigs(sample_matrix(cfg.n, cfg.master_seed, static_cast<std::uint64_t>(s)))];
    });
    MCRunResult out;
    out.n = cfg.n;
    out.samples = cfg.samples;
    out.seed = cfg.master_seed;
    for (const auto& p : partial)
        for (int k = 0; k <= cfg.n; ++k)
            if (p[k] != 0) out.counts[k] += p[k];
    out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::vector<std::int64_t> real_eigenvalue_histogram(const MCConfig& cfg, const std::vector<double>& edges) {
    check_config(cfg);
    if (edges.size() < 2 || !std::is_sorted(edges.begin(), edges.end()))
        throw std::invalid_argument("need at least two increasing bin edges");
    std::vector<std::vector<std::int64_t>> partial(cfg.workers, std::vector<std::int64_t>(edges.size() + 1, 0));
    parallel_chunks(cfg.samples, cfg.workers, [&](int w, std::int64_t begin, std::int64_t end) {
        for (std::int64_t s = begin; s < end; ++s)
            for (double x : real_eigenvalues(sample_matrix(cfg.n, cfg.master_seed, static_cast<std::uint64_t>(s)))) {
                const auto cell = std::upper_bound(edges.begin(), edges.end(), x) - edges.begin();
                ++partial[w][cell];
            }
    });
    std::vector<std::int64_t> out(edges.size() + 1, 0);
    for (const auto& p : partial)
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += p[j];
    return out;
}

double density_real(int n, double x) {
    if (n < 2) throw std::invalid_argument("densities need n >= 2");
    const double x2 = x * x;
    const double a = (n - 1) / 2.0;
    // Second term assembled in logs so large n does not overflow the gamma functions.
    const double log_tail = (n / 2.0 - 1.5) * std::log(2.0) - std::lgamma(n - 1.0) + (n - 1) * std::log(std::fabs(x)) -
                            x2 / 2.0 + std::lgamma(a) + std::log(boost::math::gamma_p(a, x2 / 2.0));
    return (boost::math::gamma_q(n - 1.0, x2) + std::exp(log_tail)) / std::sqrt(2.0 * std::numbers::pi);
}

double density_complex(int n, double x, double y) {
    if (n < 2) throw std::invalid_argument("densities need n >= 2");
    const double ay = std::fabs(y);
    if (ay == 0) return 0;
    const double root2 = std::numbers::sqrt2;
    // e^{2y^2} erfc(sqrt2 y) loses nothing to overflow below y ~ 18; beyond it use the asymptotic series.
    double scaled;
    if (ay < 18) {
        scaled = std::exp(2 * ay * ay) * std::erfc(root2 * ay);
    } else {
        const double t = 1.0 / (4 * ay * ay);
        scaled = (1 - t + 3 * t * t - 15 * t * t * t) / (root2 * ay * std::sqrt(std::numbers::pi));
    }
    return std::sqrt(2.0 / std::numbers::pi) * boost::math::gamma_q(n - 1.0, x * x + y * y) * ay * scaled;
}

DensityProfile density_profiles(int n, const std::vector<double>& xs, const std::vector<double>& ys) {
    DensityProfile out;
    out.n = n;
    out.xs = xs;
    out.ys = ys;
    for (double x : xs) {
        out.real.push_back(density_real(n, x));
        std::vector<double> row;
        for (double y : ys) row.push_back(density_complex(n, x, y));
        out.complex.push_back(std::move(row));
    }
    return out;
}

double real_density_mass(int n, double a, double b) {
    using boost::math::quadrature::gauss_kronrod;
    auto f = [n](double x) { return density_real(n, x); };
    return gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-13);
}

ChiSquare chi_square_real_histogram(int n, std::int64_t samples, const std::vector<double>& edges,
                                    const std::vector<std::int64_t>& counts) {
    if (counts.size() != edges.size() + 1) throw std::invalid_argument("histogram does not match edges");
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> expected;
    for (std::size_t j = 0; j < counts.size(); ++j) {
        const double lo = j == 0 ? -inf : edges[j - 1];
        const double hi = j == edges.size() ? inf : edges[j];
        expected.push_back(static_cast<double>(samples) * real_density_mass(n, lo, hi));
    }
    ChiSquare out;
    double obs = 0, exp = 0;
    int cells = 0;
    for (std::size_t j = 0; j < counts.size(); ++j) {
        obs += static_cast<double>(counts[j]);
        exp += expected[j];
        const bool last = j + 1 == counts.size();
        if (exp >= 5 || last) {
            if (exp > 0) {
                out.statistic += (obs - exp) * (obs - exp) / exp;
                ++cells;
            }
            obs = exp = 0;
        }
    }
    // The total number of real eigenvalues is random, so no constraint is lost.
    out.dof = cells;
    out.p_value = out.dof > 0 ? boost::math::gamma_q(out.dof / 2.0, out.statistic / 2.0) : 1.0;
    return out;
}

}  // namespace ginoe
