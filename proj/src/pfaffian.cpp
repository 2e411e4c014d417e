#include "ginoe/pfaffian.hpp"

#include "ginoe/kernel.hpp"
#include "ginoe/probabilities.hpp"
#include "ginoe/symmetric.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <random>

namespace ginoe {

namespace {

const cld kI(0.0L, 1.0L);

long double to_ld(const Rational& r) { return QSqrt2(r).to_long_double(); }

std::vector<long double> coeffs_ld(const PolyRational& p) {
    std::vector<long double> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(to_ld(c));
    return out;
}

bool is_antisymmetric(const Matrix<cld>& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (m(i, j) != -m(j, i)) return false;
    return true;
}

cld pairwise_sum(const std::vector<cld>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
        cld acc(0);
        for (std::size_t k = lo; k < hi; ++k) acc += v[k];
        return acc;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

// Q-block for arguments (z_1, conj z_1, z_2, conj z_2, ...).
template <class Fn>
SkewMatrix<cld> conjugate_pair_block(const std::vector<cld>& zs, Fn&& entry) {
    std::vector<cld> args;
    for (const auto& z : zs) {
        args.push_back(z);
        args.push_back(std::conj(z));
    }
    SkewMatrix<cld> a(args.size());
    for (std::size_t i = 0; i < args.size(); ++i)
        for (std::size_t j = i + 1; j < args.size(); ++j) a.set(i, j, entry(args[i], args[j]));
    return a;
}

long double uniform01(std::mt19937_64& rng) { return static_cast<long double>(rng() >> 11) * 0x1p-53L; }

Rational grid_rational(std::mt19937_64& rng, bool nonzero) {
    long num = static_cast<long>(rng() % 7) - 3;
    if (nonzero)
        while (num == 0) num = static_cast<long>(rng() % 7) - 3;
    const long den = static_cast<long>(rng() % 4) + 1;
    return make_rational(num, den);
}

}  // namespace

KernelContext KernelContext::ginoe(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const SkewPolys sp = skew_polys(n);
    KernelContext ctx;
    ctx.n = n;
    for (const auto& p : sp.q) ctx.poly_coeffs.push_back(coeffs_ld(p));
    ctx.mu = Matrix<cld>(n, n);
    const int pairs = n / 2;
    for (int j = 0; j < pairs; ++j) {
        const long double inv_h = 1.0L / sp.h[j].to_long_double();
        ctx.mu(2 * j, 2 * j + 1) = -inv_h;
        ctx.mu(2 * j + 1, 2 * j) = inv_h;
    }
    if (n % 2 == 1) {
        // Odd size: the unpaired q_{2m} couples to every odd polynomial.
        const int m = pairs;
        const long double c_m = to_ld(factorial(m)) / sp.h[m].to_long_double();
        for (int j = 0; j < m; ++j) {
            const long double v = c_m / to_ld(factorial(j));
            ctx.mu(2 * m, 2 * j + 1) = v;
            ctx.mu(2 * j + 1, 2 * m) = -v;
        }
    }
    return ctx;
}

KernelContext KernelContext::custom(const std::vector<PolyRational>& polys, const Matrix<cld>& mu) {
    if (mu.rows() != polys.size() || !is_antisymmetric(mu)) throw std::invalid_argument("mu must be antisymmetric n x n");
    KernelContext ctx;
    ctx.n = static_cast<int>(polys.size());
    for (const auto& p : polys) ctx.poly_coeffs.push_back(coeffs_ld(p));
    ctx.mu = mu;
    return ctx;
}

std::vector<cld> KernelContext::eval_polys(const cld& x) const {
    std::vector<cld> out;
    out.reserve(poly_coeffs.size());
    for (const auto& c : poly_coeffs) {
        cld acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        out.push_back(acc);
    }
    return out;
}

cld KernelContext::q_kernel(const cld& x, const cld& y) const {
    const auto qx = eval_polys(x);
    const auto qy = eval_polys(y);
    cld acc(0);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            if (mu(j, k) != cld(0)) acc += mu(j, k) * (qx[j] * qy[k] - qx[k] * qy[j]);
    return acc / 2.0L;
}

cld kernel_D(const KernelContext& ctx, const cld& x, const cld& y) {
    return std::exp(-(x * x + y * y) / 2.0L) * ctx.q_kernel(x, y);
}

long double jpdf_complex(int n, int k, const std::vector<cld>& points) {
    if (n < 1 || k < 0 || k > n || (n - k) % 2 != 0) throw std::invalid_argument("n - k must be even and non-negative");
    const int ell = (n - k) / 2;
    if (static_cast<int>(points.size()) != ell) throw std::invalid_argument("expected (n-k)/2 points");
    for (const auto& z : points)
        if (!(z.imag() > 0)) throw std::invalid_argument("points must lie in the upper half-plane");
    if (ell == 0) return prob_all_real(n).to_long_double();

    const KernelContext ctx = KernelContext::ginoe(n);
    const auto block = conjugate_pair_block(points, [&](const cld& a, const cld& b) { return kernel_D(ctx, a, b); });
    cld value = pfaffian_eliminate(block);
    for (const auto& z : points) value *= std::erfc(std::sqrt(2.0L) * z.imag());
    for (int j = 0; j < ell; ++j) value *= cld(0.0L, -2.0L);  // 2/i
    value *= prob_all_real(n).to_long_double() / to_ld(factorial(ell));
    if (std::abs(value.imag()) > std::max(1e-10L * std::abs(value), 1e-12L))
        throw std::logic_error("j.p.d.f. has a non-negligible imaginary part");
    return value.real();
}

DiscreteMeasure from_weighted_points(const WeightedPoints& wp) { return DiscreteMeasure{wp.points, wp.weights}; }

Matrix<cld> upsilon(const KernelContext& ctx, const DiscreteMeasure& measure) {
    if (!is_antisymmetric(ctx.mu)) throw std::invalid_argument("mu must be antisymmetric");
    const std::size_t n = ctx.n;
    Matrix<cld> x(n, n);
    for (std::size_t m = 0; m < measure.points.size(); ++m) {
        const auto qz = ctx.eval_polys(measure.points[m]);
        const auto qc = ctx.eval_polys(std::conj(measure.points[m]));
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t b = 0; b < n; ++b) x(k, b) += measure.weights[m] * qz[k] * qc[b];
    }
    return kI * (ctx.mu * (x - x.transpose()));
}

long double TheoremCheck::rel_err() const {
    const long double scale = std::max(std::abs(lhs), std::abs(rhs));
    return scale == 0 ? 0.0L : abs_err() / scale;
}

bool TheoremCheck::agrees(long double rel_tol, long double abs_floor) const {
    const long double scale = std::max({std::abs(lhs), std::abs(rhs), summand_scale * 1e-6L});
    return abs_err() <= std::max(rel_tol * scale, abs_floor);
}

cld zonal_of_upsilon(const Matrix<cld>& u, int ell) {
    auto traces = trace_powers(u, static_cast<unsigned>(ell));
    for (auto& t : traces) t /= 2.0L;
    cld value = zonal_partition_sum(traces);
    for (int j = 0; j < ell; ++j) value *= cld(0.0L, 0.5L);
    return value;
}

TheoremCheck pfaffian_theorem_check(const KernelContext& ctx, int ell, const DiscreteMeasure& measure) {
    if (ell < 1) throw std::invalid_argument("ell must be positive");
    const std::size_t points = measure.points.size();
    std::size_t tuples = 1;
    for (int j = 0; j < ell; ++j) tuples *= points;

    std::vector<cld> terms(tuples);
    std::vector<std::size_t> digits(ell, 0);
    std::vector<cld> zs(ell);
    for (std::size_t t = 0; t < tuples; ++t) {
        std::size_t rest = t;
        cld weight(1);
        for (int j = 0; j < ell; ++j) {
            digits[j] = rest % points;
            rest /= points;
            zs[j] = measure.points[digits[j]];
            weight *= measure.weights[digits[j]];
        }
        const auto block = conjugate_pair_block(zs, [&](const cld& a, const cld& b) { return ctx.q_kernel(a, b); });
        terms[t] = weight * pfaffian_eliminate(block);
    }
    TheoremCheck out;
    out.lhs = tuples == 0 ? cld(0) : pairwise_sum(terms, 0, tuples);
    const auto u = upsilon(ctx, measure);
    out.rhs = zonal_of_upsilon(u, ell);

    long double lhs_scale = 0;
    for (const auto& t : terms) lhs_scale += std::abs(t);
    std::vector<long double> abs_traces;
    for (const auto& t : trace_powers(u, static_cast<unsigned>(ell))) abs_traces.push_back(std::abs(t) / 2.0L);
    long double rhs_scale = 0;
    for (const auto& lam : partitions(ell)) {
        long double term = static_cast<long double>(cycle_class_size(lam));
        for (const auto& [part, mult] : lam.parts)
            for (int r = 0; r < mult; ++r) term *= abs_traces[part - 1];
        rhs_scale += term;
    }
    out.summand_scale = std::max(lhs_scale, std::ldexp(rhs_scale, -ell));
    return out;
}

TheoremInstance random_theorem_instance(int n, int points, std::uint64_t seed) {
    if (n < 1 || points < 1) throw std::invalid_argument("n and points must be positive");
    std::mt19937_64 rng(seed);
    std::vector<PolyRational> polys;
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> c(j + 1);
        for (int d = 0; d < j; ++d) c[d] = grid_rational(rng, false);
        c[j] = grid_rational(rng, true);
        polys.emplace_back(std::move(c));
    }
    Matrix<cld> mu(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const long double v = to_ld(grid_rational(rng, false));
            mu(a, b) = v;
            mu(b, a) = -v;
        }
    DiscreteMeasure measure;
    for (int m = 0; m < points; ++m) {
        const long double re = 3.0L * uniform01(rng) - 1.5L;
        const long double im = 3.0L * uniform01(rng) - 1.5L;
        const long double wr = 2.0L * uniform01(rng) - 1.0L;
        const long double wi = 2.0L * uniform01(rng) - 1.0L;
        measure.points.emplace_back(re, im);
        measure.weights.emplace_back(wr, wi);
    }
    return TheoremInstance{KernelContext::custom(polys, mu), std::move(measure)};
}

KernelContext projecting_control(const std::vector<PolyRational>& polys, const DiscreteMeasure& measure) {
    const std::size_t n = polys.size();
    if (n % 2 != 0) throw std::invalid_argument("a projecting coupling needs an even number of polynomials");
    Matrix<cld> zero(n, n);
    const KernelContext base = KernelContext::custom(polys, zero);
    using EigenMat = Eigen::Matrix<cld, Eigen::Dynamic, Eigen::Dynamic>;
    EigenMat chi = EigenMat::Zero(n, n);
    for (std::size_t m = 0; m < measure.points.size(); ++m) {
        const auto qz = base.eval_polys(measure.points[m]);
        const auto qc = base.eval_polys(std::conj(measure.points[m]));
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t b = 0; b < n; ++b) chi(k, b) += measure.weights[m] * qz[k] * qc[b];
    }
    const EigenMat skew = chi - chi.transpose();
    // mu (X - X^T) = -2 makes upsilon = -2i.
    const EigenMat inv = skew.fullPivLu().inverse();
    Matrix<cld> mu(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const cld v = -(inv(a, b) - inv(b, a));  // -2 * antisymmetric part of the inverse
            mu(a, b) = v;
            mu(b, a) = -v;
        }
    return KernelContext::custom(polys, mu);
}

namespace {

ProjectionReport report_for(int n, const KernelContext& ctx, const DiscreteMeasure& measure) {
    ProjectionReport r;
    r.n = n;
    r.upsilon_matrix = upsilon(ctx, measure);
    for (std::size_t a = 0; a < r.upsilon_matrix.rows(); ++a)
        for (std::size_t b = 0; b < r.upsilon_matrix.cols(); ++b) {
            const cld target = a == b ? cld(0.0L, -2.0L) : cld(0);
            r.max_deviation = std::max(r.max_deviation, std::abs(r.upsilon_matrix(a, b) - target));
        }
    return r;
}

const DiscreteMeasure& ginoe_measure() {
    static const DiscreteMeasure m = from_weighted_points(ginoe_measure_points(kMeasureXPoints, kMeasureYPoints));
    return m;
}

}  // namespace

ProjectionReport projection_failure_check(int n) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    return report_for(n, KernelContext::ginoe(n), ginoe_measure());
}

ProjectionReport projection_control_check(int n) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    // An odd-size antisymmetric coupling is singular, so odd n uses the next even size.
    const int size = n % 2 == 0 ? n : n + 1;
    const KernelContext ctx = projecting_control(skew_polys(size).q, ginoe_measure());
    return report_for(n, ctx, ginoe_measure());
}

long double integrate_upper_half_plane(const std::function<long double(const cld&)>& f, int points,
                                       long double half_width) {
    const auto gl = gauss_legendre(points);
    long double total = 0;
    for (std::size_t a = 0; a < gl.nodes.size(); ++a) {
        const long double x = half_width * gl.nodes[a];
        long double row = 0;
        for (std::size_t b = 0; b < gl.nodes.size(); ++b) {
            const long double y = half_width * (gl.nodes[b] + 1.0L) / 2.0L;
            row += gl.weights[b] * f(cld(x, y));
        }
        total += gl.weights[a] * row;
    }
    return total * half_width * half_width / 2.0L;
}

}  // namespace ginoe
