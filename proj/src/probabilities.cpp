#include "ginoe/probabilities.hpp"

#include "ginoe/symmetric.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ginoe {

namespace {

Rational inverse_power_of_two(long k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k));
    return Rational(1) / Rational(p);
}

void check_n(int n, int min_n) {
    if (n < min_n) throw std::invalid_argument("ensemble size must be >= " + std::to_string(min_n));
}

}  // namespace

QSqrt2 ProbabilityTable::total() const {
    QSqrt2 acc;
    for (const auto& kv : rows) acc += kv.second;
    return acc;
}

QSqrt2 GenFuncPoly::at(const QSqrt2& z) const {
    QSqrt2 acc;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * z + *it;
    return acc;
}

QSqrt2 prob_all_real(int n) {
    check_n(n, 1);
    const long e = static_cast<long>(n) * (n - 1);
    if (e % 4 == 0) return QSqrt2(inverse_power_of_two(e / 4));
    // 2^{-(e-2)/4} * 2^{-1/2} = 2^{-(e-2)/4 - 1} * sqrt2
    return {Rational(0), inverse_power_of_two((e - 2) / 4 + 1)};
}

std::vector<QSqrt2> rho_traces(int n, unsigned count) {
    if (n < 2 || count == 0) return {};
    return trace_powers(rho_matrix(n).entries, count);
}

QSqrt2 prob_nk_from_traces(int n, int k, const std::vector<QSqrt2>& traces) {
    check_n(n, 1);
    if (k < 0 || k > n) throw std::invalid_argument("k must satisfy 0 <= k <= n");
    if ((n - k) % 2 != 0) return {};
    const int ell = (n - k) / 2;
    if (ell == 0) return prob_all_real(n);
    if (traces.size() < static_cast<std::size_t>(ell)) throw std::invalid_argument("too few traces");
    const std::vector<QSqrt2> p(traces.begin(), traces.begin() + ell);
    return prob_all_real(n) * QSqrt2(Rational(1) / factorial(ell)) * zonal_recursive(p);
}

QSqrt2 prob_nk(int n, int k) {
    check_n(n, 1);
    if (k < 0 || k > n) throw std::invalid_argument("k must satisfy 0 <= k <= n");
    if ((n - k) % 2 != 0) return {};
    return prob_nk_from_traces(n, k, rho_traces(n, static_cast<unsigned>((n - k) / 2)));
}

ProbabilityTable prob_table(int n) {
    check_n(n, 1);
    ProbabilityTable t;
    t.n = n;
    const auto traces = rho_traces(n, static_cast<unsigned>(n / 2));
    for (int k = n; k >= 0; k -= 2) t.rows[k] = prob_nk_from_traces(n, k, traces);
    return t;
}

std::vector<QSqrt2> char_poly_from_traces(const std::vector<QSqrt2>& traces) {
    std::vector<QSqrt2> e{QSqrt2(1)};
    for (std::size_t k = 1; k <= traces.size(); ++k) {
        QSqrt2 acc;
        for (std::size_t i = 1; i <= k; ++i) {
            QSqrt2 term = e[k - i] * traces[i - 1];
            if (i % 2 == 0) term = -term;
            acc += term;
        }
        e.push_back(acc * QSqrt2(make_rational(1, static_cast<long>(k))));
    }
    return e;
}

GenFuncPoly generating_function(int n) {
    check_n(n, 2);
    GenFuncPoly g;
    g.n = n;
    const QSqrt2 pnn = prob_all_real(n);
    for (const auto& c : char_poly_from_traces(rho_traces(n, static_cast<unsigned>(n / 2)))) {
        g.coefficients.push_back(pnn * c);
    }
    return g;
}

QSqrt2 moment_real_count(int n, int q) {
    if (q < 0) throw std::invalid_argument("moment order must be >= 0");
    if (n == 1) return QSqrt2(1);
    std::vector<QSqrt2> c = generating_function(n).coefficients;
    // (n - 2 z d/dz) maps z^l to (n - 2l) z^l
    for (int r = 0; r < q; ++r) {
        for (std::size_t l = 0; l < c.size(); ++l) c[l] *= QSqrt2(static_cast<long>(n - 2 * static_cast<long>(l)));
    }
    QSqrt2 acc;
    for (const auto& v : c) acc += v;
    return acc;
}

double expected_real_count(int n) {
    check_n(n, 1);
    // 2F1(1,-1/2;n;1/2) = sum_k (-1/2)_k / (n)_k 2^{-k}
    long double sum = 0.0L;
    long double term = 1.0L;
    for (int k = 0; k < 10000; ++k) {
        sum += term;
        term *= (k - 0.5L) / (n + k) * 0.5L;
        if (std::fabs(term) < 1e-17L) break;
    }
    const long double log_beta = std::lgamma(static_cast<long double>(n)) + std::lgamma(0.5L) -
                                 std::lgamma(static_cast<long double>(n) + 0.5L);
    return static_cast<double>(0.5L + std::sqrt(2.0L) * sum / std::exp(log_beta));
}

double expected_real_count_asymptotic(int n, int terms) {
    static constexpr long double coef[] = {1.0L, -3.0L / 8, -3.0L / 128, 27.0L / 1024, 499.0L / 32768};
    if (terms < 0 || terms > 4) throw std::invalid_argument("terms must be in 0..4");
    const long double x = n;
    long double series = 0.0L;
    for (int k = terms; k >= 0; --k) series = series / x + coef[k];
    return static_cast<double>(std::sqrt(2.0L * x / std::numbers::pi_v<long double>) * series + 0.5L);
}

namespace {

// 3^{k/2} P_k(2/sqrt3) for k = 0..kmax, via the Legendre three-term recurrence.
std::vector<long double> scaled_legendre(int kmax) {
    const long double x = 2.0L / std::sqrt(3.0L);
    std::vector<long double> p{1.0L, x};
    for (int k = 1; k < kmax; ++k) {
        p.push_back(((2 * k + 1) * x * p[k] - k * p[k - 1]) / (k + 1));
    }
    std::vector<long double> out(static_cast<std::size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) out[k] = p[k] * std::pow(3.0L, k / 2.0L);
    return out;
}

}  // namespace

long double one_pair_ratio_legendre(int n) {
    check_n(n, 2);
    const int half = n / 2;
    const int alpha = (n + 1) / 2 - n / 2;
    const auto r = scaled_legendre(2 * half + 1);
    long double acc = 0.0L;
    for (int j = 0; j < half; ++j) acc += r[2 * j + alpha];
    return std::sqrt(2.0L) * acc - half;
}

long double prob_one_pair_legendre(int n) { return prob_all_real(n).to_long_double() * one_pair_ratio_legendre(n); }

QSqrt2 prob_one_pair_exact(int n, OnePairRoute route) {
    check_n(n, 2);
    switch (route) {
        case OnePairRoute::zonal:
            return prob_nk(n, n - 2);
        case OnePairRoute::laguerre:
            return prob_all_real(n) * closed_form_trace(n);
        case OnePairRoute::legendre:
            break;
    }
    throw std::invalid_argument("legendre route is float only");
}

OnePairAsymptotic prob_one_pair_asymptotic(int n) {
    check_n(n, 2);
    const long double x = n;
    OnePairAsymptotic a{};
    a.estimate_ratio = std::pow(3.0L, x + 0.5L) / (8.0L * std::sqrt(std::numbers::pi_v<long double> * x));
    a.exact_ratio = closed_form_trace(n).to_long_double();
    return a;
}

std::vector<long double> tau_series(int N) {
    if (N < 0) throw std::invalid_argument("truncation must be >= 0");
    std::vector<long double> out;
    const auto r = scaled_legendre(N + 1);
    for (int n = 0; n <= N; ++n) {
        const int half = n / 2;
        const int alpha = (n + 1) / 2 - n / 2;
        long double acc = 0.0L;
        for (int j = 0; j <= half; ++j) acc += r[2 * j + alpha];
        out.push_back(acc / std::sqrt(2.0L) - (half + 1) / 2.0L);
    }
    return out;
}

std::vector<long> tau_denominator_coefficients(int N) {
    // Cauchy product of sum (i+1) z^i and sum (-1)^i z^i
    std::vector<long> out;
    for (long k = 0; k <= N; ++k) {
        long acc = 0;
        for (long i = 0; i <= k; ++i) acc += ((k - i) % 2 == 0) ? (i + 1) : -(i + 1);
        out.push_back(acc);
    }
    return out;
}

std::vector<QSqrt2> tau_series_exact(int N) {
    if (N < 0) throw std::invalid_argument("truncation must be >= 0");
    const auto len = static_cast<std::size_t>(N) + 1;
    // sqrt((1-z)/(1-3z)) = exp(sum_k (3^k - 1)/(2k) z^k)
    std::vector<Rational> a(len, Rational(0));
    mpz_class three(1);
    for (std::size_t k = 1; k < len; ++k) {
        three *= 3;
        a[k] = Rational(three - 1) / Rational(2 * static_cast<long>(k));
    }
    std::vector<Rational> f(len, Rational(0));
    f[0] = 1;
    for (std::size_t m = 1; m < len; ++m) {
        Rational acc(0);
        for (std::size_t k = 1; k <= m; ++k) acc += Rational(static_cast<long>(k)) * a[k] * f[m - k];
        f[m] = acc / Rational(static_cast<long>(m));
    }
    std::vector<QSqrt2> g(len);
    for (std::size_t k = 0; k < len; ++k) g[k] = QSqrt2(Rational(0), f[k]);
    g[0] -= QSqrt2(1);
    const auto c = tau_denominator_coefficients(N);
    std::vector<Rational> w(len, Rational(0));
    for (std::size_t k = 0; k < len; ++k) w[k] = make_rational(c[k], 2);
    std::vector<QSqrt2> out(len);
    for (std::size_t k = 0; k < len; ++k) {
        QSqrt2 acc;
        for (std::size_t i = 0; i <= k; ++i) acc += QSqrt2(w[i]) * g[k - i];
        out[k] = acc;
    }
    return out;
}

namespace {

// p_{n,n-2l} for all l, computed with mantissa width `bits`.
std::vector<mpf_class> float_generating_coefficients(const RhoMatrix& rho, int n, mp_bitcnt_t bits) {
    const std::size_t m = rho.entries.rows();
    auto zero = [bits] { return mpf_class(0, bits); };
    std::vector<mpf_class> r(m * m, zero());
    for (std::size_t i = 0; i < m * m; ++i) r[i] = to_mpf(rho.entries(i / m, i % m), bits);
    std::vector<mpf_class> power = r;
    std::vector<mpf_class> traces;
    for (std::size_t j = 1; j <= m; ++j) {
        if (j > 1) {
            std::vector<mpf_class> next(m * m, zero());
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t k = 0; k < m; ++k)
                    for (std::size_t b = 0; b < m; ++b) next[a * m + b] += power[a * m + k] * r[k * m + b];
            power = std::move(next);
        }
        mpf_class t = zero();
        for (std::size_t a = 0; a < m; ++a) t += power[a * m + a];
        traces.push_back(t);
    }
    std::vector<mpf_class> e{mpf_class(1, bits)};
    for (std::size_t k = 1; k <= traces.size(); ++k) {
        mpf_class acc = zero();
        for (std::size_t i = 1; i <= k; ++i) {
            if (i % 2 == 0) acc -= e[k - i] * traces[i - 1];
            else acc += e[k - i] * traces[i - 1];
        }
        mpf_class q = zero();
        q = acc / static_cast<unsigned long>(k);
        e.push_back(q);
    }
    const mpf_class pnn = to_mpf(prob_all_real(n), bits);
    for (auto& v : e) v *= pnn;
    return e;
}

long double to_ld(const mpf_class& v) {
    long exp = 0;
    const double mant = mpf_get_d_2exp(&exp, v.get_mpf_t());
    return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

}  // namespace

FloatProbabilityTable prob_table_float(int n, unsigned bits) {
    check_n(n, 1);
    FloatProbabilityTable t;
    t.n = n;
    if (n == 1) {
        t.rows[1] = 1.0L;
        return t;
    }
    // Cancellation in the alternating Newton sums grows roughly like 2^{n^2/4}.
    const mp_bitcnt_t base_bits = bits != 0 ? bits : static_cast<mp_bitcnt_t>(128 + n * n / 2);
    const auto rho = rho_matrix(n);
    const auto lo = float_generating_coefficients(rho, n, base_bits);
    const auto hi = float_generating_coefficients(rho, n, 2 * base_bits);
    mpf_class total(0, 2 * base_bits);
    for (std::size_t l = 0; l < hi.size(); ++l) {
        const int k = n - 2 * static_cast<int>(l);
        t.rows[k] = to_ld(hi[l]);
        mpf_class diff(0, 2 * base_bits);
        diff = abs(hi[l] - lo[l]);
        t.error_estimate = std::max(t.error_estimate, to_ld(diff));
        total += hi[l];
    }
    mpf_class resid(0, 2 * base_bits);
    resid = abs(total - 1);
    t.normalization_residual = to_ld(resid);
    return t;
}

}  // namespace ginoe
