#include "ginoe/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ginoe {

namespace {

Rational power_of_two(int k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k));
    return Rational(p);
}

}  // namespace

long double SqrtPiScaled::to_long_double() const {
    return static_cast<long double>(coeff.get_d()) * std::sqrt(std::numbers::pi_v<long double>);
}

std::vector<QSqrt2> base_integral_table(unsigned count) {
    std::vector<QSqrt2> out;
    out.reserve(count);
    if (count == 0) return out;
    out.emplace_back(make_rational(-1, 2), make_rational(1, 2));
    Rational dfact(1);  // (2m-1)!!
    Rational pow2(2);   // 2^{m+1}
    for (unsigned m = 1; m < count; ++m) {
        dfact *= (2 * m - 1);
        pow2 *= 2;
        QSqrt2 next = QSqrt2(Rational(-static_cast<long>(m))) * out.back();
        next += QSqrt2(Rational(0), dfact / pow2);
        out.push_back(std::move(next));
    }
    return out;
}

QSqrt2 base_integral(unsigned m) { return base_integral_table(m + 1).back(); }

SqrtPiScaled skew_norm(int j) {
    return {factorial(2 * j) / power_of_two(2 * j)};
}

Rational norm_ratio(int beta, int alpha) { return skew_norm(beta).coeff / skew_norm(alpha).coeff; }

SkewPolys skew_polys(int n) {
    if (n < 1) throw std::invalid_argument("skew_polys needs n >= 1");
    SkewPolys out;
    out.n = n;
    for (int j = 0; j < n; ++j) {
        const Rational scale = Rational(1) / power_of_two(j);
        if (j % 2 == 0) {
            out.q.push_back(hermite(j) * scale);
        } else {
            const int k = (j - 1) / 2;
            out.q.push_back((hermite(j) - hermite(j - 2) * Rational(4 * k)) * scale);
        }
    }
    out.q_tilde = out.q;
    if (n % 2 == 1) {
        const int m = n / 2;
        const Rational inv_m = factorial(2 * m) / (factorial(m) * power_of_two(2 * m));
        for (int j = 0; j < m; ++j) {
            const Rational fj = factorial(2 * j) / (factorial(j) * power_of_two(2 * j));
            out.q_tilde[2 * j] = out.q[2 * j] - out.q[2 * m] * (fj / inv_m);
        }
    }
    for (int j = 0; j <= n / 2; ++j) out.h.push_back(skew_norm(j));
    return out;
}

QSqrt2 integrate_with_weight(const PolyRational& p, const Rational& w_scale, int y_power,
                             const std::vector<QSqrt2>& base) {
    QSqrt2 acc;
    Rational scale_pow(1);
    for (int j = 0; j <= p.degree(); ++j, scale_pow *= w_scale) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(j)];
        if (sgn(c) == 0) continue;
        const int power = y_power + 2 * j;
        if (power < 1 || power % 2 == 0) {
            throw std::logic_error("non-integrable monomial y^" + std::to_string(power));
        }
        const auto idx = static_cast<std::size_t>((power - 1) / 2);
        if (idx >= base.size()) throw std::out_of_range("base integral table too short");
        acc += QSqrt2(c * scale_pow) * base[idx];
    }
    return acc;
}

namespace {

QSqrt2 rho_even_entry_with(int alpha, int beta, const std::vector<QSqrt2>& base) {
    const int d = beta - alpha;
    const Rational w_scale(-2);
    QSqrt2 first = integrate_with_weight(laguerre(2 * alpha + 1, 2 * d - 1), w_scale, 2 * d - 1, base);
    first *= QSqrt2(Rational(2 * alpha + 1));
    QSqrt2 second = integrate_with_weight(laguerre(2 * alpha - 1, 2 * d + 1), w_scale, 2 * d + 1, base);
    second *= QSqrt2(Rational(2));
    return first + second;
}

// Highest base-integral index touched by entries with indices <= top.
unsigned base_needed(int top) { return static_cast<unsigned>(2 * top + 4); }

// E_{a,b} = (-1)^{b-a} rho^even_{a,b}, the even-even block of sigma for even parity.
Matrix<QSqrt2> signed_even_block(int size, const std::vector<QSqrt2>& base) {
    Matrix<QSqrt2> e(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
    for (int a = 0; a < size; ++a) {
        for (int b = 0; b < size; ++b) {
            QSqrt2 v = rho_even_entry_with(a, b, base);
            if ((b - a) % 2 != 0) v = -v;
            e(a, b) = std::move(v);
        }
    }
    return e;
}

}  // namespace

QSqrt2 rho_even_entry(int alpha, int beta) {
    return rho_even_entry_with(alpha, beta, base_integral_table(base_needed(std::max(alpha, beta))));
}

RhoMatrix rho_matrix(int n) {
    if (n < 2) throw std::invalid_argument("rho_matrix needs n >= 2");
    const int m = n / 2;
    const auto base = base_integral_table(base_needed(m));
    RhoMatrix out;
    out.n = n;
    out.parity = (n % 2 == 0) ? Parity::even : Parity::odd;
    out.entries = Matrix<QSqrt2>(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    if (out.parity == Parity::even) {
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) out.entries(a, b) = rho_even_entry_with(a, b, base);
        return out;
    }
    const Rational m_ratio = factorial(m) / factorial(2 * m);
    for (int b = 0; b < m; ++b) {
        Rational coef = power_of_two(2 * (m - b)) * m_ratio * factorial(2 * b) / factorial(b);
        if ((m - b) % 2 != 0) coef = -coef;
        for (int a = 0; a < m; ++a) {
            out.entries(a, b) = rho_even_entry_with(a, b, base) - QSqrt2(coef) * rho_even_entry_with(a, m, base);
        }
    }
    return out;
}

SigmaMatrix sigma_matrix(int n) {
    if (n < 2) throw std::invalid_argument("sigma_matrix needs n >= 2");
    const int m = n / 2;
    const auto base = base_integral_table(base_needed(m));
    SigmaMatrix out;
    out.n = n;
    out.entries = Matrix<QSqrt2>(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    auto& s = out.entries;
    if (n % 2 == 0) {
        const auto e = signed_even_block(m, base);
        for (int a = 0; a < m; ++a) {
            for (int b = 0; b < m; ++b) {
                s(2 * a, 2 * b) = e(a, b);
                s(2 * a + 1, 2 * b + 1) = QSqrt2(norm_ratio(b, a)) * e(b, a);
            }
        }
        return out;
    }
    const auto e = signed_even_block(m + 1, base);
    // c_m / c_j with c_j = j!/h_j
    auto c_ratio = [m](int j) -> Rational {
        return (factorial(m) / skew_norm(m).coeff) / (factorial(j) / skew_norm(j).coeff);
    };
    for (int a = 0; a <= m; ++a) {
        for (int b = 0; b <= m; ++b) {
            if (a < m) {
                s(2 * a, 2 * b) = e(a, b);
                continue;
            }
            QSqrt2 acc;
            for (int j = 0; j < m; ++j) acc += QSqrt2(c_ratio(j)) * e(j, b);
            s(2 * a, 2 * b) = -acc;
        }
    }
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            const Rational tail = factorial(m) / factorial(a) * norm_ratio(b, m);
            s(2 * a + 1, 2 * b + 1) = QSqrt2(norm_ratio(b, a)) * e(b, a) - QSqrt2(tail) * e(b, m);
        }
    }
    return out;
}

QSqrt2 trace_power(const Matrix<QSqrt2>& m, unsigned j) {
    if (j == 0) throw std::invalid_argument("trace_power needs j >= 1");
    return trace_powers(m, j).back();
}

QSqrt2 trace_power(const RhoMatrix& m, unsigned j) { return trace_power(m.entries, j); }
QSqrt2 trace_power(const SigmaMatrix& m, unsigned j) { return trace_power(m.entries, j); }

QSqrt2 closed_form_trace(int n) {
    if (n < 2) throw std::invalid_argument("closed_form_trace needs n >= 2");
    const auto base = base_integral_table(static_cast<unsigned>(n));
    return QSqrt2(Rational(2)) * integrate_with_weight(laguerre(n - 2, 2), Rational(-2), 1, base);
}

std::string parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

}  // namespace ginoe
