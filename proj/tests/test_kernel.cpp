#include <doctest.h>

#include "ginoe/kernel.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace ginoe;

namespace {

// Reference values from an independent 40-digit quadrature of the defining integrals.
constexpr long double kBaseRef[][2] = {
    {0, 0.2071067811865475244008444L}, {1, 0.1464466094067262377995778L},
    {2, 0.2374368670764581677014776L}, {5, 9.950098144139683038502735L},
    {10, 220562.1485080222967716174L},
};

constexpr long double kRho8Ref[4][4] = {
    {0.4142135623730950488017L, 0.7071067811865475244008L, 1.060660171779821286601L, 2.651650429449553216503L},
    {1.414213562373095048802L, 5.363961030678927719608L, 18.03122292025696187222L, 66.29126073623883041258L},
    {0.7071067811865475244008L, 6.010407640085653957407L, 39.12830983233657200975L, 234.6710630062854596605L},
    {0.2357022603955158414669L, 2.946278254943948018337L, 31.28947506750472795474L, 291.4770423682857197803L},
};

bool rel_close(long double x, long double y, long double tol) {
    return std::fabs(x - y) <= tol * std::max(std::fabs(x), std::fabs(y));
}

}  // namespace

TEST_CASE("base integrals: recursion against frozen references") {
    for (const auto& ref : kBaseRef) {
        const auto m = static_cast<unsigned>(ref[0]);
        CHECK(rel_close(base_integral(m).to_long_double(), ref[1], 1e-15L));
    }
    CHECK(base_integral(0) == parse_qsqrt2("-1/2 + 1/2*sqrt2"));
    CHECK(base_integral(2) + QSqrt2(2) * base_integral(1) == QSqrt2(Rational(0), make_rational(3, 8)));
}

TEST_CASE("base integrals: recursion against adaptive quadrature up to m = 30") {
    const auto table = base_integral_table(31);
    for (unsigned m = 0; m <= 30; ++m) {
        const long double quad = oracle::weighted_half_line(
            [m](long double y) { return std::pow(y, static_cast<long double>(2 * m + 1)); });
        CAPTURE(m);
        CHECK(rel_close(table[m].to_long_double(), quad, 1e-12L));
    }
}

TEST_CASE("skew polynomials") {
    const auto sp = skew_polys(5);
    CHECK(sp.q[0] == PolyRational::monomial(0));
    CHECK(sp.q[1] == PolyRational::monomial(1));
    CHECK(sp.q[2] == PolyRational({make_rational(-1, 2), Rational(0), Rational(1)}));
    for (int j = 0; j < 5; ++j) {
        CHECK(sp.q[j].degree() == j);
        CHECK(sp.q[j].coeffs().back() == Rational(1));
    }
    CHECK(sp.h[0].coeff == Rational(1));
    CHECK(sp.h[2].coeff == make_rational(24, 16));
    CHECK(norm_ratio(2, 1) == make_rational(3, 1));
    // tilde shift at n = 5 (m = 2): q~_0 = q_0 - (1)(16*2/24) q_4
    CHECK(sp.q_tilde[0] == sp.q[0] - sp.q[4] * make_rational(4, 3));
    CHECK(sp.q_tilde[1] == sp.q[1]);
    const auto even = skew_polys(4);
    for (int j = 0; j < 4; ++j) CHECK(even.q_tilde[j] == even.q[j]);
}

TEST_CASE("skew orthogonality under the GOE skew product") {
    // <f,g> = 1/2 int e^{-x^2/2} f(x) [int e^{-y^2/2} sgn(y-x) g(y) dy] dx, with the inner
    // integral in closed form through J_k(x) = int_{-inf}^x y^k e^{-y^2/2} dy.
    const auto sp = skew_polys(10);
    const auto gh = gauss_hermite(80);
    auto skew = [&](const PolyRational& f, const PolyRational& g) {
        long double acc = 0.0L;
        for (std::size_t a = 0; a < gh.nodes.size(); ++a) {
            const long double x = std::sqrt(2.0L) * gh.nodes[a];  // weight e^{-x^2/2}
            const long double gx = std::exp(-x * x / 2.0L);
            std::vector<long double> lower{std::sqrt(std::numbers::pi_v<long double> / 2.0L) *
                                               std::erfc(-x / std::sqrt(2.0L)),
                                           -gx};
            std::vector<long double> total{std::sqrt(2.0L * std::numbers::pi_v<long double>), 0.0L};
            for (int k = 2; k <= g.degree(); ++k) {
                lower.push_back(-std::pow(x, static_cast<long double>(k - 1)) * gx + (k - 1) * lower[k - 2]);
                total.push_back((k - 1) * total[k - 2]);
            }
            long double inner = 0.0L;
            for (int k = 0; k <= g.degree(); ++k) {
                inner += static_cast<long double>(g.coeffs()[k].get_d()) * (total[k] - 2.0L * lower[k]);
            }
            acc += gh.weights[a] * std::sqrt(2.0L) * f.eval(x) * inner;
        }
        return acc / 2.0L;
    };
    for (int k = 0; k <= 4; ++k) {
        for (int l = 0; l <= 4; ++l) {
            const long double hk = skew_norm(k).to_long_double();
            CAPTURE(k);
            CAPTURE(l);
            CHECK(std::fabs(skew(sp.q[2 * k], sp.q[2 * l + 1]) - (k == l ? hk : 0.0L)) < 1e-8L * (1 + hk));
            CHECK(std::fabs(skew(sp.q[2 * k], sp.q[2 * l])) < 1e-8L * (1 + hk));
        }
    }
}

TEST_CASE("laguerre expansion conventions") {
    CHECK(laguerre(-1, 3).is_zero());
    CHECK(laguerre(0, 5) == PolyRational::monomial(0));
    // L_1^{-1}(w) = -w
    CHECK(laguerre(1, -1) == PolyRational::monomial(1, Rational(-1)));
    // L_3^{-2}(w) = w^2 (1!/3!) L_1^2(w) = w^2/6 (3 - w)
    CHECK(laguerre(3, -2) == PolyRational({Rational(0), Rational(0), make_rational(1, 2), make_rational(-1, 6)}));
    // L_2^1(w) = 3 - 3w + w^2/2
    CHECK(laguerre(2, 1) == PolyRational({Rational(3), Rational(-3), make_rational(1, 2)}));
}

TEST_CASE("reduced matrix: small sizes") {
    const auto r2 = rho_matrix(2);
    REQUIRE(r2.entries.rows() == 1);
    CHECK(r2.entries(0, 0) == parse_qsqrt2("-1 + 1*sqrt2"));
    CHECK(r2.parity == Parity::even);
    const auto r3 = rho_matrix(3);
    REQUIRE(r3.entries.rows() == 1);
    CHECK(r3.parity == Parity::odd);
    // rho^even_{0,0} - (-4)^1 (1!/2!) (0!/0!) rho^even_{0,1}
    CHECK(r3.entries(0, 0) == rho_even_entry(0, 0) + QSqrt2(2) * rho_even_entry(0, 1));
    CHECK(rel_close(r3.entries(0, 0).to_long_double(), 1.828427124746190097603L, 1e-15L));
    CHECK_THROWS_AS(rho_matrix(1), std::invalid_argument);
}

TEST_CASE("reduced matrix: n = 8 against frozen and live quadrature") {
    const auto r8 = rho_matrix(8);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            const long double exact = r8.entries(a, b).to_long_double();
            CHECK(rel_close(exact, kRho8Ref[a][b], 1e-15L));
            CHECK(rel_close(exact, oracle::rho_even_entry(a, b), 1e-10L));
        }
    }
}

TEST_CASE("reduced matrix: odd n = 5 against frozen quadrature") {
    const auto r5 = rho_matrix(5);
    const long double ref[2][2] = {{-1.0L, 1.414213562373095048802L},
                                   {-22.62741699796952078083L, 17.38477631085023563442L}};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) CHECK(rel_close(r5.entries(a, b).to_long_double(), ref[a][b], 1e-15L));
}

TEST_CASE("sigma matrix structure") {
    const auto s2 = sigma_matrix(2);
    const QSqrt2 v = parse_qsqrt2("-1 + 1*sqrt2");
    CHECK(s2.entries(0, 0) == v);
    CHECK(s2.entries(1, 1) == v);
    CHECK(s2.entries(0, 1) == QSqrt2());
    CHECK(s2.entries(1, 0) == QSqrt2());
    for (int n = 2; n <= 9; ++n) {
        const auto s = sigma_matrix(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if ((i + j) % 2 == 1) CHECK(s.entries(i, j).is_zero());
    }
    for (int n : {4, 6, 8}) {
        const auto s = sigma_matrix(n);
        const auto r = rho_matrix(n);
        for (int a = 0; a < n / 2; ++a) {
            for (int b = 0; b < n / 2; ++b) {
                const QSqrt2 sign((b - a) % 2 == 0 ? 1L : -1L);
                CHECK(s.entries(2 * a, 2 * b) == sign * r.entries(a, b));
                CHECK(s.entries(2 * a + 1, 2 * b + 1) == QSqrt2(norm_ratio(b, a)) * s.entries(2 * b, 2 * a));
            }
        }
    }
}

TEST_CASE("trace identity tr sigma^j = 2 tr rho^j") {
    for (int n = 2; n <= 10; ++n) {
        const auto s = sigma_matrix(n);
        const auto r = rho_matrix(n);
        const auto ts = trace_powers(s.entries, 4);
        const auto tr = trace_powers(r.entries, 4);
        for (int j = 0; j < 4; ++j) {
            CAPTURE(n);
            CAPTURE(j + 1);
            CHECK(ts[j] == QSqrt2(2) * tr[j]);
        }
    }
    CHECK(trace_power(rho_matrix(2), 1) == parse_qsqrt2("-1 + 1*sqrt2"));
}

TEST_CASE("closed-form trace equals the trace of the reduced matrix") {
    CHECK(closed_form_trace(2) == parse_qsqrt2("-1 + 1*sqrt2"));
    for (int n = 2; n <= 14; ++n) {
        CAPTURE(n);
        CHECK(closed_form_trace(n) == trace_power(rho_matrix(n), 1));
    }
}
