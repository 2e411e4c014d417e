#include <doctest.h>

#include "ginoe/probabilities.hpp"
#include "ginoe/symmetric.hpp"

#include <cmath>
#include <numbers>

using namespace ginoe;

namespace {

// (mult * (a + b sqrt2)) / den, the factored form in which the n = 12 table is printed.
QSqrt2 factored(const char* mult, const char* a, const char* b, const char* den) {
    const Rational scale = parse_rational(mult) / parse_rational(den);
    return {parse_rational(a) * scale, parse_rational(b) * scale};
}

struct TableRow {
    int k;
    QSqrt2 exact;
    double rounded;
};

std::vector<TableRow> table_n12() {
    return {
        {0, factored("1", "29930323227453", "-20772686238032", "17592186044416"), 0.031452},
        {2, factored("3", "-2060941421503", "1899624551312", "4398046511104"), 0.426689},
        {4, factored("3", "2079282320189", "-505722262348", "8796093022208"), 0.465235},
        {6, factored("1", "-27511352125", "252911550974", "4398046511104"), 0.075070},
        {8, factored("15", "1834091507", "-10083960", "17592186044416"), 0.001552},
        {10, factored("3", "-512", "1260495", "2199023255552"), 0.000002},
        {12, factored("1", "1", "0", "8589934592"), 0.000000},
    };
}

double round6(double x) { return std::round(x * 1e6) / 1e6; }

}  // namespace

TEST_CASE("all-real probability") {
    CHECK(prob_all_real(12) == QSqrt2(make_rational(1, 8589934592L)));
    CHECK(prob_all_real(2) == QSqrt2(Rational(0), make_rational(1, 2)));
    CHECK(prob_all_real(1) == QSqrt2(1));
    CHECK(prob_all_real(3) == QSqrt2(Rational(0), make_rational(1, 4)));
}

TEST_CASE("n = 12 exact table") {
    const auto t = prob_table(12);
    REQUIRE(t.rows.size() == 7);
    for (const auto& row : table_n12()) {
        CAPTURE(row.k);
        CHECK(t.rows.at(row.k) == row.exact);
        CHECK(std::fabs(round6(t.rows.at(row.k).to_double()) - row.rounded) < 1e-12);
    }
    CHECK(render(t.rows.at(0)) == "29930323227453/17592186044416 - 1298292889877/1099511627776*sqrt2");
    CHECK(render(t.rows.at(12)) == "1/8589934592");
}

TEST_CASE("small cases and parity") {
    CHECK(prob_nk(5, 2).is_zero());
    CHECK(prob_nk(2, 0) == parse_qsqrt2("1 - 1/2*sqrt2"));
    CHECK(prob_nk(2, 0) == prob_all_real(2) * parse_qsqrt2("-1 + 1*sqrt2"));
    CHECK(prob_nk(3, 1) == parse_qsqrt2("1 - 1/4*sqrt2"));
    const auto t5 = prob_table(5);
    CHECK(t5.rows.size() == 3);
    CHECK(t5.rows.count(1) == 1);
    CHECK(t5.rows.count(3) == 1);
    CHECK(t5.rows.count(5) == 1);
    CHECK(prob_table(1).rows.at(1) == QSqrt2(1));
}

TEST_CASE("exact normalization and bounds up to n = 16") {
    for (int n = 1; n <= 16; ++n) {
        const auto t = prob_table(n);
        CAPTURE(n);
        CHECK(t.total() == QSqrt2(1));
        const QSqrt2 pnn = t.rows.at(n);
        for (const auto& [k, p] : t.rows) {
            CHECK(p.sign() >= 0);
            CHECK(p <= QSqrt2(1));
            if (n != 2) CHECK(pnn <= p);
        }
    }
}

TEST_CASE("all-real probability is not the minimum at n = 2") {
    // p_{2,2} = sqrt2/2 exceeds p_{2,0} = 1 - sqrt2/2; minimality holds from n = 3 on (checked above).
    CHECK(prob_nk(2, 0) < prob_nk(2, 2));
}

TEST_CASE("special cases with one and two pairs") {
    for (int n = 4; n <= 12; ++n) {
        const auto tr = rho_traces(n, 3);
        const QSqrt2 pnn = prob_all_real(n);
        CAPTURE(n);
        CHECK(prob_nk(n, n - 4) == pnn * QSqrt2(make_rational(1, 2)) * (tr[0] * tr[0] - tr[1]));
        if (n >= 6) {
            const QSqrt2 z3 = tr[0] * tr[0] * tr[0] - QSqrt2(3) * tr[0] * tr[1] + QSqrt2(2) * tr[2];
            CHECK(prob_nk(n, n - 6) == pnn * QSqrt2(make_rational(1, 6)) * z3);
        }
    }
}

TEST_CASE("generating function agrees with the zonal route") {
    for (int n = 2; n <= 16; ++n) {
        const auto g = generating_function(n);
        const auto t = prob_table(n);
        CAPTURE(n);
        REQUIRE(g.coefficients.size() == static_cast<std::size_t>(n / 2 + 1));
        for (std::size_t l = 0; l < g.coefficients.size(); ++l) {
            CHECK(g.coefficients[l] == t.rows.at(n - 2 * static_cast<int>(l)));
        }
        CHECK(g.at(QSqrt2(0)) == prob_all_real(n));
        CHECK(g.at(QSqrt2(1)) == QSqrt2(1));
    }
}

TEST_CASE("newton identities against direct determinant of 1 + z M") {
    Matrix<QSqrt2> m(2, 2);
    m(0, 0) = QSqrt2(1);
    m(0, 1) = QSqrt2::sqrt2();
    m(1, 0) = QSqrt2(3);
    m(1, 1) = QSqrt2(-2);
    const auto c = char_poly_from_traces(trace_powers(m, 2));
    CHECK(c[0] == QSqrt2(1));
    CHECK(c[1] == QSqrt2(-1));                                  // trace
    CHECK(c[2] == QSqrt2(-2) - QSqrt2(3) * QSqrt2::sqrt2());    // determinant
}

TEST_CASE("moments") {
    CHECK(moment_real_count(5, 0) == QSqrt2(1));
    CHECK(moment_real_count(2, 1) == QSqrt2::sqrt2());
    // second moment at n = 2: 4 p_{2,2}
    CHECK(moment_real_count(2, 2) == QSqrt2(2) * QSqrt2::sqrt2());
    for (int n = 1; n <= 16; ++n) {
        CAPTURE(n);
        CHECK(std::fabs(moment_real_count(n, 1).to_double() - expected_real_count(n)) < 1e-10);
    }
}

TEST_CASE("expected real count") {
    CHECK(expected_real_count(1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(expected_real_count(2) == doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
    const double e100 = expected_real_count(100);
    CHECK(std::fabs(e100 - expected_real_count_asymptotic(100, 2)) / e100 < 1e-3);
    // remainder after two corrections scales like n^{-5/2} * sqrt(n)
    for (int n : {50, 100, 200, 400}) {
        const double err = std::fabs(expected_real_count(n) - expected_real_count_asymptotic(n, 2));
        CHECK(err < 0.1 * std::pow(n, -2.0));
    }
    CHECK(std::fabs(expected_real_count(100) - expected_real_count_asymptotic(100, 4)) < 1e-10);
}

TEST_CASE("one pair: three routes") {
    for (int n = 2; n <= 12; ++n) {
        const QSqrt2 zonal = prob_one_pair_exact(n, OnePairRoute::zonal);
        const QSqrt2 lag = prob_one_pair_exact(n, OnePairRoute::laguerre);
        const long double leg = prob_one_pair_legendre(n);
        CAPTURE(n);
        CHECK(zonal == lag);
        CHECK(std::fabs(leg - zonal.to_long_double()) <= 1e-10L * zonal.to_long_double());
    }
    CHECK(prob_one_pair_exact(2, OnePairRoute::laguerre) == parse_qsqrt2("1 - 1/2*sqrt2"));
    CHECK(prob_one_pair_exact(12, OnePairRoute::zonal) == table_n12()[5].exact);
    CHECK_THROWS_AS(prob_one_pair_exact(4, OnePairRoute::legendre), std::invalid_argument);
}

TEST_CASE("one pair: asymptotics") {
    const auto a50 = prob_one_pair_asymptotic(50);
    const auto a100 = prob_one_pair_asymptotic(100);
    CHECK(a50.ratio() >= 0.97L);
    CHECK(a50.ratio() <= 1.03L);
    CHECK(std::fabs(a100.ratio() - 1) < std::fabs(a50.ratio() - 1));
    for (int n = 3; n <= 40; ++n) CHECK(closed_form_trace(n) > QSqrt2(1));
}

TEST_CASE("tau series") {
    const auto legendre = tau_series(20);
    const auto exact = tau_series_exact(20);
    CHECK(exact[0] == parse_qsqrt2("-1/2 + 1/2*sqrt2"));
    for (int n = 0; n <= 20; ++n) {
        CAPTURE(n);
        const long double e = exact[n].to_long_double();
        CHECK(std::fabs(legendre[n] - e) <= 1e-12L * std::fabs(e));
    }
    // S_{n-2} relates to the one-pair probability
    for (int n = 2; n <= 12; ++n) {
        CHECK(prob_one_pair_exact(n, OnePairRoute::laguerre) == QSqrt2(2) * prob_all_real(n) * exact[n - 2]);
    }
    const auto c = tau_denominator_coefficients(30);
    for (long k = 0; k <= 30; ++k) CHECK(c[k] == k / 2 + 1);
    CHECK(tau_series_exact(0).size() == 1);
}

TEST_CASE("float table beyond the exact range") {
    const auto f = prob_table_float(12);
    const auto t = prob_table(12);
    for (const auto& [k, p] : t.rows) {
        CHECK(std::fabs(f.rows.at(k) - p.to_long_double()) <= 1e-17L + 1e-15L * p.to_long_double());
    }
    CHECK(f.error_estimate < 1e-25L);
    const auto big = prob_table_float(30);
    CHECK(big.normalization_residual < 1e-15L);
    CHECK(big.error_estimate < 1e-15L);
    long double total = 0;
    for (const auto& kv : big.rows) {
        CHECK(kv.second >= 0);
        total += kv.second;
    }
    CHECK(std::fabs(total - 1) < 1e-15L);
}
