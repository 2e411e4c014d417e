#include <doctest.h>

#include "ginoe/qsqrt2.hpp"

#include <cmath>
#include <random>

using namespace ginoe;

namespace {

QSqrt2 random_element(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 17);
    return {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("ring operations on simple elements") {
    const QSqrt2 one_plus(Rational(1), Rational(1));
    const QSqrt2 one_minus(Rational(1), Rational(-1));
    CHECK(one_plus * one_minus == QSqrt2(-1));
    CHECK(QSqrt2::sqrt2() * QSqrt2::sqrt2() == QSqrt2(2));
    CHECK(QSqrt2::sqrt2().inverse() == QSqrt2(Rational(0), make_rational(1, 2)));
    CHECK_THROWS_AS(QSqrt2(1) / QSqrt2(), std::domain_error);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(20240611);
    for (int t = 0; t < 200; ++t) {
        const QSqrt2 x = random_element(rng);
        const QSqrt2 y = random_element(rng);
        const QSqrt2 z = random_element(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        if (!x.is_zero()) CHECK(x * x.inverse() == QSqrt2(1));
    }
}

TEST_CASE("rationals are kept reduced") {
    const Rational r = make_rational(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(make_rational(0, 5).get_den() == 1);
}

TEST_CASE("conversion to double") {
    CHECK(QSqrt2(1).to_double() == 1.0);
    CHECK(QSqrt2(Rational(0), make_rational(1, 2)).to_double() == 0.7071067811865476);
    const QSqrt2 p12_2 = parse_qsqrt2("-6182824264509/4398046511104 + 356179603371/274877906944*sqrt2");
    CHECK(std::round(p12_2.to_double() * 1e6) / 1e6 == doctest::Approx(0.426689).epsilon(1e-12));
}

TEST_CASE("conversion survives heavy cancellation") {
    // (1 + sqrt2)^-40 is tiny while both components are huge.
    const QSqrt2 x = pow(QSqrt2(Rational(1), Rational(1)), 40).inverse();
    const auto expected = static_cast<double>(std::pow(1.0L + std::sqrt(2.0L), -40.0L));
    CHECK(std::fabs(x.to_double() - expected) <= 4 * std::numeric_limits<double>::epsilon() * expected);
    const long double ld = x.to_long_double();
    CHECK(std::fabs(static_cast<double>(ld) - expected) <= 4 * std::numeric_limits<double>::epsilon() * expected);
}

TEST_CASE("to_double is monotone against exact ordering") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 500; ++t) {
        const QSqrt2 x = random_element(rng);
        const QSqrt2 y = random_element(rng);
        if (x < y) CHECK(x.to_double() <= y.to_double());
        if (y < x) CHECK(y.to_double() <= x.to_double());
    }
}

TEST_CASE("exact sign") {
    CHECK(QSqrt2(Rational(-1), Rational(1)).sign() == 1);   // sqrt2 - 1
    CHECK(QSqrt2(Rational(3), Rational(-2)).sign() == 1);   // 3 - 2 sqrt2 > 0
    CHECK(QSqrt2(Rational(-3), Rational(2)).sign() == -1);
    CHECK(QSqrt2(Rational(7), Rational(-5)).sign() == -1);  // 49 < 50
    CHECK(QSqrt2().sign() == 0);
}

TEST_CASE("parse and render") {
    CHECK(parse_qsqrt2("1/8589934592") == QSqrt2(make_rational(1, 8589934592L)));
    CHECK(parse_qsqrt2("-1/2 + 1/2*sqrt2") == QSqrt2(make_rational(-1, 2), make_rational(1, 2)));
    CHECK(render(parse_qsqrt2("3/6")) == "1/2");
    CHECK(render(parse_qsqrt2("2/4 - 6/3*sqrt2")) == "1/2 - 2*sqrt2");
    CHECK(render(QSqrt2(Rational(0), Rational(-1))) == "0 - 1*sqrt2");
    CHECK_THROWS_AS(parse_qsqrt2("1/0"), ParseError);
    CHECK_THROWS_AS(parse_qsqrt2("1 +"), ParseError);
    CHECK_THROWS_AS(parse_qsqrt2("abc"), ParseError);
    CHECK_THROWS_AS(parse_qsqrt2("1 + 2*sqrt3"), ParseError);
    CHECK_THROWS_AS(parse_qsqrt2("1/-2"), ParseError);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        const QSqrt2 x = random_element(rng);
        CHECK(parse_qsqrt2(render(x)) == x);
    }
}
