#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ginoe {

/// Arbitrary-precision rational; gmpxx keeps results of arithmetic canonical.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(std::string_view text);
std::string render_rational(const Rational& r);

/// Exact element a + b*sqrt(2) of the quadratic field Q(sqrt 2).
class QSqrt2 {
public:
    QSqrt2() : a_(0), b_(0) {}
    QSqrt2(long v) : a_(v), b_(0) {}  // NOLINT(google-explicit-constructor)
    QSqrt2(Rational a) : a_(std::move(a)), b_(0) {}  // NOLINT(google-explicit-constructor)
    QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QSqrt2 sqrt2() { return {Rational(0), Rational(1)}; }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    /// Field norm a^2 - 2b^2; zero only for the zero element.
    Rational norm() const { return a_ * a_ - 2 * b_ * b_; }
    QSqrt2 conjugate() const { return {a_, -b_}; }
    QSqrt2 inverse() const;

    /// Exact sign, no floating point involved.
    int sign() const;

    /// Nearest double; stays accurate when a and b*sqrt2 nearly cancel.
    double to_double() const;
    long double to_long_double() const;

    QSqrt2& operator+=(const QSqrt2& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QSqrt2& operator-=(const QSqrt2& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QSqrt2& operator*=(const QSqrt2& o);
    QSqrt2& operator/=(const QSqrt2& o) { return *this *= o.inverse(); }

    friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
    friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
    friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
    friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
    friend QSqrt2 operator-(const QSqrt2& x) { return {-x.a_, -x.b_}; }

    friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend std::strong_ordering operator<=>(const QSqrt2& x, const QSqrt2& y) {
        const int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    Rational a_;
    Rational b_;
};

QSqrt2 pow(const QSqrt2& x, unsigned k);

/// a + b*sqrt2 as a GMP float with the given mantissa bits.
mpf_class to_mpf(const QSqrt2& x, mp_bitcnt_t bits);

/// Text grammar: "R", "R + R*sqrt2", "R - R*sqrt2", "R*sqrt2"; R = [-]int[/posint].
QSqrt2 parse_qsqrt2(std::string_view text);
std::string render(const QSqrt2& x);
std::ostream& operator<<(std::ostream& os, const QSqrt2& x);

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace ginoe
