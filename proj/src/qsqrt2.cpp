#include "ginoe/qsqrt2.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace ginoe {

namespace {

constexpr mp_bitcnt_t kFloatBits = 256;

// Returns a + b*sqrt2 as an mpf; the conjugate form avoids cancellation.
mpf_class to_mpf_parts(const Rational& a, const Rational& b, mp_bitcnt_t bits) {
    const mp_bitcnt_t kFloatBits = bits;
    mpf_class root2(2, kFloatBits);
    mpf_sqrt(root2.get_mpf_t(), root2.get_mpf_t());
    const mpf_class fa(a, kFloatBits);
    const mpf_class fb(b, kFloatBits);
    mpf_class out(0, kFloatBits);
    if (sgn(a) * sgn(b) >= 0) {
        out = fa + fb * root2;
        return out;
    }
    const mpf_class num(Rational(a * a - 2 * b * b), kFloatBits);
    mpf_class den(0, kFloatBits);
    den = fa - fb * root2;
    out = num / den;
    return out;
}

double checked_double(const mpf_class& v) {
    long exp = 0;
    mpf_get_d_2exp(&exp, v.get_mpf_t());
    if (exp > 1024) {
        throw std::overflow_error("QSqrt2 value out of double range");
    }
    // mpf_get_d truncates toward zero; step one ulp outward when the remainder exceeds half.
    const double trunc = v.get_d();
    if (trunc == 0.0 && sgn(v) == 0) return 0.0;
    const double outward = std::nextafter(trunc, sgn(v) > 0 ? HUGE_VAL : -HUGE_VAL);
    mpf_class rest(0, kFloatBits);
    rest = abs(v - mpf_class(trunc, kFloatBits));
    mpf_class half_ulp(0, kFloatBits);
    half_ulp = abs(mpf_class(outward, kFloatBits) - mpf_class(trunc, kFloatBits)) / 2;
    return cmp(rest, half_ulp) > 0 ? outward : trunc;
}

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(std::string_view tok) {
        skip_ws();
        if (s.substr(pos, tok.size()) == tok) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    bool done() {
        skip_ws();
        return pos == s.size();
    }
    std::string_view take_rational() {
        skip_ws();
        const std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        auto digits = [&] {
            const std::size_t d0 = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == d0) throw ParseError("expected digits in '" + std::string(s) + "'");
        };
        digits();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            digits();
        }
        return s.substr(start, pos - start);
    }
};

}  // namespace

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    Cursor c{text};
    const auto tok = c.take_rational();
    if (!c.done()) throw ParseError("trailing characters in rational '" + std::string(text) + "'");
    std::string body(tok);
    if (!body.empty() && body[0] == '+') body.erase(0, 1);
    const auto slash = body.find('/');
    if (slash != std::string::npos) {
        const mpz_class den(body.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        Rational r(mpz_class(body.substr(0, slash)), den);
        r.canonicalize();
        return r;
    }
    return Rational(mpz_class(body));
}

std::string render_rational(const Rational& r) { return r.get_str(); }

QSqrt2 QSqrt2::inverse() const {
    const Rational n = norm();
    if (sgn(n) == 0) throw std::domain_error("QSqrt2 division by zero");
    return {a_ / n, -b_ / n};
}

int QSqrt2::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sa == 0) return sb;
    if (sb == 0 || sa == sb) return sa;
    // Opposite signs: compare a^2 with 2b^2.
    const int c = cmp(a_ * a_, 2 * b_ * b_);
    return c == 0 ? 0 : (c > 0 ? sa : sb);
}

double QSqrt2::to_double() const { return checked_double(to_mpf_parts(a_, b_, kFloatBits)); }

mpf_class to_mpf(const QSqrt2& x, mp_bitcnt_t bits) { return to_mpf_parts(x.rational_part(), x.sqrt2_part(), bits); }

long double QSqrt2::to_long_double() const {
    const mpf_class v = to_mpf_parts(a_, b_, kFloatBits);
    const double hi = checked_double(v);
    mpf_class rest(0, kFloatBits);
    rest = v - mpf_class(hi, kFloatBits);
    return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
    Rational a = a_ * o.a_ + 2 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QSqrt2 pow(const QSqrt2& x, unsigned k) {
    QSqrt2 result(1);
    QSqrt2 base = x;
    while (k != 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k != 0) base *= base;
    }
    return result;
}

QSqrt2 parse_qsqrt2(std::string_view text) {
    Cursor c{text};
    const Rational a = parse_rational(c.take_rational());
    if (c.done()) return QSqrt2(a);
    int sign = 0;
    if (c.eat("+")) sign = 1;
    else if (c.eat("-")) sign = -1;
    else throw ParseError("expected '+' or '-' in '" + std::string(text) + "'");
    Rational b = parse_rational(c.take_rational());
    if (!c.eat("*") || !c.eat("sqrt2") || !c.done()) {
        throw ParseError("expected '*sqrt2' at end of '" + std::string(text) + "'");
    }
    if (sign < 0) b = -b;
    return {a, b};
}

std::string render(const QSqrt2& x) {
    const Rational& b = x.sqrt2_part();
    std::string out = render_rational(x.rational_part());
    if (sgn(b) == 0) return out;
    out += sgn(b) > 0 ? " + " : " - ";
    out += render_rational(abs(b));
    out += "*sqrt2";
    return out;
}

std::ostream& operator<<(std::ostream& os, const QSqrt2& x) { return os << render(x); }

}  // namespace ginoe
