#include "ginoe/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ginoe {

PolyRational::PolyRational(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyRational PolyRational::monomial(unsigned degree, Rational c) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = std::move(c);
    return PolyRational(std::move(v));
}

void PolyRational::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

PolyRational& PolyRational::operator+=(const PolyRational& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

PolyRational& PolyRational::operator-=(const PolyRational& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

PolyRational& PolyRational::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

PolyRational operator*(const PolyRational& x, const PolyRational& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::vector<Rational> out(x.c_.size() + y.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
        for (std::size_t j = 0; j < y.c_.size(); ++j) out[i + j] += x.c_[i] * y.c_[j];
    }
    return PolyRational(std::move(out));
}

Rational PolyRational::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PolyRational hermite(int j) {
    if (j < 0) return {};
    PolyRational prev;                       // H_{-1}
    PolyRational cur = PolyRational::monomial(0);  // H_0
    const PolyRational two_x = PolyRational::monomial(1, Rational(2));
    for (int k = 0; k < j; ++k) {
        PolyRational next = two_x * cur - prev * Rational(2 * k);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational factorial(long k) {
    if (k < 0) throw std::domain_error("factorial of negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(f);
}

Rational double_factorial_odd(long k) {
    mpz_class f(1);
    for (long i = 3; i <= 2 * k - 1; i += 2) f *= i;
    return Rational(f);
}

Rational binomial(long top, long k) {
    if (k < 0) return Rational(0);
    mpz_class num(1);
    for (long i = 0; i < k; ++i) num *= (top - i);
    return Rational(num) / factorial(k);
}

PolyRational laguerre(int n, int a) {
    if (n < 0) return {};
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        Rational t = binomial(n + a, n - j) / factorial(j);
        c[static_cast<std::size_t>(j)] = (j % 2 == 0) ? t : Rational(-t);
    }
    return PolyRational(std::move(c));
}

}  // namespace ginoe
