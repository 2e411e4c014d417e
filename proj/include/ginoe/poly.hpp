#pragma once

#include "ginoe/qsqrt2.hpp"

#include <vector>

namespace ginoe {

/// Dense univariate polynomial with rational coefficients; index = degree.
class PolyRational {
public:
    PolyRational() = default;
    explicit PolyRational(std::vector<Rational> coeffs);
    static PolyRational monomial(unsigned degree, Rational c = Rational(1));

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(unsigned k) const { return k < c_.size() ? c_[k] : Rational(0); }

    PolyRational& operator+=(const PolyRational& o);
    PolyRational& operator-=(const PolyRational& o);
    PolyRational& operator*=(const Rational& s);
    friend PolyRational operator+(PolyRational x, const PolyRational& y) { return x += y; }
    friend PolyRational operator-(PolyRational x, const PolyRational& y) { return x -= y; }
    friend PolyRational operator*(PolyRational x, const Rational& s) { return x *= s; }
    friend PolyRational operator*(const Rational& s, PolyRational x) { return x *= s; }
    friend PolyRational operator*(const PolyRational& x, const PolyRational& y);
    friend bool operator==(const PolyRational& x, const PolyRational& y) { return x.c_ == y.c_; }

    Rational operator()(const Rational& x) const;

    /// Horner evaluation in any scalar type constructible from long double.
    template <class T>
    T eval(const T& x) const {
        T acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * x + T(static_cast<long double>(it->get_d()));
        }
        return acc;
    }

private:
    void trim();
    std::vector<Rational> c_;
};

/// Physicists' Hermite polynomial H_j; H_{-1} is the zero polynomial.
PolyRational hermite(int j);

/// Generalized binomial coefficient for any integer top and k >= 0.
Rational binomial(long top, long k);
Rational factorial(long k);
/// (2k-1)!!, with (-1)!! = 1.
Rational double_factorial_odd(long k);

/// Coefficients of L_n^{a}(w) in powers of w for integer a; zero when n < 0.
/// Negative a is handled by the polynomial continuation of the binomial,
/// which agrees with L_n^{-k}(w) = (-w)^k (n-k)!/n! L_{n-k}^{k}(w).
PolyRational laguerre(int n, int a);

}  // namespace ginoe
