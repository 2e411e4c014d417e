#pragma once

#include "ginoe/matrix.hpp"
#include "ginoe/poly.hpp"
#include "ginoe/qsqrt2.hpp"

#include <string>
#include <vector>

namespace ginoe {

/// Value coeff * sqrt(pi); used for the skew norms h_j.
struct SqrtPiScaled {
    Rational coeff;
    long double to_long_double() const;
};

/// I_m = int_0^inf y^{2m+1} e^{y^2} erfc(sqrt2 y) dy.
QSqrt2 base_integral(unsigned m);

/// I_0 .. I_{count-1}, built by the exact recursion.
std::vector<QSqrt2> base_integral_table(unsigned count);

struct SkewPolys {
    int n = 0;
    std::vector<PolyRational> q;        // q_0 .. q_{n-1}
    std::vector<PolyRational> q_tilde;  // equal to q for even n
    std::vector<SqrtPiScaled> h;        // h_0 .. h_{floor(n/2)}
};

SkewPolys skew_polys(int n);
SqrtPiScaled skew_norm(int j);
/// h_beta / h_alpha, always rational.
Rational norm_ratio(int beta, int alpha);

enum class Parity { even, odd };

struct RhoMatrix {
    int n = 0;
    Parity parity = Parity::even;
    Matrix<QSqrt2> entries;  // floor(n/2) x floor(n/2)
};

struct SigmaMatrix {
    int n = 0;
    Matrix<QSqrt2> entries;  // n x n
};

/// Entry of the even-parity reduced matrix for any alpha, beta >= 0.
QSqrt2 rho_even_entry(int alpha, int beta);

RhoMatrix rho_matrix(int n);
SigmaMatrix sigma_matrix(int n);

QSqrt2 trace_power(const Matrix<QSqrt2>& m, unsigned j);
QSqrt2 trace_power(const RhoMatrix& m, unsigned j);
QSqrt2 trace_power(const SigmaMatrix& m, unsigned j);

/// tr rho = 2 int_0^inf y e^{y^2} erfc(sqrt2 y) L_{n-2}^2(-2y^2) dy, evaluated exactly.
QSqrt2 closed_form_trace(int n);

/// int_0^inf y^{y_power} P(w_scale * y^2) e^{y^2} erfc(sqrt2 y) dy as a combination of I_m.
/// y_power must be odd and every surviving monomial must give an integrable power (>= 1).
QSqrt2 integrate_with_weight(const PolyRational& p, const Rational& w_scale, int y_power,
                             const std::vector<QSqrt2>& base);

std::string parity_name(Parity p);

}  // namespace ginoe
