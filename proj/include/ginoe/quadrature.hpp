#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace ginoe {

struct QuadratureRule {
    std::vector<long double> nodes;
    std::vector<long double> weights;
};

/// Gauss-Hermite rule for weight e^{-x^2} on the real line (Golub-Welsch).
QuadratureRule gauss_hermite(int points);
/// Gauss-Legendre rule on [-1, 1] (Golub-Welsch).
QuadratureRule gauss_legendre(int points);

/// e^{y^2} erfc(sqrt2 y) for y >= 0 without overflow.
long double scaled_erfc_weight(long double y);

/// int_0^inf f(y) dy with y = t/(1-t) and an N-point Gauss-Legendre rule in t.
long double half_line_integral(const std::function<long double(long double)>& f, int points);

/// Point masses approximating the measure e^{-x^2+y^2} erfc(sqrt2 y) dx dy on y > 0.
struct WeightedPoints {
    std::vector<std::complex<long double>> points;
    std::vector<std::complex<long double>> weights;
};
WeightedPoints ginoe_measure_points(int x_points, int y_points);

}  // namespace ginoe
