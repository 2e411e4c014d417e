#include "ginoe/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ginoe {

namespace {

// Nodes and weights from the symmetric Jacobi matrix with zero diagonal.
QuadratureRule golub_welsch(int points, const std::function<long double(int)>& offdiag, long double mu0) {
    if (points < 1) throw std::invalid_argument("quadrature needs at least one point");
    using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    Mat j = Mat::Zero(points, points);
    for (int k = 1; k < points; ++k) {
        j(k, k - 1) = offdiag(k);
        j(k - 1, k) = offdiag(k);
    }
    Eigen::SelfAdjointEigenSolver<Mat> eig(j);
    QuadratureRule rule;
    for (int k = 0; k < points; ++k) {
        rule.nodes.push_back(eig.eigenvalues()(k));
        const long double v0 = eig.eigenvectors()(0, k);
        rule.weights.push_back(mu0 * v0 * v0);
    }
    return rule;
}

}  // namespace

QuadratureRule gauss_hermite(int points) {
    return golub_welsch(
        points, [](int k) { return std::sqrt(k / 2.0L); }, std::sqrt(std::numbers::pi_v<long double>));
}

QuadratureRule gauss_legendre(int points) {
    return golub_welsch(
        points,
        [](int k) {
            const long double kk = k;
            return kk / std::sqrt(4.0L * kk * kk - 1.0L);
        },
        2.0L);
}

long double scaled_erfc_weight(long double y) {
    const long double x = std::sqrt(2.0L) * y;
    if (x < 20.0L) return std::exp(y * y) * std::erfc(x);
    // Asymptotic series of erfc; e^{y^2} erfc(sqrt2 y) = e^{-y^2} erfcx(sqrt2 y)
    long double term = 1.0L;
    long double sum = 1.0L;
    const long double inv = 1.0L / (2.0L * x * x);
    for (int k = 1; k < 12; ++k) {
        term *= -(2 * k - 1) * inv;
        sum += term;
    }
    return std::exp(-y * y) * sum / (x * std::sqrt(std::numbers::pi_v<long double>));
}

long double half_line_integral(const std::function<long double(long double)>& f, int points) {
    const auto rule = gauss_legendre(points);
    long double acc = 0.0L;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const long double t = (rule.nodes[k] + 1.0L) / 2.0L;
        const long double y = t / (1.0L - t);
        const long double jac = 1.0L / ((1.0L - t) * (1.0L - t));
        acc += rule.weights[k] / 2.0L * jac * f(y);
    }
    return acc;
}

WeightedPoints ginoe_measure_points(int x_points, int y_points) {
    const auto hx = gauss_hermite(x_points);
    const auto ly = gauss_legendre(y_points);
    WeightedPoints out;
    for (std::size_t a = 0; a < hx.nodes.size(); ++a) {
        for (std::size_t b = 0; b < ly.nodes.size(); ++b) {
            const long double t = (ly.nodes[b] + 1.0L) / 2.0L;
            const long double y = t / (1.0L - t);
            const long double jac = 1.0L / ((1.0L - t) * (1.0L - t));
            const long double w = hx.weights[a] * ly.weights[b] / 2.0L * jac * scaled_erfc_weight(y);
            out.points.emplace_back(hx.nodes[a], y);
            out.weights.emplace_back(w, 0.0L);
        }
    }
    return out;
}

}  // namespace ginoe
