#pragma once

#include "ginoe/matrix.hpp"
#include "ginoe/poly.hpp"
#include "ginoe/quadrature.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ginoe {

using cld = std::complex<long double>;

/// Antisymmetric matrix stored by its strict upper triangle.
template <class T>
class SkewMatrix {
public:
    explicit SkewMatrix(std::size_t dim) : dim_(dim), upper_(dim * (dim > 0 ? dim - 1 : 0) / 2, T(0)) {}

    std::size_t dim() const { return dim_; }

    T operator()(std::size_t i, std::size_t j) const {
        if (i == j) return T(0);
        return i < j ? upper_[index(i, j)] : -upper_[index(j, i)];
    }
    /// Sets A(i,j) = v and A(j,i) = -v.
    void set(std::size_t i, std::size_t j, const T& v) {
        if (i == j) throw std::invalid_argument("diagonal of a skew matrix is fixed at zero");
        if (i < j) upper_[index(i, j)] = v;
        else upper_[index(j, i)] = -v;
    }

    Matrix<T> dense() const {
        Matrix<T> out(dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) out(i, j) = (*this)(i, j);
        return out;
    }

private:
    std::size_t index(std::size_t i, std::size_t j) const { return i * dim_ - i * (i + 1) / 2 + (j - i - 1); }
    std::size_t dim_;
    std::vector<T> upper_;
};

namespace detail {

template <class T>
T pfaffian_rec(const SkewMatrix<T>& a, std::vector<std::size_t>& idx) {
    if (idx.empty()) return T(1);
    const std::size_t first = idx.front();
    T acc(0);
    for (std::size_t j = 1; j < idx.size(); ++j) {
        const std::size_t col = idx[j];
        const T entry = a(first, col);
        if (entry == T(0)) continue;
        std::vector<std::size_t> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t k = 1; k < idx.size(); ++k)
            if (k != j) rest.push_back(idx[k]);
        T term = entry * pfaffian_rec(a, rest);
        if (j % 2 == 0) term = -term;
        acc += term;
    }
    return acc;
}

}  // namespace detail

/// Exact Pfaffian by expansion along the first row; any ring scalar, dimension <= 12.
template <class T>
T pfaffian_expand(const SkewMatrix<T>& a) {
    if (a.dim() % 2 != 0) throw std::invalid_argument("Pfaffian of odd dimension");
    if (a.dim() > 12) throw std::invalid_argument("exact Pfaffian limited to dimension 12");
    std::vector<std::size_t> idx(a.dim());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return detail::pfaffian_rec(a, idx);
}

/// Float Pfaffian by skew-symmetric Gaussian elimination (Parlett-Reid) with pivoting.
template <class T>
T pfaffian_eliminate(const SkewMatrix<T>& a) {
    const std::size_t n = a.dim();
    if (n % 2 != 0) throw std::invalid_argument("Pfaffian of odd dimension");
    Matrix<T> m = a.dense();
    T pf(1);
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        std::size_t piv = k + 1;
        for (std::size_t r = k + 2; r < n; ++r)
            if (std::abs(m(r, k)) > std::abs(m(piv, k))) piv = r;
        if (piv != k + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k + 1, c), m(piv, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(m(r, k + 1), m(r, piv));
            pf = -pf;
        }
        if (m(k + 1, k) == T(0)) return T(0);
        pf *= m(k, k + 1);
        // Eliminate row/column k against pivot pair (k, k+1).
        for (std::size_t i = k + 2; i < n; ++i) {
            const T tau_i = m(k, i) / m(k, k + 1);
            for (std::size_t j = k + 2; j < n; ++j) {
                const T tau_j = m(k, j) / m(k, k + 1);
                m(i, j) += tau_i * m(j, k + 1) - m(i, k + 1) * tau_j;
            }
        }
    }
    return pf;
}

/// Determinant by Gaussian elimination; partial pivoting by magnitude for floats,
/// first nonzero pivot otherwise.
template <class T>
T determinant(Matrix<T> m) {
    const std::size_t n = m.rows();
    T det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        if constexpr (requires(T x) { std::abs(x); }) {
            for (std::size_t r = k + 1; r < n; ++r)
                if (std::abs(m(r, k)) > std::abs(m(piv, k))) piv = r;
        } else {
            while (piv < n && m(piv, k) == T(0)) ++piv;
            if (piv == n) return T(0);
        }
        if (m(piv, k) == T(0)) return T(0);
        if (piv != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(piv, c));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            const T f = m(r, k) / m(k, k);
            for (std::size_t c = k; c < n; ++c) m(r, c) -= f * m(k, c);
        }
    }
    return det;
}

/// Polynomials q_j and antisymmetric coupling mu defining
/// Q(x,y) = 1/2 sum_{jk} q_j(x) mu_{jk} q_k(y) and D(x,y) = e^{-(x^2+y^2)/2} Q(x,y).
struct KernelContext {
    int n = 0;
    std::vector<std::vector<long double>> poly_coeffs;  // q_j, index = degree
    Matrix<cld> mu;

    /// Skew-orthogonal polynomials and pairing pattern for ensemble size n.
    static KernelContext ginoe(int n);
    /// Arbitrary polynomials and coupling; mu must be antisymmetric.
    static KernelContext custom(const std::vector<PolyRational>& polys, const Matrix<cld>& mu);

    std::vector<cld> eval_polys(const cld& x) const;
    cld q_kernel(const cld& x, const cld& y) const;
};

cld kernel_D(const KernelContext& ctx, const cld& x, const cld& y);

/// Joint density of the ell = (n-k)/2 complex pairs with given upper-half-plane members.
long double jpdf_complex(int n, int k, const std::vector<cld>& points);

struct DiscreteMeasure {
    std::vector<cld> points;
    std::vector<cld> weights;
};

DiscreteMeasure from_weighted_points(const WeightedPoints& wp);

/// upsilon_{ab} = i sum_k mu_{ak} int dpi [q_k(z) q_b(zbar) - q_b(z) q_k(zbar)].
Matrix<cld> upsilon(const KernelContext& ctx, const DiscreteMeasure& measure);

struct TheoremCheck {
    cld lhs;
    cld rhs;
    /// Largest sum of absolute summands on either side; the cancellation scale when both vanish.
    long double summand_scale = 0;
    long double abs_err() const { return std::abs(lhs - rhs); }
    long double rel_err() const;
    /// |lhs - rhs| <= rel_tol * max(|lhs|, |rhs|, summand_scale * 1e-6) or <= abs_floor.
    bool agrees(long double rel_tol = 1e-10L, long double abs_floor = 1e-12L) const;
};

/// Brute-force sum over all M^ell point tuples versus the zonal closed form.
TheoremCheck pfaffian_theorem_check(const KernelContext& ctx, int ell, const DiscreteMeasure& measure);

/// (i/2)^ell Z_{(1^ell)}(tr u/2, ..., tr u^ell/2).
cld zonal_of_upsilon(const Matrix<cld>& u, int ell);

/// Reproducible random instance: q_j of exact degree j with coefficients from
/// (-3..3)/(1..4), antisymmetric mu on the same grid, points and weights in a complex box.
struct TheoremInstance {
    KernelContext ctx;
    DiscreteMeasure measure;
};
TheoremInstance random_theorem_instance(int n, int points, std::uint64_t seed);

/// Coupling that makes upsilon = -2i * identity for the given polynomials and measure.
KernelContext projecting_control(const std::vector<PolyRational>& polys, const DiscreteMeasure& measure);

struct ProjectionReport {
    int n = 0;
    long double max_deviation = 0;  // max |upsilon_{ab} + 2i delta_{ab}|
    Matrix<cld> upsilon_matrix;
};

/// Default quadrature resolution for the measure e^{-x^2+y^2} erfc(sqrt2 y) on y > 0.
inline constexpr int kMeasureXPoints = 60;
inline constexpr int kMeasureYPoints = 200;

ProjectionReport projection_failure_check(int n);
/// Control: polynomials of the GinOE kernel with the coupling replaced by projecting_control.
ProjectionReport projection_control_check(int n);

/// int over [-half_width, half_width] x [0, half_width] of f(z) d^2z, tensor Gauss-Legendre.
/// Meant for integrands with Gaussian decay in |z|.
long double integrate_upper_half_plane(const std::function<long double(const cld&)>& f, int points = 120,
                                       long double half_width = 12.0L);

}  // namespace ginoe
