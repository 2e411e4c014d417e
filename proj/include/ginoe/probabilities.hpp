#pragma once

#include "ginoe/kernel.hpp"
#include "ginoe/qsqrt2.hpp"

#include <map>
#include <vector>

namespace ginoe {

struct ProbabilityTable {
    int n = 0;
    std::map<int, QSqrt2> rows;  // k -> p_{n,k}, only k with n-k even
    QSqrt2 total() const;
};

/// Coefficients of G_n(z) = sum_l c_l z^l; c_l = p_{n,n-2l}.
struct GenFuncPoly {
    int n = 0;
    std::vector<QSqrt2> coefficients;
    QSqrt2 at(const QSqrt2& z) const;
};

/// 2^{-n(n-1)/4} exactly.
QSqrt2 prob_all_real(int n);

/// tr rho, tr rho^2, ..., tr rho^count for the given n (empty when n < 2).
std::vector<QSqrt2> rho_traces(int n, unsigned count);

QSqrt2 prob_nk(int n, int k);
/// Same as prob_nk but reuses precomputed traces of rho(n).
QSqrt2 prob_nk_from_traces(int n, int k, const std::vector<QSqrt2>& traces);
ProbabilityTable prob_table(int n);

/// Float table for n beyond the exact cap. Traces and Newton's identities run in
/// GMP floats at two precisions; error_estimate is the largest disagreement.
struct FloatProbabilityTable {
    int n = 0;
    std::map<int, long double> rows;
    long double error_estimate = 0;
    long double normalization_residual = 0;  // |1 - sum of entries|
};
FloatProbabilityTable prob_table_float(int n, unsigned bits = 0);

/// Coefficients of det(1 + z M) from traces of powers of M (Newton's identities).
std::vector<QSqrt2> char_poly_from_traces(const std::vector<QSqrt2>& traces);

GenFuncPoly generating_function(int n);

/// E[N^q] for the number N of real eigenvalues, from the generating function.
QSqrt2 moment_real_count(int n, int q);

/// 1/2 + sqrt2 * 2F1(1,-1/2;n;1/2) / B(n,1/2).
double expected_real_count(int n);
/// Large-n expansion of E_n with the given number of correction terms (0..4).
double expected_real_count_asymptotic(int n, int terms = 4);

enum class OnePairRoute { zonal, laguerre, legendre };

/// p_{n,n-2} through one of the three routes; the legendre route is float only.
QSqrt2 prob_one_pair_exact(int n, OnePairRoute route);
long double prob_one_pair_legendre(int n);
/// p_{n,n-2}/p_{n,n} through the Legendre sum (avoids underflow of p_{n,n}).
long double one_pair_ratio_legendre(int n);

struct OnePairAsymptotic {
    long double estimate_ratio;  // 3^{n+1/2}/(8 sqrt(pi n)), i.e. estimate / p_{n,n}
    long double exact_ratio;     // p_{n,n-2}/p_{n,n}
    long double ratio() const { return exact_ratio / estimate_ratio; }
};
OnePairAsymptotic prob_one_pair_asymptotic(int n);

/// S_0..S_N from the Legendre sum.
std::vector<long double> tau_series(int N);
/// Taylor coefficients c_0..c_N of 1/((1-z)^2 (1+z)).
std::vector<long> tau_denominator_coefficients(int N);
/// S_0..S_N as exact Taylor coefficients of the generating function tau(z).
std::vector<QSqrt2> tau_series_exact(int N);

}  // namespace ginoe
