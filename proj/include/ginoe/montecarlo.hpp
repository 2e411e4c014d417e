#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <vector>

namespace ginoe {

struct MCConfig {
    int n = 2;
    std::int64_t samples = 1;  // zero gives an empty run
    std::uint64_t master_seed = 0;
    int workers = 1;
};

struct MCRunResult {
    int n = 0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    std::map<int, std::int64_t> counts;  // k -> number of samples with k real eigenvalues
    double elapsed_seconds = 0;

    double frequency(int k) const;
};

/// n x n matrix of standard normals for one sample. Draws come from a SplitMix64 hash of
/// (master_seed, sample_index, pair index) fed through Box-Muller, filled row by row.
Eigen::MatrixXd sample_matrix(int n, std::uint64_t master_seed, std::uint64_t sample_index);

/// Number of 1x1 diagonal blocks in the real Schur form.
int count_real_eigs(const Eigen::MatrixXd& m);
/// Diagonal entries of the 1x1 Schur blocks.
std::vector<double> real_eigenvalues(const Eigen::MatrixXd& m);

MCRunResult run_mc(const MCConfig& cfg);

/// Histogram of all real eigenvalues over the run. Bin j counts [edges[j], edges[j+1]);
/// the result has edges.size()+1 cells with underflow first and overflow last.
std::vector<std::int64_t> real_eigenvalue_histogram(const MCConfig& cfg, const std::vector<double>& edges);

/// Mean density of real eigenvalues.
double density_real(int n, double x);
/// Mean density of nonreal eigenvalues at x + iy; even in y.
double density_complex(int n, double x, double y);

struct DensityProfile {
    int n = 0;
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<double> real;                  // density_real at xs
    std::vector<std::vector<double>> complex;  // [i][j] = density_complex(xs[i], ys[j])
};
DensityProfile density_profiles(int n, const std::vector<double>& xs, const std::vector<double>& ys);

/// Expected mean number of real eigenvalues per matrix in [a, b].
double real_density_mass(int n, double a, double b);

struct ChiSquare {
    double statistic = 0;
    int dof = 0;
    double p_value = 1;
};
/// Pearson test of a histogram from real_eigenvalue_histogram against density_real.
/// Adjacent cells are merged until each expects at least 5 counts.
ChiSquare chi_square_real_histogram(int n, std::int64_t samples, const std::vector<double>& edges,
                                    const std::vector<std::int64_t>& counts);

}  // namespace ginoe
