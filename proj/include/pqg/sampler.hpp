// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "pqg/ensemble.hpp"

namespace pqg {

/// Splittable counter-seeded stream: splitmix64 state, Box-Muller normals.
/// A (seed, draw) pair fully determines the stream, independent of any
/// scheduling, so parallel draws stay reproducible.
class SampleRng {
  public:
    explicit SampleRng(std::uint64_t seed) : state_(seed) {}

    static SampleRng for_draw(std::uint64_t seed, std::uint64_t draw);

    std::uint64_t next_u64();
    double uniform();   // (0, 1)
    double gaussian();  // standard normal

  private:
    std::uint64_t state_;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

/// One induced-free (m = 0) quaternion Ginibre factor, stored as the N x N
/// block entries (u, v); the 2N x 2N complex matrix with blocks
/// [[u, -v*], [v, u*]] is expanded on demand.
struct QuaternionMatrix {
    int N = 0;
    Eigen::MatrixXcd u;
    Eigen::MatrixXcd v;

    Eigen::MatrixXcd expand() const;
};

/// Entries u, v are unit complex Gaussians (E|u|^2 = E|v|^2 = 1); at
/// N = 1 the eigenvalue z = Re u +- i sqrt(Im^2 u + |v|^2) then carries
/// the Gaussian weight e^{-|z|^2} of the m = 0 ensemble.
QuaternionMatrix sample_factor(int N, SampleRng& rng);

/// All eigenvalues of a dense complex matrix (Schur/QR, values only).
std::vector<std::complex<double>> eigenvalues_dense(Eigen::MatrixXcd const& M);

struct EigenvalueSample {
    EnsembleParams params;
    std::vector<std::complex<double>> eigenvalues;  // N upper-half reps
    double pairing_residual = 0.0;  // worst conjugate mismatch / spectral radius
    double det_residual = 0.0;      // | log prod |z|^2 - log |det P| |
    std::uint64_t seed = 0;
    std::uint64_t draw = 0;
    bool real_axis_tie = false;
};

/// Draw the n factors, form the product, extract and conjugate-pair the
/// eigenvalues. Requires m = 0 (no sampling construction exists for the
/// induced ensemble).
EigenvalueSample product_eigenvalues(EnsembleParams const& params,
                                     std::uint64_t seed, std::uint64_t draw);

enum class HistogramScaling { raw, scaled };

struct RadialHistogram {
    std::vector<double> edges;      // bins + 1 increasing edges
    std::vector<long long> counts;  // per bin
    long long overflow = 0;
    long long total = 0;  // counts + overflow = N * draws
    int draws = 0;
    EnsembleParams params;
    HistogramScaling scaling = HistogramScaling::raw;

    /// Density estimate and Poisson standard error for one bin. Raw bins
    /// estimate rho_N; scaled bins estimate the unit-mass scaled density.
    double density(int bin) const;
    double density_error(int bin) const;
};

/// Scaled mode divides |z| by (2N)^{n/2} before binning.
RadialHistogram radial_histogram(std::span<EigenvalueSample const> samples,
                                 HistogramScaling scaling, int bins,
                                 double r_max);

struct DensityComparison {
    std::vector<double> z_scores;  // per bin; NaN where expected < 5
    double max_abs_z = 0.0;
    double chi_square = 0.0;
    int dof = 0;
};

/// Per-bin z-scores of observed counts against the analytic radial
/// density; bins with expected count below 5 are excluded from the
/// chi-square.
DensityComparison compare_to_density(RadialHistogram const& hist,
                                     EnsembleParams const& params);

}  // namespace pqg
