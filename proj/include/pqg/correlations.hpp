// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>

#include "pqg/ensemble.hpp"

namespace pqg {

using cplx = std::complex<double>;

/// Weight of the product ensemble, w(z) = pi^{n-1} G^{n,0}_{0,n}(|z|^2).
/// Diverges logarithmically at z = 0 for n >= 2, m = 0.
double log_weight(EnsembleParams const& params, cplx z);
double weight(EnsembleParams const& params, cplx z);

/// Complex value carried as mant * exp(log_scale); keeps kernel sums well
/// inside floating range at large N and |z|.
struct ScaledComplex {
    cplx mant{0.0, 0.0};
    double log_scale = 0.0;

    cplx value() const { return mant * std::exp(log_scale); }
    double log_abs() const;
};

/// Antisymmetric prekernel kappa_N(u,v); all correlations derive from it.
/// Evaluated by the explicit double sum with running term ratios, so it
/// stays finite at N ~ 100 where naive powers and Gamma factors overflow.
class PrekernelEvaluator {
  public:
    explicit PrekernelEvaluator(EnsembleParams params);

    /// kappa_N(u,v) = -kappa_N(v,u), exactly.
    cplx operator()(cplx u, cplx v) const;

    /// Same value in scaled form; never overflows.
    ScaledComplex scaled(cplx u, cplx v) const;

    EnsembleParams const& params() const { return params_; }

  private:
    /// Sum with the argument-dependent rounding order; `scaled` wraps it
    /// in a canonical argument order so antisymmetry holds bit-exactly.
    ScaledComplex scaled_ordered(cplx u, cplx v) const;

    EnsembleParams params_;
    double log_prefactor_;  // log 2 - n (log pi + lgamma(m+1))
};

/// Independent route to the prekernel: the skew-orthogonal polynomial sum
/// sum_k (p_{2k+1}(u) p_{2k}(v) - p_{2k+1}(v) p_{2k}(u)) / h_k.
/// Linear-scale evaluation; intended for cross-checks at modest N.
cplx prekernel_from_basis(SkewPolyBasis const& basis, int N, cplx u, cplx v);

/// One-point density R_1(z) = (1/2)(z*-z) w(z) kappa_N(z,z*).
/// Vanishes identically on the real axis.
double density_R1(EnsembleParams const& params, cplx z);

/// Pfaffian of an even-dimensional antisymmetric matrix, pf(A)^2 = det(A).
/// Parlett-Reid elimination with greedy pivoting, O(dim^3). Verifies
/// antisymmetry to 1e-10 relative, then symmetrizes.
cplx pfaffian(Eigen::MatrixXcd A);

/// k-point correlation R_k from the Pfaffian of the 2k x 2k prekernel
/// matrix, rows and columns ordered (z_1, z_1*, z_2, z_2*, ...).
double correlation_Rk(EnsembleParams const& params, std::span<cplx const> pts);

/// Unnormalized joint eigenvalue density; a test oracle, sensible for
/// N <= 4 only (the product underflows beyond that).
double jpdf(EnsembleParams const& params, std::span<cplx const> zs);

}  // namespace pqg
