// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <span>
#include <vector>

namespace pqg {

/// The triple (n, m, N): n factor matrices, induced exponent m, quaternion
/// dimension N (factors are 2N x 2N complex).
struct EnsembleParams {
    int n = 1;
    double m = 0.0;
    int N = 1;

    void validate() const;
};

/// log s_k where s_k = pi^n Gamma(m+k+1)^n, the radial moments of the
/// weight: \int d^2z w(z) z^k z*^l = s_k delta_{kl}.
double log_moment_s(EnsembleParams const& params, int k);

/// log h_k with h_k = (1/2) (pi Gamma(m+2k+2))^n.
double log_h(EnsembleParams const& params, int k);

/// Monic skew-orthogonal polynomials of the product weight.
/// p_{2k+1}(z) = z^{2k+1};
/// p_{2k}(z)   = sum_{l=0..k} [prod_{j=l+1..k} (m+2j)^n] z^{2l}.
/// Coefficients are stored as logs; they are positive and overflow double
/// precision for large k.
struct SkewPolyBasis {
    EnsembleParams params;
    int max_index = 0;  // K: even polynomials up to p_{2K}
    std::vector<std::vector<double>> even_log_coeffs;  // [k][l], l = 0..k
    std::vector<double> log_h;                         // log h_k, k = 0..K
};

SkewPolyBasis build_basis(EnsembleParams const& params, int K);

/// p_degree(z). Odd degrees are plain monomials. Throws std::invalid_argument
/// for degree outside [0, 2K+1].
std::complex<double> eval_poly(SkewPolyBasis const& basis, int degree,
                               std::complex<double> z);

/// <z^a | z^b>_S = (1/2)(s_{b+1} d_{a,b+1} - s_{a+1} d_{b,a+1}).
double skew_product_monomials(EnsembleParams const& params, int a, int b);

/// Skew product of two polynomials given by coefficient lists (index =
/// power). `scale` is the sum of absolute term magnitudes, the natural
/// yardstick for "vanishes" assertions.
struct SkewValue {
    double value = 0.0;
    double scale = 0.0;
};

SkewValue skew_product_polys(EnsembleParams const& params,
                             std::span<double const> p,
                             std::span<double const> q);

}  // namespace pqg
