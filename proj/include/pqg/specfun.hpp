// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

namespace pqg::specfun {

/// Settings for the Mellin-Barnes contour quadrature behind meijer_g.
///
/// The integral runs along the vertical line Re s = contour_abscissa,
/// which must lie strictly right of the rightmost pole of Gamma(s+m)^n
/// at s = -m. The trapezoidal rule is applied with node spacing `step`
/// up to |Im s| = truncation, then both are refined adaptively until two
/// successive passes agree within `rel_tol`.
struct MellinBarnesConfig {
    double contour_abscissa;
    double truncation;
    double step;
    double rel_tol;

    static MellinBarnesConfig defaults(double m) {
        return {m + 1.0, 40.0, 0.5, 1e-10};
    }
};

/// Principal-branch log Gamma(s) for complex s off the poles.
/// Stirling series after argument shift, reflection for Re s < 0.5.
std::complex<double> log_gamma(std::complex<double> s);

/// Complementary error function.
double erfc(double x);

/// log of G^{n,0}_{0,n}(x | -; m,...,m), evaluated by Mellin-Barnes
/// quadrature of (1/2*pi*i) \int Gamma(s+m)^n x^{-s} ds. The contour is
/// moved to the saddle s+m = x^{1/n} when that lies right of
/// cfg.contour_abscissa + m; at a fixed abscissa the integral loses all
/// significant digits once x is large.
double log_meijer_g(int n, double m, double x, MellinBarnesConfig const& cfg);
double log_meijer_g(int n, double m, double x);

double meijer_g(int n, double m, double x, MellinBarnesConfig const& cfg);
double meijer_g(int n, double m, double x);

/// Large-argument approximation of meijer_g(n, m, r^2):
/// (2*pi)^{(n-1)/2}/sqrt(n) * r^{(1-n)/n} * r^{2m} * exp(-n r^{2/n}).
double log_meijer_g_asymptotic(int n, double m, double r);
double meijer_g_asymptotic(int n, double m, double r);

/// 1F2n(1; (m+2)/2 x n, (m+3)/2 x n; y) with all 2n lower parameters as
/// written. Converges for every finite y >= 0.
double hyp_1f2n(int n, double m, double y);

}  // namespace pqg::specfun
