// SPDX-License-Identifier: Apache-2.0
//
// Independent reference implementations used only by the verification
// suite and the tests. Nothing here shares a code path with the library
// evaluators it is used to check.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace pqg::oracles {

/// K_0(z) from the integral representation int_0^inf exp(-z cosh t) dt.
/// The integrand decays double-exponentially; a fine trapezoid is exact
/// to machine precision.
inline double bessel_k0(double z) {
    if (!(z > 0.0)) throw std::domain_error("bessel_k0: z must be positive");
    double const h = 1e-3;
    double sum = 0.5 * std::exp(-z);  // t = 0 term
    for (int j = 1;; ++j) {
        double t = j * h;
        double term = std::exp(-z * std::cosh(t));
        sum += term;
        if (term < 1e-320 || t > 40.0) break;
    }
    return sum * h;
}

/// Pfaffian by recursive expansion along the first row; O(dim!!), usable
/// to dim ~ 10.
inline std::complex<double> pfaffian_expansion(Eigen::MatrixXcd const& A) {
    auto const dim = A.rows();
    if (dim % 2 != 0) throw std::invalid_argument("pfaffian_expansion: odd dim");
    if (dim == 0) return 1.0;
    if (dim == 2) return A(0, 1);
    std::complex<double> result = 0.0;
    double sign = 1.0;
    for (Eigen::Index j = 1; j < dim; ++j) {
        Eigen::MatrixXcd minor(dim - 2, dim - 2);
        Eigen::Index r = 0;
        for (Eigen::Index a = 1; a < dim; ++a) {
            if (a == j) continue;
            Eigen::Index c = 0;
            for (Eigen::Index b = 1; b < dim; ++b) {
                if (b == j) continue;
                minor(r, c++) = A(a, b);
            }
            ++r;
        }
        result += sign * A(0, j) * pfaffian_expansion(minor);
        sign = -sign;
    }
    return result;
}

/// Gauss-Hermite nodes and weights (weight e^{-x^2}) via Golub-Welsch.
/// Exact for polynomial integrands of degree <= 2*points - 1.
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

inline GaussHermiteRule gauss_hermite(int points) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(points, points);
    for (int i = 1; i < points; ++i) {
        double b = std::sqrt(0.5 * i);
        J(i, i - 1) = b;
        J(i - 1, i) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(J);
    GaussHermiteRule rule;
    rule.nodes.resize(points);
    rule.weights.resize(points);
    double const sqrt_pi = std::sqrt(M_PI);
    for (int i = 0; i < points; ++i) {
        rule.nodes[i] = solver.eigenvalues()(i);
        double v0 = solver.eigenvectors()(0, i);
        rule.weights[i] = sqrt_pi * v0 * v0;
    }
    return rule;
}

/// erf by its Taylor series; converges fast for |x| <= 3.
inline double erf_series(double x) {
    double term = x;
    double sum = x;
    for (int k = 1; k < 200; ++k) {
        term *= -x * x / k;
        double add = term / (2 * k + 1);
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return sum * 2.0 / std::sqrt(M_PI);
}

}  // namespace pqg::oracles
