// SPDX-License-Identifier: Apache-2.0
#include "pqg/ensemble.hpp"

#include <cmath>
#include <stdexcept>

namespace pqg {

namespace {
constexpr double kLogPi = 1.1447298858494001741434273513531;
}

void EnsembleParams::validate() const {
    if (n < 1) throw std::invalid_argument("EnsembleParams: n must be >= 1");
    if (N < 1) throw std::invalid_argument("EnsembleParams: N must be >= 1");
    if (m < 0.0) throw std::invalid_argument("EnsembleParams: m must be >= 0");
}

double log_moment_s(EnsembleParams const& params, int k) {
    params.validate();
    if (k < 0) throw std::invalid_argument("log_moment_s: k must be >= 0");
    return params.n * (kLogPi + std::lgamma(params.m + k + 1.0));
}

double log_h(EnsembleParams const& params, int k) {
    params.validate();
    if (k < 0) throw std::invalid_argument("log_h: k must be >= 0");
    return params.n * (kLogPi + std::lgamma(params.m + 2.0 * k + 2.0)) -
           std::log(2.0);
}

SkewPolyBasis build_basis(EnsembleParams const& params, int K) {
    params.validate();
    if (K < 0) throw std::invalid_argument("build_basis: K must be >= 0");
    SkewPolyBasis basis;
    basis.params = params;
    basis.max_index = K;
    basis.even_log_coeffs.resize(K + 1);
    basis.log_h.resize(K + 1);
    for (int k = 0; k <= K; ++k) {
        // log c_{2l} = sum_{j=l+1..k} n log(m+2j), built from the ratio
        // recursion c_{2j-2}/c_{2j} = (m+2j)^n walking l downward.
        auto& coeffs = basis.even_log_coeffs[k];
        coeffs.assign(k + 1, 0.0);
        double acc = 0.0;
        for (int l = k - 1; l >= 0; --l) {
            acc += params.n * std::log(params.m + 2.0 * (l + 1));
            coeffs[l] = acc;
        }
        basis.log_h[k] = log_h(params, k);
    }
    return basis;
}

std::complex<double> eval_poly(SkewPolyBasis const& basis, int degree,
                               std::complex<double> z) {
    if (degree < 0 || degree > 2 * basis.max_index + 1) {
        throw std::invalid_argument("eval_poly: degree out of basis range");
    }
    if (degree % 2 == 1) return std::pow(z, degree);
    int k = degree / 2;
    auto const& coeffs = basis.even_log_coeffs[k];
    std::complex<double> z2 = z * z;
    // Horner in z^2 with linear-scale coefficients.
    std::complex<double> result = 1.0;  // monic leading coefficient
    for (int l = k - 1; l >= 0; --l) {
        result = result * z2 + std::exp(coeffs[l]);
    }
    return result;
}

double skew_product_monomials(EnsembleParams const& params, int a, int b) {
    params.validate();
    if (a < 0 || b < 0) {
        throw std::invalid_argument("skew_product_monomials: negative power");
    }
    if (a == b + 1) return 0.5 * std::exp(log_moment_s(params, b + 1));
    if (b == a + 1) return -0.5 * std::exp(log_moment_s(params, a + 1));
    return 0.0;
}

SkewValue skew_product_polys(EnsembleParams const& params,
                             std::span<double const> p,
                             std::span<double const> q) {
    SkewValue out;
    for (std::size_t a = 0; a < p.size(); ++a) {
        if (p[a] == 0.0) continue;
        for (std::size_t b = 0; b < q.size(); ++b) {
            if (q[b] == 0.0) continue;
            double s = skew_product_monomials(params, int(a), int(b));
            if (s == 0.0) continue;
            double term = p[a] * q[b] * s;
            out.value += term;
            out.scale += std::abs(term);
        }
    }
    return out;
}

}  // namespace pqg
