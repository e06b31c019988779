// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "pqg/ensemble.hpp"

using namespace pqg;
using cplx = std::complex<double>;

TEST_CASE("parameter validation") {
    CHECK_THROWS(EnsembleParams{0, 0.0, 1}.validate());
    CHECK_THROWS(EnsembleParams{1, -0.5, 1}.validate());
    CHECK_THROWS(EnsembleParams{1, 0.0, 0}.validate());
    CHECK_NOTHROW(EnsembleParams{3, 2.5, 10}.validate());
}

TEST_CASE("radial moments") {
    EnsembleParams params{2, 1.5, 1};
    for (int k : {0, 1, 5}) {
        double want = 2.0 * (std::log(M_PI) + std::lgamma(1.5 + k + 1.0));
        CHECK(log_moment_s(params, k) == doctest::Approx(want).epsilon(1e-14));
    }
}

TEST_CASE("norms h_k") {
    EnsembleParams params{3, 0.5, 1};
    for (int k : {0, 2}) {
        double want =
            3.0 * (std::log(M_PI) + std::lgamma(0.5 + 2.0 * k + 2.0)) -
            std::log(2.0);
        CHECK(log_h(params, k) == doctest::Approx(want).epsilon(1e-14));
    }
}

TEST_CASE("even polynomial coefficients against the closed recurrence") {
    // p_2(z) = z^2 + (m+2)^n, p_4(z) = z^4 + (m+4)^n z^2 + (m+4)^n (m+2)^n.
    int const n = 2;
    double const m = 1.0;
    EnsembleParams params{n, m, 3};
    SkewPolyBasis basis = build_basis(params, 2);
    double c2 = std::pow(m + 2.0, n);
    double c4 = std::pow(m + 4.0, n);
    CHECK(std::exp(basis.even_log_coeffs[1][0]) ==
          doctest::Approx(c2).epsilon(1e-13));
    CHECK(std::exp(basis.even_log_coeffs[1][1]) == doctest::Approx(1.0));
    CHECK(std::exp(basis.even_log_coeffs[2][0]) ==
          doctest::Approx(c4 * c2).epsilon(1e-13));
    CHECK(std::exp(basis.even_log_coeffs[2][1]) ==
          doctest::Approx(c4).epsilon(1e-13));
    CHECK(std::exp(basis.even_log_coeffs[2][2]) == doctest::Approx(1.0));
}

TEST_CASE("eval_poly agrees with naive power sums") {
    EnsembleParams params{3, 2.5, 4};
    SkewPolyBasis basis = build_basis(params, 3);
    cplx z{0.7, -1.3};
    for (int k = 0; k <= 3; ++k) {
        cplx naive = 0.0;
        for (int l = 0; l <= k; ++l) {
            naive += std::exp(basis.even_log_coeffs[k][l]) *
                     std::pow(z, 2 * l);
        }
        cplx got = eval_poly(basis, 2 * k, z);
        CHECK(std::abs(got - naive) < 1e-12 * std::abs(naive));
        cplx odd = eval_poly(basis, 2 * k + 1, z);
        CHECK(std::abs(odd - std::pow(z, 2 * k + 1)) <
              1e-12 * std::abs(odd));
    }
    CHECK_THROWS(eval_poly(basis, 8, z));
    CHECK_THROWS(eval_poly(basis, -1, z));
}

TEST_CASE("monomial skew products") {
    EnsembleParams params{2, 0.0, 1};
    // <z^a | z^b> = (1/2)(s_{b+1} d_{a,b+1} - s_{a+1} d_{b,a+1}).
    double s2 = std::exp(log_moment_s(params, 2));
    CHECK(skew_product_monomials(params, 2, 1) ==
          doctest::Approx(0.5 * s2).epsilon(1e-14));
    CHECK(skew_product_monomials(params, 1, 2) ==
          doctest::Approx(-0.5 * s2).epsilon(1e-14));
    CHECK(skew_product_monomials(params, 3, 1) == 0.0);
    CHECK(skew_product_monomials(params, 2, 2) == 0.0);
}

TEST_CASE("polynomial skew product matches a hand expansion") {
    EnsembleParams params{1, 0.0, 2};
    // p(z) = z + 3, q(z) = z^2 - 1:
    // <p|q> = <z|z^2> + 3<1|q> - <z|1>*... expand over monomials directly.
    std::vector<double> p{3.0, 1.0};
    std::vector<double> q{-1.0, 0.0, 1.0};
    double want = 0.0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 3; ++b) {
            want += p[a] * q[b] * skew_product_monomials(params, a, b);
        }
    }
    SkewValue got = skew_product_polys(params, p, q);
    CHECK(got.value == doctest::Approx(want).epsilon(1e-13));
    CHECK(got.scale > 0.0);
    SkewValue swapped = skew_product_polys(params, q, p);
    CHECK(swapped.value == doctest::Approx(-want).epsilon(1e-13));
}
