// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "pqg/correlations.hpp"
#include "pqg/oracles.hpp"

using namespace pqg;

TEST_CASE("weight closed forms") {
    EnsembleParams g{1, 2.0, 1};
    cplx z{1.2, -0.7};
    double x = std::norm(z);
    CHECK(weight(g, z) ==
          doctest::Approx(x * x * std::exp(-x)).epsilon(1e-13));

    EnsembleParams two{2, 0.0, 1};
    double want = M_PI * 2.0 * oracles::bessel_k0(2.0 * std::sqrt(x));
    CHECK(weight(two, z) == doctest::Approx(want).epsilon(1e-10));
    CHECK_THROWS(weight(two, cplx(0.0, 0.0)));
}

TEST_CASE("prekernel at N = 1 is linear") {
    // kappa_1(u, v) = (u - v) / h_0 with h_0 = (1/2)(pi Gamma(m+2))^n.
    cplx u{0.4, 0.9}, v{-1.1, 0.2};
    for (int n : {1, 2, 3}) {
        for (double m : {0.0, 1.5}) {
            EnsembleParams params{n, m, 1};
            PrekernelEvaluator kernel(params);
            cplx want = 2.0 * (u - v) /
                        std::pow(M_PI * std::tgamma(m + 2.0), n);
            CHECK(std::abs(kernel(u, v) - want) < 1e-13 * std::abs(want));
        }
    }
    EnsembleParams base{1, 0.0, 1};
    cplx got = PrekernelEvaluator(base)(u, v);
    CHECK(std::abs(got - 2.0 / M_PI * (u - v)) < 1e-14);
}

TEST_CASE("prekernel at N = 2 matches the explicit term sum") {
    int const n = 2;
    double const m = 1.0;
    EnsembleParams params{n, m, 2};
    cplx u{0.8, 0.5}, v{-0.3, -1.2};
    auto term = [&](cplx a, cplx b) {
        // A_k(a) S_k(b) for k = 0, 1 written out longhand.
        double d1 = std::pow(m + 1.0, n);
        double d3 = std::pow(m + 3.0, n);
        double e2 = std::pow(m + 2.0, n);
        cplx t0 = a / d1;
        cplx t1 = (a * a * a / (d1 * d3)) * (1.0 + b * b / e2);
        return t0 + t1;
    };
    cplx want = 2.0 / std::pow(M_PI * std::tgamma(m + 1.0), n) *
                (term(u, v) - term(v, u));
    cplx got = PrekernelEvaluator(params)(u, v);
    CHECK(std::abs(got - want) < 1e-13 * std::abs(want));
}

TEST_CASE("prekernel antisymmetry is exact") {
    EnsembleParams params{3, 2.5, 8};
    PrekernelEvaluator kernel(params);
    cplx u{1.4, -2.2}, v{0.3, 3.0};
    CHECK(kernel(u, v) == -kernel(v, u));
    CHECK(kernel(u, u) == cplx(0.0, 0.0));
}

TEST_CASE("one-point density closed form at n = 1, m = 0, N = 1") {
    EnsembleParams params{1, 0.0, 1};
    for (cplx z : {cplx(0.5, 0.5), cplx(-1.0, 2.0), cplx(0.0, -0.8)}) {
        double y = z.imag();
        double want = 4.0 / M_PI * y * y * std::exp(-std::norm(z));
        CHECK(density_R1(params, z) == doctest::Approx(want).epsilon(1e-13));
    }
    CHECK(density_R1(params, cplx(1.3, 0.0)) == 0.0);
}

TEST_CASE("pfaffian closed forms") {
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(2, 2);
    A(0, 1) = cplx(3.0, -1.0);
    A(1, 0) = -A(0, 1);
    CHECK(std::abs(pfaffian(A) - cplx(3.0, -1.0)) < 1e-14);

    // pf = af - be + cd for the generic 4x4 case.
    cplx a{1, 2}, b{-0.5, 0.3}, c{2, 0}, d{0, 1}, e{1.5, -1}, f{-2, 0.7};
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(4, 4);
    B(0, 1) = a;
    B(0, 2) = b;
    B(0, 3) = c;
    B(1, 2) = d;
    B(1, 3) = e;
    B(2, 3) = f;
    B -= Eigen::MatrixXcd(B.transpose());
    cplx want = a * f - b * e + c * d;
    CHECK(std::abs(pfaffian(B) - want) < 1e-13 * std::abs(want));
}

TEST_CASE("pfaffian vs expansion oracle and determinant") {
    std::srand(12345);
    auto rnd = [] { return 2.0 * double(std::rand()) / RAND_MAX - 1.0; };
    for (int dim : {6, 8}) {
        Eigen::MatrixXcd M(dim, dim);
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) M(i, j) = cplx(rnd(), rnd());
        }
        Eigen::MatrixXcd A = M - Eigen::MatrixXcd(M.transpose());
        cplx pf = pfaffian(A);
        cplx ref = oracles::pfaffian_expansion(A);
        CHECK(std::abs(pf - ref) < 1e-11 * std::abs(ref));
        cplx det = A.determinant();
        CHECK(std::abs(pf * pf - det) < 1e-10 * std::abs(det));
    }
}

TEST_CASE("pfaffian input validation") {
    CHECK_THROWS(pfaffian(Eigen::MatrixXcd::Zero(3, 3)));
    Eigen::MatrixXcd S = Eigen::MatrixXcd::Identity(2, 2);
    CHECK_THROWS(pfaffian(S));
}

TEST_CASE("R_1 from the Pfaffian route equals the direct formula") {
    for (int n : {1, 2}) {
        EnsembleParams params{n, 1.0, 4};
        for (cplx z : {cplx(0.9, 1.1), cplx(-2.0, 0.4), cplx(0.2, -1.8)}) {
            std::vector<cplx> pts{z};
            double direct = density_R1(params, z);
            double via_pf = correlation_Rk(params, pts);
            CHECK(via_pf == doctest::Approx(direct).epsilon(1e-11));
        }
    }
}

TEST_CASE("R_2 is symmetric, real and nonnegative at spot points") {
    EnsembleParams params{2, 0.0, 3};
    cplx z1{0.8, 0.9}, z2{-1.2, -0.6};
    std::vector<cplx> a{z1, z2}, b{z2, z1};
    double r12 = correlation_Rk(params, a);
    double r21 = correlation_Rk(params, b);
    CHECK(r12 == doctest::Approx(r21).epsilon(1e-10));
    CHECK(r12 >= 0.0);
    std::vector<cplx> onreal{z1, cplx(0.5, 0.0)};
    CHECK(correlation_Rk(params, onreal) == 0.0);
}

TEST_CASE("R_2 factorizes at large separation") {
    EnsembleParams params{1, 0.0, 3};
    cplx z1{1.0, 1.0}, z2{-1.2, -1.4};
    std::vector<cplx> both{z1, z2};
    double r2 = correlation_Rk(params, both);
    double product = density_R1(params, z1) * density_R1(params, z2);
    CHECK(r2 == doctest::Approx(product).epsilon(0.05));
}

TEST_CASE("jpdf basics") {
    EnsembleParams params{1, 0.0, 1};
    cplx z{0.3, 0.8};
    double want = 0.25 * std::exp(-std::norm(z)) *
                  std::norm(z - std::conj(z));
    std::vector<cplx> zs{z};
    CHECK(jpdf(params, zs) == doctest::Approx(want).epsilon(1e-13));
    std::vector<cplx> real_pt{cplx(0.5, 0.0)};
    CHECK(jpdf(params, real_pt) == 0.0);
    std::vector<cplx> wrong_count{z, z};
    CHECK_THROWS(jpdf(params, wrong_count));
}
