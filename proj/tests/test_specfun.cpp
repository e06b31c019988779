// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "pqg/errors.hpp"
#include "pqg/oracles.hpp"
#include "pqg/specfun.hpp"

using namespace pqg;
using cplx = std::complex<double>;

// Reference values frozen from an arbitrary-precision evaluation.
TEST_CASE("log_gamma matches arbitrary-precision references") {
    struct Ref {
        cplx s;
        cplx value;
    };
    Ref const refs[] = {
        {{3.5, 2.0}, {0.58073321208126816934, 2.3353168419161627716}},
        {{0.5, -4.0}, {-5.3642467739809945135, -1.555632879259510317}},
        {{0.001, 2.0}, {-2.568511437974074286, -1.4393294421361392699}},
        {{25.0, 0.001}, {54.784729377706987567, 0.003198742513129520628}},
    };
    for (auto const& r : refs) {
        cplx got = specfun::log_gamma(r.s);
        CHECK(std::abs(got - r.value) < 1e-12 * (1.0 + std::abs(r.value)));
    }
}

TEST_CASE("log_gamma agrees with real lgamma on the positive axis") {
    for (double x : {0.1, 0.5, 1.0, 2.7, 11.9, 30.0}) {
        CHECK(specfun::log_gamma(cplx(x, 0.0)).real() ==
              doctest::Approx(std::lgamma(x)).epsilon(1e-13));
        CHECK(specfun::log_gamma(cplx(x, 0.0)).imag() == 0.0);
    }
}

TEST_CASE("log_gamma throws at the poles") {
    CHECK_THROWS_AS(specfun::log_gamma(cplx(0.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(specfun::log_gamma(cplx(-3.0, 0.0)), std::domain_error);
}

TEST_CASE("meijer_g reduces to x^m e^{-x} at n = 1") {
    for (double m : {0.0, 1.0, 2.5}) {
        for (double x : {1e-3, 0.1, 1.0, 10.0, 300.0}) {
            double want = std::pow(x, m) * std::exp(-x);
            CHECK(specfun::meijer_g(1, m, x) ==
                  doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("meijer_g at n = 2, m = 0 equals 2 K_0(2 sqrt x)") {
    for (double x : {1e-8, 1e-3, 0.3, 2.0, 10.0, 25.0}) {
        double want = 2.0 * oracles::bessel_k0(2.0 * std::sqrt(x));
        CHECK(specfun::meijer_g(2, 0.0, x) ==
              doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("meijer_g matches arbitrary-precision references") {
    struct Ref {
        int n;
        double m;
        double x;
        double log_value;
    };
    Ref const refs[] = {
        {2, 0.0, 0.5, -0.73754969948874599389},
        {2, 0.0, 10.0, -6.3462472214776798682},
        {2, 1.0, 3.0, -2.0997639138203503481},
        {3, 0.0, 2.0, -2.8006420186289719399},
        {3, 2.5, 7.0, -0.28767021637587980728},
        {2, 0.0, 1e-8, 2.8487537062599650512},
        {3, 1.0, 1e-6, -9.491680428536697814},
        {3, 125.0, 3.4e7, 1191.3579493668979458},
    };
    for (auto const& r : refs) {
        CHECK(specfun::log_meijer_g(r.n, r.m, r.x) ==
              doctest::Approx(r.log_value).epsilon(1e-10));
    }
}

TEST_CASE("meijer_g asymptotic form converges at large argument") {
    for (int n : {1, 2, 3}) {
        double r = 40.0;  // x = 1600
        double exact = specfun::log_meijer_g(n, 1.0, r * r);
        double approx = specfun::log_meijer_g_asymptotic(n, 1.0, r);
        CHECK(std::abs(exact - approx) < 0.02);
    }
}

TEST_CASE("meijer_g domain errors") {
    CHECK_THROWS_AS(specfun::log_meijer_g(0, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(specfun::log_meijer_g(2, -1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(specfun::log_meijer_g(2, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(specfun::log_meijer_g(2, 0.0, -3.0), std::domain_error);
}

TEST_CASE("hyp_1f2n matches arbitrary-precision references") {
    struct Ref {
        int n;
        double m;
        double y;
        double value;
    };
    Ref const refs[] = {
        {2, 0.0, 1.3, 1.6081779116617279312},
        {3, 2.5, 10.0, 1.0424472656736882631},
        {1, 1.0, 4.0, 3.2885291045020608287},
    };
    for (auto const& r : refs) {
        CHECK(specfun::hyp_1f2n(r.n, r.m, r.y) ==
              doctest::Approx(r.value).epsilon(1e-13));
    }
    CHECK(specfun::hyp_1f2n(2, 0.0, 0.0) == 1.0);
}

TEST_CASE("erfc matches the series oracle") {
    for (double x : {-2.0, -0.5, 0.0, 0.7, 2.5}) {
        CHECK(specfun::erfc(x) ==
              doctest::Approx(1.0 - oracles::erf_series(x)).epsilon(1e-13));
    }
}
