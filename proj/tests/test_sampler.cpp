// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "pqg/io.hpp"
#include "pqg/sampler.hpp"

using namespace pqg;
using cplx = std::complex<double>;

TEST_CASE("rng streams are deterministic and draw-splittable") {
    SampleRng a = SampleRng::for_draw(42, 7);
    SampleRng b = SampleRng::for_draw(42, 7);
    SampleRng c = SampleRng::for_draw(42, 8);
    bool same = true, differs = false;
    for (int i = 0; i < 100; ++i) {
        auto x = a.next_u64();
        same = same && x == b.next_u64();
        differs = differs || x != c.next_u64();
    }
    CHECK(same);
    CHECK(differs);
}

TEST_CASE("uniform stays in (0,1); gaussian has the right moments") {
    SampleRng rng(9001);
    double sum = 0.0, sum2 = 0.0;
    int const draws = 20000;
    for (int i = 0; i < draws; ++i) {
        double u = rng.uniform();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
        double g = rng.gaussian();
        sum += g;
        sum2 += g * g;
    }
    CHECK(std::abs(sum / draws) < 0.05);
    CHECK(std::abs(sum2 / draws - 1.0) < 0.05);
}

TEST_CASE("quaternion block structure forces conjugate-pair spectra") {
    SampleRng rng(5);
    QuaternionMatrix q = sample_factor(4, rng);
    Eigen::MatrixXcd X = q.expand();
    REQUIRE(X.rows() == 8);
    // Interleaved layout: each (a, b) quaternion becomes the 2x2 block
    // [[u, -v*], [v, u*]].
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            CHECK(X(2 * a, 2 * b) == q.u(a, b));
            CHECK(X(2 * a + 1, 2 * b) == q.v(a, b));
            CHECK(X(2 * a, 2 * b + 1) == -std::conj(q.v(a, b)));
            CHECK(X(2 * a + 1, 2 * b + 1) == std::conj(q.u(a, b)));
        }
    }

    auto eigs = eigenvalues_dense(X);
    // Every eigenvalue's conjugate is also an eigenvalue.
    for (auto z : eigs) {
        double best = 1e300;
        for (auto w : eigs) best = std::min(best, std::abs(w - std::conj(z)));
        CHECK(best < 1e-10);
    }
}

TEST_CASE("factor entries are unit complex Gaussians") {
    SampleRng rng(17);
    double acc = 0.0;
    int count = 0;
    for (int rep = 0; rep < 30; ++rep) {
        QuaternionMatrix q = sample_factor(8, rng);
        acc += q.u.squaredNorm() + q.v.squaredNorm();
        count += 2 * 64;
    }
    CHECK(acc / count == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("product eigenvalues: pairing, determinant identity, ordering") {
    for (int n : {1, 3}) {
        EnsembleParams params{n, 0.0, 6};
        EigenvalueSample s = product_eigenvalues(params, 123, 4);
        REQUIRE(int(s.eigenvalues.size()) == 6);
        CHECK(s.pairing_residual < 1e-8);
        CHECK(s.det_residual < 1e-10);
        for (std::size_t i = 1; i < s.eigenvalues.size(); ++i) {
            auto a = s.eigenvalues[i - 1];
            auto b = s.eigenvalues[i];
            CHECK((a.real() < b.real() ||
                   (a.real() == b.real() && a.imag() <= b.imag())));
        }
        EigenvalueSample again = product_eigenvalues(params, 123, 4);
        CHECK(again.eigenvalues == s.eigenvalues);
    }
    EnsembleParams induced{1, 1.0, 2};
    CHECK_THROWS(product_eigenvalues(induced, 1, 0));
}

TEST_CASE("radial histogram bookkeeping") {
    EnsembleParams params{1, 0.0, 5};
    std::vector<EigenvalueSample> samples;
    for (std::uint64_t d = 0; d < 40; ++d) {
        samples.push_back(product_eigenvalues(params, 7, d));
    }
    RadialHistogram hist =
        radial_histogram(samples, HistogramScaling::raw, 12, 5.0);
    long long in_bins = 0;
    for (auto c : hist.counts) in_bins += c;
    CHECK(in_bins + hist.overflow == hist.total);
    CHECK(hist.total == 40 * 5);
    REQUIRE(hist.edges.size() == 13);
    CHECK(hist.edges.front() == 0.0);
    CHECK(hist.edges.back() == doctest::Approx(5.0));
    // Raw density() estimates rho_N: counts = draws/2 * density * area.
    for (int b = 0; b < 12; ++b) {
        double lo = hist.edges[b], hi = hist.edges[b + 1];
        double area = M_PI * (hi * hi - lo * lo);
        CHECK(0.5 * hist.draws * hist.density(b) * area ==
              doctest::Approx(double(hist.counts[b])).epsilon(1e-10));
    }
}

TEST_CASE("comparison to the analytic density on a modest run") {
    EnsembleParams params{1, 0.0, 5};
    std::vector<EigenvalueSample> samples;
    for (std::uint64_t d = 0; d < 400; ++d) {
        samples.push_back(product_eigenvalues(params, 11, d));
    }
    RadialHistogram hist =
        radial_histogram(samples, HistogramScaling::raw, 15, 4.5);
    DensityComparison cmp = compare_to_density(hist, params);
    CHECK(cmp.dof > 5);
    CHECK(cmp.max_abs_z < 5.0);
    CHECK(cmp.chi_square < cmp.dof + 6.0 * std::sqrt(2.0 * cmp.dof));
}

TEST_CASE("csv formatting round-trips and has stable headers") {
    CHECK(io::fmt17(0.1) == "0.10000000000000001");
    CHECK(io::fmt17(1.0) == "1");
    double x = 0.12345678901234567;
    CHECK(std::stod(io::fmt17(x)) == x);

    EnsembleParams params{1, 0.0, 2};
    std::vector<EigenvalueSample> samples{product_eigenvalues(params, 3, 0)};
    std::string csv = io::samples_csv(samples);
    CHECK(csv.rfind("draw_index,re,im\n", 0) == 0);

    DensityTable table;
    table.request = {};
    table.grid = {1.0};
    table.values = {2.0};
    CHECK(io::density_table_csv(table) == "r,value\n1,2\n");
}

TEST_CASE("sidecar json carries residuals and comparison") {
    EnsembleParams params{2, 0.0, 3};
    std::vector<EigenvalueSample> samples;
    for (std::uint64_t d = 0; d < 5; ++d) {
        samples.push_back(product_eigenvalues(params, 21, d));
    }
    RadialHistogram hist =
        radial_histogram(samples, HistogramScaling::raw, 6, 8.0);
    DensityComparison cmp = compare_to_density(hist, params);
    auto j = io::sample_sidecar(params, 21, samples, &hist, &cmp);
    CHECK(j["n"] == 2);
    CHECK(j["draws"] == 5);
    CHECK(j["max_pairing_residual"].get<double>() < 1e-6);
    CHECK(j.contains("histogram"));
    CHECK(j.contains("comparison"));
}
