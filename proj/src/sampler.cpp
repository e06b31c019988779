// SPDX-License-Identifier: Apache-2.0
#include "pqg/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pqg/errors.hpp"
#include "pqg/quadrature.hpp"
#include "pqg/radial.hpp"

namespace pqg {

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
}  // namespace

SampleRng SampleRng::for_draw(std::uint64_t seed, std::uint64_t draw) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (draw * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull);
    return SampleRng(splitmix64(s));
}

std::uint64_t SampleRng::next_u64() { return splitmix64(state_); }

double SampleRng::uniform() {
    // 53-bit mantissa, strictly inside (0, 1)
    return (double(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double SampleRng::gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * kPi * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

Eigen::MatrixXcd QuaternionMatrix::expand() const {
    Eigen::MatrixXcd X(2 * N, 2 * N);
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            X(2 * a, 2 * b) = u(a, b);
            X(2 * a, 2 * b + 1) = -std::conj(v(a, b));
            X(2 * a + 1, 2 * b) = v(a, b);
            X(2 * a + 1, 2 * b + 1) = std::conj(u(a, b));
        }
    }
    return X;
}

QuaternionMatrix sample_factor(int N, SampleRng& rng) {
    if (N < 1) throw std::invalid_argument("sample_factor: N must be >= 1");
    QuaternionMatrix X;
    X.N = N;
    X.u.resize(N, N);
    X.v.resize(N, N);
    double const sd = M_SQRT1_2;  // per real component, so E|u|^2 = 1
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            X.u(a, b) = std::complex<double>(sd * rng.gaussian(), sd * rng.gaussian());
            X.v(a, b) = std::complex<double>(sd * rng.gaussian(), sd * rng.gaussian());
        }
    }
    return X;
}

std::vector<std::complex<double>> eigenvalues_dense(Eigen::MatrixXcd const& M) {
    if (M.rows() != M.cols()) {
        throw std::invalid_argument("eigenvalues_dense: matrix not square");
    }
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(M, /*computeU=*/false);
    if (schur.info() != Eigen::Success) {
        throw numerical_error("eigenvalues_dense: QR iteration did not converge");
    }
    std::vector<std::complex<double>> eigs(M.rows());
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        eigs[i] = schur.matrixT()(i, i);
    }
    return eigs;
}

EigenvalueSample product_eigenvalues(EnsembleParams const& params,
                                     std::uint64_t seed, std::uint64_t draw) {
    params.validate();
    if (params.m != 0.0) {
        throw std::invalid_argument(
            "product_eigenvalues: sampling requires m = 0");
    }
    SampleRng rng = SampleRng::for_draw(seed, draw);

    Eigen::MatrixXcd P = sample_factor(params.N, rng).expand();
    for (int i = 1; i < params.n; ++i) {
        P = P * sample_factor(params.N, rng).expand();
    }

    auto eigs = eigenvalues_dense(P);
    double spectral_radius = 1e-300;
    for (auto z : eigs) spectral_radius = std::max(spectral_radius, std::abs(z));

    EigenvalueSample sample;
    sample.params = params;
    sample.seed = seed;
    sample.draw = draw;

    // Greedy conjugate pairing: repeatedly take the remaining eigenvalue
    // with the largest imaginary part and match it to the closest
    // remaining point to its conjugate.
    std::vector<std::complex<double>> pool = eigs;
    double worst = 0.0;
    while (!pool.empty()) {
        std::size_t top = 0;
        for (std::size_t i = 1; i < pool.size(); ++i) {
            if (pool[i].imag() > pool[top].imag()) top = i;
        }
        std::complex<double> rep = pool[top];
        pool.erase(pool.begin() + long(top));
        std::size_t partner = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < pool.size(); ++i) {
            double d = std::abs(pool[i] - std::conj(rep));
            if (d < best) {
                best = d;
                partner = i;
            }
        }
        pool.erase(pool.begin() + long(partner));
        worst = std::max(worst, best);
        if (rep.imag() <= 0.0) sample.real_axis_tie = true;
        sample.eigenvalues.push_back(rep);
    }
    sample.pairing_residual = worst / spectral_radius;

    // det identity: prod_k |z_k|^2 = |det P|, compared in log scale.
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(P);
    double log_det = 0.0;
    for (Eigen::Index i = 0; i < P.rows(); ++i) {
        log_det += std::log(std::abs(lu.matrixLU()(i, i)));
    }
    double log_prod = 0.0;
    for (auto z : sample.eigenvalues) log_prod += 2.0 * std::log(std::abs(z));
    sample.det_residual = std::abs(log_prod - log_det);

    // Canonical ordering for reproducible output.
    std::sort(sample.eigenvalues.begin(), sample.eigenvalues.end(),
              [](auto a, auto b) {
                  if (a.real() != b.real()) return a.real() < b.real();
                  return a.imag() < b.imag();
              });
    return sample;
}

namespace {

// Raw bins estimate rho_N (mass 2N, N representatives per draw, hence the
// factor 2); scaled bins estimate the unit-mass scaled density.
double histogram_factor(RadialHistogram const& hist) {
    return hist.scaling == HistogramScaling::scaled
               ? 1.0 / (double(hist.params.N) * hist.draws)
               : 2.0 / hist.draws;
}

}  // namespace

double RadialHistogram::density(int bin) const {
    double lo = edges[bin];
    double hi = edges[bin + 1];
    double area = kPi * (hi * hi - lo * lo);
    return histogram_factor(*this) * double(counts[bin]) / area;
}

double RadialHistogram::density_error(int bin) const {
    double lo = edges[bin];
    double hi = edges[bin + 1];
    double area = kPi * (hi * hi - lo * lo);
    return histogram_factor(*this) *
           std::sqrt(std::max(1.0, double(counts[bin]))) / area;
}

RadialHistogram radial_histogram(std::span<EigenvalueSample const> samples,
                                 HistogramScaling scaling, int bins,
                                 double r_max) {
    if (samples.empty()) {
        throw std::invalid_argument("radial_histogram: no samples");
    }
    if (bins < 1 || !(r_max > 0.0)) {
        throw std::invalid_argument("radial_histogram: invalid bin spec");
    }
    EnsembleParams const& params = samples[0].params;
    for (auto const& s : samples) {
        if (s.params.n != params.n || s.params.N != params.N ||
            s.params.m != params.m) {
            throw std::invalid_argument(
                "radial_histogram: inconsistent sample parameters");
        }
    }

    RadialHistogram hist;
    hist.params = params;
    hist.scaling = scaling;
    hist.draws = int(samples.size());
    hist.counts.assign(bins, 0);
    hist.edges.resize(bins + 1);
    for (int i = 0; i <= bins; ++i) hist.edges[i] = r_max * i / bins;

    double scale = scaling == HistogramScaling::scaled
                       ? std::pow(2.0 * params.N, 0.5 * params.n)
                       : 1.0;
    for (auto const& s : samples) {
        for (auto z : s.eigenvalues) {
            double r = std::abs(z) / scale;
            int bin = int(r / r_max * bins);
            if (bin >= bins) {
                ++hist.overflow;
            } else {
                ++hist.counts[bin];
            }
            ++hist.total;
        }
    }
    return hist;
}

DensityComparison compare_to_density(RadialHistogram const& hist,
                                     EnsembleParams const& params) {
    if (params.m != 0.0) {
        throw std::invalid_argument("compare_to_density: requires m = 0");
    }
    double scale = hist.scaling == HistogramScaling::scaled
                       ? std::pow(2.0 * params.N, 0.5 * params.n)
                       : 1.0;
    DensityComparison cmp;
    int bins = int(hist.counts.size());
    cmp.z_scores.assign(bins, std::numeric_limits<double>::quiet_NaN());
    for (int i = 0; i < bins; ++i) {
        double lo = hist.edges[i] * scale;
        double hi = hist.edges[i + 1] * scale;
        // Each draw contributes N representatives, i.e. half of the
        // 2N-normalized radial mass.
        double mass = integrate(
            [&](double r) {
                return r > 0.0 ? 2.0 * kPi * r * radial_density(params, r) : 0.0;
            },
            lo, hi, 1e-9 * std::max(1.0, hi - lo));
        double expected = hist.draws * 0.5 * mass;
        if (expected < 5.0) continue;
        double z = (double(hist.counts[i]) - expected) / std::sqrt(expected);
        cmp.z_scores[i] = z;
        cmp.max_abs_z = std::max(cmp.max_abs_z, std::abs(z));
        cmp.chi_square += z * z;
        ++cmp.dof;
    }
    return cmp;
}

}  // namespace pqg
