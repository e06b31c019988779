// SPDX-License-Identifier: Apache-2.0
#include "pqg/correlations.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "pqg/errors.hpp"
#include "pqg/specfun.hpp"

namespace pqg {

namespace {

constexpr double kLogPi = 1.1447298858494001741434273513531;

void renormalize(ScaledComplex& v) {
    double a = std::abs(v.mant);
    if (a == 0.0) {
        v.log_scale = 0.0;
        return;
    }
    if (a > 1e100 || a < 1e-100) {
        double shift = std::log(a);
        v.mant /= a;
        v.log_scale += shift;
    }
}

void scaled_add(ScaledComplex& acc, cplx mant, double log_scale) {
    if (mant == cplx(0.0, 0.0)) return;
    if (acc.mant == cplx(0.0, 0.0)) {
        acc.mant = mant;
        acc.log_scale = log_scale;
        renormalize(acc);
        return;
    }
    if (log_scale > acc.log_scale) {
        acc.mant *= std::exp(acc.log_scale - log_scale);
        acc.log_scale = log_scale;
        acc.mant += mant;
    } else {
        acc.mant += mant * std::exp(log_scale - acc.log_scale);
    }
    renormalize(acc);
}

}  // namespace

double ScaledComplex::log_abs() const {
    return std::log(std::abs(mant)) + log_scale;
}

double log_weight(EnsembleParams const& params, cplx z) {
    params.validate();
    double x = std::norm(z);
    if (x == 0.0 && params.n >= 2) {
        throw std::domain_error("weight: divergent at the origin for n >= 2");
    }
    if (params.n == 1) return params.m * std::log(x) - x;
    return (params.n - 1) * kLogPi +
           specfun::log_meijer_g(params.n, params.m, x);
}

double weight(EnsembleParams const& params, cplx z) {
    return std::exp(log_weight(params, z));
}

PrekernelEvaluator::PrekernelEvaluator(EnsembleParams params)
    : params_(params) {
    params_.validate();
    log_prefactor_ = std::log(2.0) -
                     params_.n * (kLogPi + std::lgamma(params_.m + 1.0));
}

ScaledComplex PrekernelEvaluator::scaled(cplx u, cplx v) const {
    // Evaluate in a canonical argument order: the floating-point sum
    // depends on which argument comes first, so without this kappa(v,u)
    // and -kappa(u,v) could differ in the last ulp.
    bool swap = v.real() < u.real() ||
                (v.real() == u.real() && v.imag() < u.imag());
    if (swap) {
        ScaledComplex r = scaled_ordered(v, u);
        r.mant = -r.mant;
        return r;
    }
    return scaled_ordered(u, v);
}

ScaledComplex PrekernelEvaluator::scaled_ordered(cplx u, cplx v) const {
    int const n = params_.n;
    double const m = params_.m;

    // kappa = C sum_k [A_k(u) S_k(v) - A_k(v) S_k(u)], where
    //   A_k(z) = z^{2k+1} / prod_{j=0..k} (m+2j+1)^n,
    //   S_k(z) = sum_{l=0..k} z^{2l} / prod_{j=1..l} (m+2j)^n.
    // All four running quantities advance by bounded ratios; scales are
    // tracked separately so N ~ 100 at |z|^2 of a few hundred is safe.
    ScaledComplex Au{u, -n * std::log(m + 1.0)};
    ScaledComplex Av{v, -n * std::log(m + 1.0)};
    ScaledComplex Su{cplx(1.0, 0.0), 0.0};
    ScaledComplex Sv{cplx(1.0, 0.0), 0.0};
    ScaledComplex Bu = Su;
    ScaledComplex Bv = Sv;
    renormalize(Au);
    renormalize(Av);

    cplx const u2 = u * u;
    cplx const v2 = v * v;

    ScaledComplex total;
    for (int k = 0;; ++k) {
        scaled_add(total, Au.mant * Sv.mant, Au.log_scale + Sv.log_scale);
        scaled_add(total, -Av.mant * Su.mant, Av.log_scale + Su.log_scale);
        if (k + 1 >= params_.N) break;
        double log_odd = n * std::log(m + 2.0 * k + 3.0);
        Au.mant *= u2;
        Au.log_scale -= log_odd;
        Av.mant *= v2;
        Av.log_scale -= log_odd;
        renormalize(Au);
        renormalize(Av);
        double log_even = n * std::log(m + 2.0 * (k + 1));
        Bu.mant *= u2;
        Bu.log_scale -= log_even;
        Bv.mant *= v2;
        Bv.log_scale -= log_even;
        renormalize(Bu);
        renormalize(Bv);
        scaled_add(Su, Bu.mant, Bu.log_scale);
        scaled_add(Sv, Bv.mant, Bv.log_scale);
    }
    total.log_scale += log_prefactor_;
    return total;
}

cplx PrekernelEvaluator::operator()(cplx u, cplx v) const {
    ScaledComplex k = scaled(u, v);
    if (k.mant == cplx(0.0, 0.0)) return {0.0, 0.0};
    if (k.log_abs() > 700.0) {
        throw numerical_error("prekernel: value exceeds floating range",
                              k.log_abs());
    }
    return k.value();
}

cplx prekernel_from_basis(SkewPolyBasis const& basis, int N, cplx u, cplx v) {
    if (N < 1 || N > basis.max_index + 1) {
        throw std::invalid_argument("prekernel_from_basis: N outside basis");
    }
    cplx sum = 0.0;
    for (int k = 0; k < N; ++k) {
        cplx pu_odd = eval_poly(basis, 2 * k + 1, u);
        cplx pv_odd = eval_poly(basis, 2 * k + 1, v);
        cplx pu_even = eval_poly(basis, 2 * k, u);
        cplx pv_even = eval_poly(basis, 2 * k, v);
        sum += (pu_odd * pv_even - pv_odd * pu_even) *
               std::exp(-basis.log_h[k]);
    }
    return sum;
}

double density_R1(EnsembleParams const& params, cplx z) {
    params.validate();
    if (z.imag() == 0.0) return 0.0;
    PrekernelEvaluator kernel(params);
    ScaledComplex k = kernel.scaled(z, std::conj(z));
    if (k.mant == cplx(0.0, 0.0)) return 0.0;
    cplx pre = 0.5 * (std::conj(z) - z);
    double log_w = log_weight(params, z);
    return (pre * k.mant).real() * std::exp(k.log_scale + log_w);
}

cplx pfaffian(Eigen::MatrixXcd A) {
    auto const dim = A.rows();
    if (dim != A.cols()) throw std::invalid_argument("pfaffian: not square");
    if (dim % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
    if (dim == 0) return 1.0;
    double norm = A.norm();
    if (norm == 0.0) return 0.0;
    if ((A + A.transpose()).norm() > 1e-10 * norm) {
        throw std::invalid_argument("pfaffian: matrix is not antisymmetric");
    }
    Eigen::MatrixXcd M = 0.5 * (A - A.transpose().eval());

    cplx pf = 1.0;
    for (Eigen::Index k = 0; k + 1 < dim; k += 2) {
        // Greedy pivot: largest entry in column k below the diagonal.
        Eigen::Index kp = k + 1;
        for (Eigen::Index i = k + 2; i < dim; ++i) {
            if (std::abs(M(i, k)) > std::abs(M(kp, k))) kp = i;
        }
        if (kp != k + 1) {
            M.row(k + 1).swap(M.row(kp));
            M.col(k + 1).swap(M.col(kp));
            pf = -pf;
        }
        if (M(k + 1, k) == cplx(0.0, 0.0)) return 0.0;
        pf *= M(k, k + 1);
        if (k + 2 < dim) {
            Eigen::Index rest = dim - k - 2;
            Eigen::VectorXcd tau =
                M.row(k).segment(k + 2, rest).transpose() / M(k, k + 1);
            Eigen::VectorXcd col = M.col(k + 1).segment(k + 2, rest);
            M.block(k + 2, k + 2, rest, rest) +=
                tau * col.transpose() - col * tau.transpose();
        }
    }
    return pf;
}

double correlation_Rk(EnsembleParams const& params, std::span<cplx const> pts) {
    params.validate();
    if (pts.empty()) throw std::invalid_argument("correlation_Rk: no points");
    for (cplx z : pts) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("correlation_Rk: non-finite point");
        }
        if (z.imag() == 0.0) return 0.0;  // (z*-z) prefactor vanishes
    }

    int const k = int(pts.size());
    int const dim = 2 * k;
    PrekernelEvaluator kernel(params);

    // Interleaved ordering (z_1, z_1*, z_2, z_2*, ...); the sign of this
    // pairing is pinned by k = 1 agreeing with density_R1.
    std::vector<cplx> q(dim);
    for (int i = 0; i < k; ++i) {
        q[2 * i] = pts[i];
        q[2 * i + 1] = std::conj(pts[i]);
    }

    std::vector<std::vector<ScaledComplex>> kap(dim);
    std::vector<double> lambda(dim, -std::numeric_limits<double>::infinity());
    for (int a = 0; a < dim; ++a) kap[a].resize(dim);
    for (int a = 0; a < dim; ++a) {
        for (int b = a + 1; b < dim; ++b) {
            kap[a][b] = kernel.scaled(q[a], q[b]);
            if (kap[a][b].mant != cplx(0.0, 0.0)) {
                double l = kap[a][b].log_abs();
                lambda[a] = std::max(lambda[a], 0.5 * l);
                lambda[b] = std::max(lambda[b], 0.5 * l);
            }
        }
    }
    for (int a = 0; a < dim; ++a) {
        if (!std::isfinite(lambda[a])) lambda[a] = 0.0;
    }

    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(dim, dim);
    for (int a = 0; a < dim; ++a) {
        for (int b = a + 1; b < dim; ++b) {
            cplx e = kap[a][b].mant *
                     std::exp(kap[a][b].log_scale - lambda[a] - lambda[b]);
            M(a, b) = e;
            M(b, a) = -e;
        }
    }
    cplx pf = pfaffian(M);

    double log_mag = 0.0;
    cplx phase = 1.0;
    for (int a = 0; a < dim; ++a) log_mag += lambda[a];
    for (cplx z : pts) {
        log_mag += log_weight(params, z);
        cplx pre = 0.5 * (std::conj(z) - z);
        log_mag += std::log(std::abs(pre));
        phase *= pre / std::abs(pre);
    }
    cplx value = phase * pf * std::exp(log_mag);
    if (std::abs(value) > 0.0 &&
        std::abs(value.imag()) > 1e-8 * std::abs(value)) {
        throw numerical_error("correlation_Rk: imaginary residue too large",
                              std::abs(value.imag()) / std::abs(value));
    }
    return value.real();
}

double jpdf(EnsembleParams const& params, std::span<cplx const> zs) {
    params.validate();
    if (int(zs.size()) != params.N) {
        throw std::invalid_argument("jpdf: expected exactly N points");
    }
    double result = 0.25;
    for (int c = 0; c < params.N; ++c) {
        cplx z = zs[c];
        if (z.imag() == 0.0) return 0.0;  // |z - z*|^2 factor
        result *= weight(params, z) * std::norm(z - std::conj(z));
        for (int b = 0; b < c; ++b) {
            result *= std::norm(zs[b] - z) * std::norm(zs[b] - std::conj(z));
        }
    }
    return result;
}

}  // namespace pqg
