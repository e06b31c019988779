// SPDX-License-Identifier: Apache-2.0
#include "pqg/radial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pqg/specfun.hpp"

namespace pqg {

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;

// log of sum_{k=0}^{N-1} r^{4k+2} / Gamma(m+2k+2)^n via log-sum-exp with a
// running term recurrence; direct Gamma^n overflows by N ~ 40.
double log_partial_sum(int n, double m, int N, double log_r) {
    double log_term = 2.0 * log_r - n * std::lgamma(m + 2.0);
    double log_max = log_term;
    std::vector<double> terms(N);
    terms[0] = log_term;
    for (int k = 1; k < N; ++k) {
        log_term += 4.0 * log_r -
                    n * (std::log(m + 2.0 * k) + std::log(m + 2.0 * k + 1.0));
        terms[k] = log_term;
        log_max = std::max(log_max, log_term);
    }
    double sum = 0.0;
    for (double t : terms) sum += std::exp(t - log_max);
    return log_max + std::log(sum);
}
}  // namespace

double log_radial_density(EnsembleParams const& params, double r) {
    params.validate();
    if (!(r > 0.0)) throw std::domain_error("radial_density: r must be > 0");
    double log_r = std::log(r);
    return std::log(2.0 / kPi) +
           specfun::log_meijer_g(params.n, params.m, r * r) +
           log_partial_sum(params.n, params.m, params.N, log_r);
}

double radial_density(EnsembleParams const& params, double r) {
    return std::exp(log_radial_density(params, r));
}

double radial_density_scaled(ScaledParams const& sp, double r_hat) {
    if (!(r_hat > 0.0)) {
        throw std::domain_error("radial_density_scaled: r_hat must be > 0");
    }
    EnsembleParams params = sp.to_ensemble();
    double scale = std::pow(2.0 * sp.N, 0.5 * sp.n);
    double log_rho = log_radial_density(params, r_hat * scale);
    return std::exp(log_rho + (sp.n - 1) * std::log(2.0 * sp.N));
}

double radial_density_asymptotic(EnsembleParams const& params, double r) {
    params.validate();
    if (!(r > 0.0)) {
        throw std::domain_error("radial_density_asymptotic: r must be > 0");
    }
    double n = params.n;
    double u = std::pow(r, 2.0 / n);   // unfolded radius
    double su = std::pow(r, 1.0 / n);  // sqrt of it
    double outer = specfun::erfc(std::sqrt(0.5 * n) * (u - (params.m + 2.0 * params.N)) / su);
    double inner = specfun::erfc(std::sqrt(0.5 * n) * (u - params.m) / su);
    return std::pow(r, 2.0 / n - 2.0) / (n * kPi) * 0.5 * (outer - inner);
}

double radial_density_asymptotic_edge(ScaledParams const& sp, double r_hat) {
    if (!(r_hat > 0.0)) {
        throw std::domain_error("radial_density_asymptotic_edge: r_hat must be > 0");
    }
    double n = sp.n;
    double scale = std::sqrt(4.0 * sp.N / n);
    double outer = specfun::erfc(
        scale * (r_hat - std::pow(sp.m_hat + 1.0, 0.5 * n)) /
        std::pow(sp.m_hat + 1.0, 0.5 * (n - 1.0)));
    double inner = 0.0;
    if (sp.m_hat > 0.0) {
        inner = specfun::erfc(scale * (r_hat - std::pow(sp.m_hat, 0.5 * n)) /
                              std::pow(sp.m_hat, 0.5 * (n - 1.0)));
    }
    return std::pow(r_hat, 2.0 / n - 2.0) / (n * kPi) * 0.5 * (outer - inner);
}

double macroscopic_density(int n, double m_hat, double r_hat) {
    if (n < 1) throw std::domain_error("macroscopic_density: n must be >= 1");
    if (m_hat < 0.0) throw std::domain_error("macroscopic_density: m_hat >= 0");
    if (!(r_hat >= 0.0)) {
        throw std::domain_error("macroscopic_density: r_hat must be >= 0");
    }
    double r_in = std::pow(m_hat, 0.5 * n);
    double r_out = std::pow(m_hat + 1.0, 0.5 * n);
    if (r_hat < r_in || r_hat > r_out) return 0.0;
    return std::pow(r_hat, 2.0 / n - 2.0) / (n * kPi);
}

double edge_variable(ScaledParams const& sp, double r_hat, Edge edge) {
    double n = sp.n;
    double scale = std::sqrt(2.0 * sp.N / n);
    if (edge == Edge::inner) {
        if (!(sp.m_hat > 0.0)) {
            throw std::domain_error("edge_variable: no inner edge at m_hat = 0");
        }
        return -scale * (r_hat - std::pow(sp.m_hat, 0.5 * n)) /
               std::pow(sp.m_hat, 0.5 * (n - 1.0));
    }
    return scale * (r_hat - std::pow(sp.m_hat + 1.0, 0.5 * n)) /
           std::pow(sp.m_hat + 1.0, 0.5 * (n - 1.0));
}

double edge_density(double epsilon) {
    return specfun::erfc(std::sqrt(2.0) * epsilon) / (2.0 * kPi);
}

double bulk_density(double r_tilde) {
    if (!(r_tilde > 0.0)) {
        throw std::domain_error("bulk_density: r_tilde must be > 0");
    }
    return 1.0 / (2.0 * kPi * r_tilde);
}

double unfold(int n, double r) {
    if (n < 1) throw std::domain_error("unfold: n must be >= 1");
    if (!(r > 0.0)) throw std::domain_error("unfold: r must be > 0");
    return std::pow(r, 2.0 / n);
}

double origin_density(int n, double m, double r) {
    if (n < 1) throw std::domain_error("origin_density: n must be >= 1");
    if (m < 0.0) throw std::domain_error("origin_density: m must be >= 0");
    if (!(r > 0.0)) throw std::domain_error("origin_density: r must be > 0");
    double y = std::pow(r, 4.0) / std::pow(4.0, n);
    double log_value = std::log(2.0) + 2.0 * std::log(r) - std::log(kPi) -
                       n * std::lgamma(m + 2.0) +
                       specfun::log_meijer_g(n, m, r * r) +
                       std::log(specfun::hyp_1f2n(n, m, y));
    return std::exp(log_value);
}

std::string to_string(DensityMode mode) {
    switch (mode) {
        case DensityMode::exact: return "exact";
        case DensityMode::scaled: return "scaled";
        case DensityMode::asymptotic: return "asymptotic";
        case DensityMode::asymptotic_edge: return "asymptotic_edge";
        case DensityMode::macroscopic: return "macroscopic";
        case DensityMode::bulk: return "bulk";
        case DensityMode::edge: return "edge";
        case DensityMode::origin: return "origin";
    }
    return "unknown";
}

DensityTable density_table(DensityTableRequest const& request) {
    GridSpec const& g = request.grid;
    if (g.count < 2 || !(g.min < g.max)) {
        throw std::invalid_argument("density_table: invalid grid spec");
    }
    if (g.log_spacing && !(g.min > 0.0)) {
        throw std::invalid_argument("density_table: log grid needs min > 0");
    }

    DensityTable table;
    table.request = request;
    table.grid.resize(g.count);
    for (int i = 0; i < g.count; ++i) {
        double t = double(i) / (g.count - 1);
        table.grid[i] = g.log_spacing
                            ? g.min * std::pow(g.max / g.min, t)
                            : g.min + t * (g.max - g.min);
    }

    EnsembleParams params{request.n, request.m, request.N};
    ScaledParams sp{request.n, request.m_hat, request.N};
    table.values.resize(g.count);
    for (int i = 0; i < g.count; ++i) {
        double x = table.grid[i];
        switch (request.mode) {
            case DensityMode::exact:
                table.values[i] = radial_density(params, x);
                break;
            case DensityMode::scaled:
                table.values[i] = radial_density_scaled(sp, x);
                break;
            case DensityMode::asymptotic:
                table.values[i] = radial_density_asymptotic(params, x);
                break;
            case DensityMode::asymptotic_edge:
                table.values[i] = radial_density_asymptotic_edge(sp, x);
                break;
            case DensityMode::macroscopic:
                table.values[i] =
                    macroscopic_density(request.n, request.m_hat, x);
                break;
            case DensityMode::bulk:
                table.values[i] = bulk_density(x);
                break;
            case DensityMode::edge:
                table.values[i] = edge_density(x);
                break;
            case DensityMode::origin:
                table.values[i] = origin_density(request.n, request.m, x);
                break;
        }
    }
    return table;
}

}  // namespace pqg
