// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "pqg/ensemble.hpp"

namespace pqg {

/// Strong-induced scaling m = 2N m_hat.
struct ScaledParams {
    int n = 1;
    double m_hat = 0.0;
    int N = 1;

    EnsembleParams to_ensemble() const {
        return {n, 2.0 * N * m_hat, N};
    }
};

/// Exact finite-N radial density,
/// rho_N(r) = (2/pi) G^{n,0}_{0,n}(r^2) sum_{k<N} r^{4k+2}/Gamma(m+2k+2)^n.
/// Normalized so that int 2 pi r rho_N dr = 2N.
double radial_density(EnsembleParams const& params, double r);
double log_radial_density(EnsembleParams const& params, double r);

/// rho_hat(r_hat) = (2N)^{n-1} rho_N(r_hat (2N)^{n/2}); unit total mass.
double radial_density_scaled(ScaledParams const& sp, double r_hat);

/// erfc approximation of rho_N in the regime m^{n/2} <~ r <~ (m+2N)^{n/2}.
double radial_density_asymptotic(EnsembleParams const& params, double r);

/// Edge-linearized erfc pair for the scaled density. The inner-edge term
/// is dropped at m_hat = 0 (its prefactor degenerates there).
double radial_density_asymptotic_edge(ScaledParams const& sp, double r_hat);

/// N -> infinity limit: r_hat^{2/n-2}/(n pi) on the annulus
/// m_hat^{n/2} <= r_hat <= (m_hat+1)^{n/2}, zero elsewhere.
double macroscopic_density(int n, double m_hat, double r_hat);

enum class Edge { inner, outer };

/// Signed edge coordinate; zero exactly at the edge radius, negative
/// toward the bulk. The inner edge exists only for m_hat > 0.
double edge_variable(ScaledParams const& sp, double r_hat, Edge edge);

/// Universal edge profile (1/2pi) erfc(sqrt(2) eps).
double edge_density(double epsilon);

/// Microscopic bulk density 1/(2 pi r_tilde) in the unfolded variable.
double bulk_density(double r_tilde);

/// Unfolding map r_tilde = r^{2/n}.
double unfold(int n, double r);

/// Microscopic origin limit (m of order one):
/// (2 r^2 / (pi Gamma(m+2)^n)) G^{n,0}_{0,n}(r^2) 1F2n(1; ...; r^4/4^n).
double origin_density(int n, double m, double r);

enum class DensityMode {
    exact,
    scaled,
    asymptotic,
    asymptotic_edge,
    macroscopic,
    bulk,
    edge,
    origin,
};

std::string to_string(DensityMode mode);

struct GridSpec {
    double min = 0.0;
    double max = 1.0;
    int count = 2;
    bool log_spacing = false;
};

struct DensityTableRequest {
    DensityMode mode = DensityMode::exact;
    int n = 1;
    double m = 0.0;      // exact / asymptotic / origin modes
    double m_hat = 0.0;  // scaled / edge / macroscopic modes
    int N = 1;
    GridSpec grid;
};

struct DensityTable {
    DensityTableRequest request;
    std::vector<double> grid;
    std::vector<double> values;
};

DensityTable density_table(DensityTableRequest const& request);

}  // namespace pqg
