// SPDX-License-Identifier: Apache-2.0
//
// pqg: exact eigenvalue statistics of products of induced quaternion
// Ginibre matrices. Subcommands cover the weight, the skew-orthogonal
// polynomial data, the prekernel, correlation functions, radial densities
// in every regime, Monte Carlo sampling, and the verification suite.
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pqg/correlations.hpp"
#include "pqg/errors.hpp"
#include "pqg/io.hpp"
#include "pqg/radial.hpp"
#include "pqg/sampler.hpp"
#include "pqg/verify.hpp"

namespace {

using nlohmann::json;
using pqg::cplx;

pqg::GridSpec parse_grid(std::string const& text) {
    pqg::GridSpec g;
    char spacing[8] = "";
    int fields = std::sscanf(text.c_str(), "%lf:%lf:%d:%7s", &g.min, &g.max,
                             &g.count, spacing);
    if (fields < 3) {
        throw CLI::ValidationError("grid", "expected min:max:count[:log]");
    }
    if (fields == 4) {
        if (std::string(spacing) != "log") {
            throw CLI::ValidationError("grid", "spacing must be 'log'");
        }
        g.log_spacing = true;
    }
    return g;
}

std::string resolve_out(std::string const& prefix) {
    if (prefix.empty() || prefix.front() == '/') return prefix;
    char const* dir = std::getenv("PQG_OUT_DIR");
    if (dir == nullptr || *dir == '\0') return prefix;
    std::string d(dir);
    if (d.back() != '/') d += '/';
    return d + prefix;
}

/// CSV to PREFIX.csv plus sidecar to PREFIX.json, or CSV to stdout when
/// no prefix was given.
void emit(std::string const& prefix, std::string const& csv,
          json const& sidecar) {
    if (prefix.empty()) {
        std::cout << csv;
        return;
    }
    std::string base = resolve_out(prefix);
    pqg::io::write_file(base + ".csv", csv);
    pqg::io::write_file(base + ".json", sidecar.dump(2) + "\n");
}

cplx parse_point(std::string const& text) {
    double re = 0.0, im = 0.0;
    if (std::sscanf(text.c_str(), "%lf,%lf", &re, &im) != 2) {
        throw CLI::ValidationError("point", "expected re,im");
    }
    return {re, im};
}

pqg::DensityMode parse_mode(std::string const& text) {
    if (text == "exact") return pqg::DensityMode::exact;
    if (text == "scaled") return pqg::DensityMode::scaled;
    if (text == "asymptotic") return pqg::DensityMode::asymptotic;
    if (text == "asymptotic-edge") return pqg::DensityMode::asymptotic_edge;
    if (text == "macro" || text == "macroscopic") {
        return pqg::DensityMode::macroscopic;
    }
    if (text == "bulk") return pqg::DensityMode::bulk;
    if (text == "edge") return pqg::DensityMode::edge;
    if (text == "origin") return pqg::DensityMode::origin;
    throw CLI::ValidationError("mode", "unknown density mode: " + text);
}

int run(int argc, char** argv) {
    CLI::App app{"Eigenvalue statistics of products of induced quaternion "
                 "Ginibre matrices"};
    app.require_subcommand(1);

    // weight
    auto* weight_cmd =
        app.add_subcommand("weight", "Ensemble weight over a radius grid");
    int w_n = 1;
    double w_m = 0.0;
    std::string w_grid, w_out;
    weight_cmd->add_option("--n", w_n, "number of factors")->required();
    weight_cmd->add_option("--m", w_m, "induced exponent");
    weight_cmd->add_option("--grid", w_grid, "min:max:count[:log]")->required();
    weight_cmd->add_option("--out", w_out, "output prefix");

    // radial
    auto* radial_cmd =
        app.add_subcommand("radial", "Radial density in a chosen regime");
    std::string r_mode = "exact", r_grid, r_out;
    int r_n = 1, r_N = 1;
    double r_m = 0.0, r_mhat = 0.0;
    radial_cmd->add_option("--mode", r_mode,
                           "exact|scaled|asymptotic|asymptotic-edge|macro|"
                           "bulk|edge|origin");
    radial_cmd->add_option("--n", r_n, "number of factors");
    radial_cmd->add_option("--m", r_m, "induced exponent");
    radial_cmd->add_option("--m-hat", r_mhat, "m / 2N for scaled modes");
    radial_cmd->add_option("--N", r_N, "quaternion dimension");
    radial_cmd->add_option("--grid", r_grid, "min:max:count[:log]")->required();
    radial_cmd->add_option("--out", r_out, "output prefix");

    // polys
    auto* polys_cmd = app.add_subcommand(
        "polys", "Skew-orthogonal polynomial coefficients and norms");
    int p_n = 1, p_K = 4;
    double p_m = 0.0;
    std::string p_out;
    polys_cmd->add_option("--n", p_n, "number of factors")->required();
    polys_cmd->add_option("--m", p_m, "induced exponent");
    polys_cmd->add_option("--K", p_K, "highest even index 2K");
    polys_cmd->add_option("--out", p_out, "output prefix");

    // kernel
    auto* kernel_cmd =
        app.add_subcommand("kernel", "Prekernel values on point pairs");
    int k_n = 1, k_N = 1;
    double k_m = 0.0;
    std::vector<std::string> k_pairs;
    std::string k_out;
    kernel_cmd->add_option("--n", k_n, "number of factors")->required();
    kernel_cmd->add_option("--m", k_m, "induced exponent");
    kernel_cmd->add_option("--N", k_N, "quaternion dimension")->required();
    kernel_cmd->add_option("--pair", k_pairs, "u_re,u_im,v_re,v_im")
        ->required();
    kernel_cmd->add_option("--out", k_out, "output prefix");

    // corr
    auto* corr_cmd =
        app.add_subcommand("corr", "k-point correlation at given points");
    int c_n = 1, c_N = 1;
    double c_m = 0.0;
    std::vector<std::string> c_points;
    std::string c_out;
    corr_cmd->add_option("--n", c_n, "number of factors")->required();
    corr_cmd->add_option("--m", c_m, "induced exponent");
    corr_cmd->add_option("--N", c_N, "quaternion dimension")->required();
    corr_cmd->add_option("--point", c_points, "re,im (repeatable)")->required();
    corr_cmd->add_option("--out", c_out, "output prefix");

    // sample
    auto* sample_cmd = app.add_subcommand(
        "sample", "Monte Carlo eigenvalue draws, histogram and comparison");
    int s_n = 1, s_N = 1, s_draws = 100, s_bins = 40;
    double s_m = 0.0, s_rmax = 0.0;
    std::uint64_t s_seed = 42;
    bool s_scaled = false, s_compare = false;
    std::string s_out;
    sample_cmd->add_option("--n", s_n, "number of factors")->required();
    sample_cmd->add_option("--N", s_N, "quaternion dimension")->required();
    sample_cmd->add_option("--m", s_m, "induced exponent (must be 0)");
    sample_cmd->add_option("--draws", s_draws, "number of product draws");
    sample_cmd->add_option("--seed", s_seed, "RNG seed");
    sample_cmd->add_option("--bins", s_bins, "histogram bins");
    sample_cmd->add_option("--r-max", s_rmax, "histogram upper radius");
    sample_cmd->add_flag("--scaled", s_scaled, "bin |z| / (2N)^{n/2}");
    sample_cmd->add_flag("--compare", s_compare,
                         "chi-square against the analytic density");
    sample_cmd->add_option("--out", s_out, "output prefix");

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "Run the full property suite");
    std::uint64_t v_seed = 42;
    bool v_skip_mc = false;
    std::string v_out;
    verify_cmd->add_option("--seed", v_seed, "Monte Carlo seed");
    verify_cmd->add_flag("--skip-monte-carlo", v_skip_mc,
                         "omit the sampler checks");
    verify_cmd->add_option("--out", v_out, "JSON report path");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int code = app.exit(e);  // prints help or the error message
        return code == 0 ? 0 : 2;
    }

    if (weight_cmd->parsed()) {
        pqg::EnsembleParams params{w_n, w_m, 1};
        params.validate();
        pqg::GridSpec g = parse_grid(w_grid);
        pqg::DensityTable table;
        table.request = {pqg::DensityMode::exact, w_n, w_m, 0.0, 1, g};
        for (int i = 0; i < g.count; ++i) {
            double t = double(i) / (g.count - 1);
            double r = g.log_spacing ? g.min * std::pow(g.max / g.min, t)
                                     : g.min + t * (g.max - g.min);
            table.grid.push_back(r);
            table.values.push_back(pqg::weight(params, cplx(r, 0.0)));
        }
        json sidecar = {{"command", "weight"},
                        {"n", w_n},
                        {"m", w_m},
                        {"grid", w_grid}};
        emit(w_out, pqg::io::density_table_csv(table), sidecar);
        return 0;
    }

    if (radial_cmd->parsed()) {
        pqg::DensityTableRequest req{parse_mode(r_mode), r_n, r_m,
                                     r_mhat,             r_N, parse_grid(r_grid)};
        pqg::DensityTable table = pqg::density_table(req);
        json sidecar = pqg::io::density_table_sidecar(table);
        sidecar["command"] = "radial";
        emit(r_out, pqg::io::density_table_csv(table), sidecar);
        return 0;
    }

    if (polys_cmd->parsed()) {
        pqg::EnsembleParams params{p_n, p_m, p_K + 1};
        pqg::SkewPolyBasis basis = pqg::build_basis(params, p_K);
        std::string csv = "degree,power,log_coeff,coeff\n";
        for (int k = 0; k <= p_K; ++k) {
            for (int l = 0; l <= k; ++l) {
                double lc = basis.even_log_coeffs[k][l];
                csv += std::to_string(2 * k) + ',' + std::to_string(2 * l) +
                       ',' + pqg::io::fmt17(lc) + ',' +
                       pqg::io::fmt17(std::exp(lc)) + '\n';
            }
            csv += std::to_string(2 * k + 1) + ',' +
                   std::to_string(2 * k + 1) + ",0,1\n";
        }
        json sidecar = {{"command", "polys"}, {"n", p_n}, {"m", p_m},
                        {"K", p_K}};
        sidecar["log_h"] = basis.log_h;
        emit(p_out, csv, sidecar);
        return 0;
    }

    if (kernel_cmd->parsed()) {
        pqg::EnsembleParams params{k_n, k_m, k_N};
        pqg::PrekernelEvaluator kernel(params);
        std::string csv = "u_re,u_im,v_re,v_im,kappa_re,kappa_im\n";
        for (auto const& text : k_pairs) {
            double ur, ui, vr, vi;
            if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf", &ur, &ui, &vr,
                            &vi) != 4) {
                throw CLI::ValidationError("pair",
                                           "expected u_re,u_im,v_re,v_im");
            }
            cplx value = kernel(cplx(ur, ui), cplx(vr, vi));
            csv += pqg::io::fmt17(ur) + ',' + pqg::io::fmt17(ui) + ',' +
                   pqg::io::fmt17(vr) + ',' + pqg::io::fmt17(vi) + ',' +
                   pqg::io::fmt17(value.real()) + ',' +
                   pqg::io::fmt17(value.imag()) + '\n';
        }
        json sidecar = {{"command", "kernel"}, {"n", k_n}, {"m", k_m},
                        {"N", k_N}, {"pairs", k_pairs.size()}};
        emit(k_out, csv, sidecar);
        return 0;
    }

    if (corr_cmd->parsed()) {
        pqg::EnsembleParams params{c_n, c_m, c_N};
        std::vector<cplx> pts;
        for (auto const& text : c_points) pts.push_back(parse_point(text));
        double value = pqg::correlation_Rk(params, pts);
        std::string csv = "k,value\n" + std::to_string(pts.size()) + ',' +
                          pqg::io::fmt17(value) + '\n';
        json sidecar = {{"command", "corr"}, {"n", c_n}, {"m", c_m},
                        {"N", c_N}};
        for (cplx z : pts) {
            sidecar["points"].push_back({z.real(), z.imag()});
        }
        sidecar["value"] = value;
        emit(c_out, csv, sidecar);
        return 0;
    }

    if (sample_cmd->parsed()) {
        pqg::EnsembleParams params{s_n, s_m, s_N};
        params.validate();
        std::vector<pqg::EigenvalueSample> samples;
        samples.reserve(s_draws);
        for (int draw = 0; draw < s_draws; ++draw) {
            samples.push_back(pqg::product_eigenvalues(
                params, s_seed, std::uint64_t(draw)));
        }
        auto scaling = s_scaled ? pqg::HistogramScaling::scaled
                                : pqg::HistogramScaling::raw;
        double r_max = s_rmax;
        if (r_max <= 0.0) {
            r_max = s_scaled ? 1.2 : std::pow(2.8 * s_N, 0.5 * s_n);
        }
        pqg::RadialHistogram hist =
            pqg::radial_histogram(samples, scaling, s_bins, r_max);
        std::optional<pqg::DensityComparison> cmp;
        if (s_compare) cmp = pqg::compare_to_density(hist, params);
        json sidecar = pqg::io::sample_sidecar(
            params, s_seed, samples, &hist, cmp ? &*cmp : nullptr);
        sidecar["command"] = "sample";
        // The scatter CSV follows the histogram convention: scaled mode
        // emits z / (2N)^{n/2}.
        std::vector<pqg::EigenvalueSample> scatter = samples;
        if (s_scaled) {
            double scale = std::pow(2.0 * s_N, 0.5 * s_n);
            for (auto& s : scatter) {
                for (auto& z : s.eigenvalues) z /= scale;
            }
        }
        if (s_out.empty()) {
            std::cout << pqg::io::samples_csv(scatter);
        } else {
            std::string base = resolve_out(s_out);
            pqg::io::write_file(base + "_samples.csv",
                                pqg::io::samples_csv(scatter));
            pqg::io::write_file(base + "_hist.csv",
                                pqg::io::histogram_csv(hist));
            pqg::io::write_file(base + ".json", sidecar.dump(2) + "\n");
        }
        return 0;
    }

    if (verify_cmd->parsed()) {
        pqg::verify::Options options;
        options.include_monte_carlo = !v_skip_mc;
        options.seed = v_seed;
        auto results = pqg::verify::run_all(options);
        bool all_passed = true;
        for (auto const& r : results) {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": "
                      << r.detail << '\n';
            all_passed = all_passed && r.passed;
        }
        if (!v_out.empty()) {
            pqg::io::write_file(resolve_out(v_out),
                                pqg::verify::to_json(results).dump(2) + "\n");
        }
        std::cout << (all_passed ? "ALL CHECKS PASSED" : "CHECKS FAILED")
                  << '\n';
        return all_passed ? 0 : 3;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (pqg::numerical_error const& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 3;
    } catch (std::domain_error const& e) {
        std::cerr << "invalid domain: " << e.what() << '\n';
        return 2;
    } catch (std::invalid_argument const& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return 2;
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}
