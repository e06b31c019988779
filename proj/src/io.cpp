// SPDX-License-Identifier: Apache-2.0
#include "pqg/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pqg::io {

using nlohmann::json;

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string density_table_csv(DensityTable const& table) {
    std::ostringstream out;
    out << "r,value\n";
    for (std::size_t i = 0; i < table.grid.size(); ++i) {
        out << fmt17(table.grid[i]) << ',' << fmt17(table.values[i]) << '\n';
    }
    return out.str();
}

json density_table_sidecar(DensityTable const& table) {
    auto const& req = table.request;
    json j;
    j["mode"] = to_string(req.mode);
    j["n"] = req.n;
    j["m"] = req.m;
    j["m_hat"] = req.m_hat;
    j["N"] = req.N;
    j["grid"] = {{"min", req.grid.min},
                 {"max", req.grid.max},
                 {"count", req.grid.count},
                 {"spacing", req.grid.log_spacing ? "log" : "linear"}};
    j["points"] = table.grid.size();
    return j;
}

std::string samples_csv(std::span<EigenvalueSample const> samples) {
    std::ostringstream out;
    out << "draw_index,re,im\n";
    for (auto const& s : samples) {
        for (auto z : s.eigenvalues) {
            out << s.draw << ',' << fmt17(z.real()) << ',' << fmt17(z.imag())
                << '\n';
        }
    }
    return out.str();
}

std::string histogram_csv(RadialHistogram const& hist) {
    std::ostringstream out;
    out << "bin_lo,bin_hi,count,density,density_error\n";
    for (std::size_t i = 0; i < hist.counts.size(); ++i) {
        out << fmt17(hist.edges[i]) << ',' << fmt17(hist.edges[i + 1]) << ','
            << hist.counts[i] << ',' << fmt17(hist.density(int(i))) << ','
            << fmt17(hist.density_error(int(i))) << '\n';
    }
    return out.str();
}

json sample_sidecar(EnsembleParams const& params, std::uint64_t seed,
                    std::span<EigenvalueSample const> samples,
                    RadialHistogram const* hist,
                    DensityComparison const* comparison) {
    json j;
    j["n"] = params.n;
    j["m"] = params.m;
    j["N"] = params.N;
    j["seed"] = seed;
    j["draws"] = samples.size();
    double max_pairing = 0.0;
    double max_det = 0.0;
    bool any_tie = false;
    for (auto const& s : samples) {
        max_pairing = std::max(max_pairing, s.pairing_residual);
        max_det = std::max(max_det, s.det_residual);
        any_tie = any_tie || s.real_axis_tie;
    }
    j["max_pairing_residual"] = max_pairing;
    j["max_det_residual"] = max_det;
    j["real_axis_tie"] = any_tie;
    if (hist != nullptr) {
        j["histogram"] = {{"bins", hist->counts.size()},
                          {"r_max", hist->edges.back()},
                          {"scaling",
                           hist->scaling == HistogramScaling::scaled ? "scaled"
                                                                     : "raw"},
                          {"total", hist->total},
                          {"overflow", hist->overflow}};
    }
    if (comparison != nullptr) {
        j["comparison"] = {{"chi_square", comparison->chi_square},
                           {"dof", comparison->dof},
                           {"max_abs_z", comparison->max_abs_z}};
    }
    return j;
}

void write_file(std::string const& path, std::string const& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace pqg::io
