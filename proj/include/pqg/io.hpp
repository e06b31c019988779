// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "pqg/radial.hpp"
#include "pqg/sampler.hpp"

namespace pqg::io {

/// 17 significant digits; round-trips doubles exactly.
std::string fmt17(double x);

std::string density_table_csv(DensityTable const& table);
nlohmann::json density_table_sidecar(DensityTable const& table);

/// Columns (draw_index, re, im), canonical eigenvalue order.
std::string samples_csv(std::span<EigenvalueSample const> samples);

std::string histogram_csv(RadialHistogram const& hist);

nlohmann::json sample_sidecar(EnsembleParams const& params, std::uint64_t seed,
                              std::span<EigenvalueSample const> samples,
                              RadialHistogram const* hist,
                              DensityComparison const* comparison);

/// Throws std::runtime_error on failure.
void write_file(std::string const& path, std::string const& content);

}  // namespace pqg::io
