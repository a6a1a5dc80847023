#pragma once

#include <map>
#include <string>
#include <vector>

#include "flowtopo/curves/coefficients.hpp"
#include "flowtopo/types.hpp"

namespace flowtopo::curves {

// Per-source fitting constants: the Hermite pre-scaling factor and the
// fixed Fourier basis domain.
struct FitConstants {
    std::map<SourceKey, double> hepc_scale;
    std::map<SourceKey, Domain> sp_domain;

    double scale_for(const SourceKey& key) const;  // ConfigError if absent
    Domain domain_for(const SourceKey& key) const; // ConfigError if absent
};

// Shipped defaults for the four pipeline sources.
FitConstants default_fit_constants();

// Estimate constants from a diagram sample, already grouped by source:
//   hepc_scale = mean over diagrams of (5 / max finite death)
//   sp_domain  = (25th percentile of per-diagram support minima,
//                 75th percentile of per-diagram support maxima)
// Diagrams without finite bars are skipped; a source with no usable
// diagram is omitted and reported in `warnings`.
FitConstants estimate_constants(
    const std::map<SourceKey, std::vector<PersistenceDiagram>>& sample,
    std::vector<std::string>* warnings = nullptr);

// Key-value text round-trip, one line per entry:
//   <source_key>.hepc_scale = <value>
//   <source_key>.sp_domain = <d_min> <d_max>
std::string serialize_fit_constants(const FitConstants& constants);
FitConstants parse_fit_constants(const std::string& text);

void save_fit_constants(const FitConstants& constants, const std::string& path);
FitConstants load_fit_constants(const std::string& path);

} // namespace flowtopo::curves
