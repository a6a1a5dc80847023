#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flowtopo/curves/constants.hpp"
#include "flowtopo/features/classical.hpp"
#include "flowtopo/types.hpp"

namespace flowtopo::features {

enum class FeatureBlock : std::uint8_t { Baseline, HEPC, AP_FAPC, SP_FAPC };

const char* to_string(FeatureBlock b);
FeatureBlock feature_block_from_string(const std::string& text); // ConfigError

// "Baseline+AP_FAPC+HEPC" -> ordered block list.
std::vector<FeatureBlock> parse_feature_blocks(const std::string& text);
std::string feature_blocks_to_string(const std::vector<FeatureBlock>& blocks);

// Values per source for one TDA block: 15 (HEPC) or 30 (FAPC) reals.
std::size_t block_width_per_source(FeatureBlock block, std::size_t n_coeffs);

// Full width of one block across the pipeline sources (Baseline is 11).
std::size_t block_width(FeatureBlock block, std::size_t n_coeffs);

struct FeatureVector {
    std::string subject_id;
    int target_epoch_index = 0;
    SleepStage label = SleepStage::Unknown;
    // concatenated (block_name, values) in configuration order
    std::vector<std::pair<std::string, std::vector<double>>> blocks;
    // degenerate-value markers, e.g. "ratio_capped", "zero_curve:<source>"
    std::vector<std::string> quality_flags;

    std::size_t total_width() const;
    std::vector<double> flattened() const;
};

// Assemble one feature vector from the window's classical statistics and
// its four persistence diagrams. Diagrams whose entropy curve is the
// ZeroCurve marker produce an all-zero block slice and a quality flag;
// the block widths never change.
FeatureVector assemble(const EpochWindow& window,
                       const ClassicalFeatures& classical,
                       const std::map<SourceKey, PersistenceDiagram>& diagrams,
                       const curves::FitConstants& constants,
                       const std::vector<FeatureBlock>& blocks,
                       std::size_t n_coeffs);

// Column names in export order: <block>.<index> for Baseline,
// <block>.<source_key>.<index> for TDA blocks.
std::vector<std::string> feature_column_names(
    const std::vector<FeatureBlock>& blocks, std::size_t n_coeffs);

} // namespace flowtopo::features
