#include "flowtopo/features/assemble.hpp"

#include <sstream>

#include "flowtopo/curves/fapc.hpp"
#include "flowtopo/curves/hepc.hpp"
#include "flowtopo/errors.hpp"

namespace flowtopo::features {

const char* to_string(FeatureBlock b) {
    switch (b) {
    case FeatureBlock::Baseline: return "Baseline";
    case FeatureBlock::HEPC: return "HEPC";
    case FeatureBlock::AP_FAPC: return "AP_FAPC";
    case FeatureBlock::SP_FAPC: return "SP_FAPC";
    }
    return "Baseline";
}

FeatureBlock feature_block_from_string(const std::string& text) {
    if (text == "Baseline") return FeatureBlock::Baseline;
    if (text == "HEPC") return FeatureBlock::HEPC;
    if (text == "AP_FAPC") return FeatureBlock::AP_FAPC;
    if (text == "SP_FAPC") return FeatureBlock::SP_FAPC;
    throw ConfigError("unknown feature block '" + text + "'");
}

std::vector<FeatureBlock> parse_feature_blocks(const std::string& text) {
    std::vector<FeatureBlock> blocks;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, '+')) {
        if (token.empty()) continue;
        blocks.push_back(feature_block_from_string(token));
    }
    if (blocks.empty()) throw ConfigError("feature block list is empty");
    return blocks;
}

std::string feature_blocks_to_string(const std::vector<FeatureBlock>& blocks) {
    std::string out;
    for (const FeatureBlock b : blocks) {
        if (!out.empty()) out += "+";
        out += to_string(b);
    }
    return out;
}

std::size_t block_width_per_source(FeatureBlock block, std::size_t n_coeffs) {
    switch (block) {
    case FeatureBlock::Baseline: return kClassicalFeatureCount;
    case FeatureBlock::HEPC: return n_coeffs;
    case FeatureBlock::AP_FAPC:
    case FeatureBlock::SP_FAPC: return 2 * n_coeffs;
    }
    return 0;
}

std::size_t block_width(FeatureBlock block, std::size_t n_coeffs) {
    if (block == FeatureBlock::Baseline) return kClassicalFeatureCount;
    return pipeline_source_keys().size() * block_width_per_source(block, n_coeffs);
}

std::size_t FeatureVector::total_width() const {
    std::size_t width = 0;
    for (const auto& [name, values] : blocks) width += values.size();
    return width;
}

std::vector<double> FeatureVector::flattened() const {
    std::vector<double> out;
    out.reserve(total_width());
    for (const auto& [name, values] : blocks)
        out.insert(out.end(), values.begin(), values.end());
    return out;
}

FeatureVector assemble(const EpochWindow& window,
                       const ClassicalFeatures& classical,
                       const std::map<SourceKey, PersistenceDiagram>& diagrams,
                       const curves::FitConstants& constants,
                       const std::vector<FeatureBlock>& blocks,
                       std::size_t n_coeffs) {
    FeatureVector out;
    out.subject_id = window.subject_id;
    out.target_epoch_index = window.target_epoch_index;
    out.label = window.label;
    if (classical.ratio_capped) out.quality_flags.push_back("ratio_capped");

    for (const FeatureBlock block : blocks) {
        if (block == FeatureBlock::Baseline) {
            out.blocks.emplace_back(
                to_string(block),
                std::vector<double>(classical.values.begin(), classical.values.end()));
            continue;
        }
        std::vector<double> values;
        values.reserve(block_width(block, n_coeffs));
        for (const SourceKey& key : pipeline_source_keys()) {
            const auto it = diagrams.find(key);
            if (it == diagrams.end())
                throw ConfigError("assemble: diagram missing for source " +
                                  to_string(key));
            const PersistenceDiagram& diagram = it->second;
            const std::size_t width = block_width_per_source(block, n_coeffs);
            if (!diagram.has_positive_bar()) {
                values.insert(values.end(), width, 0.0);
                out.quality_flags.push_back("zero_curve:" + to_string(key) + ":" +
                                            to_string(block));
                continue;
            }
            curves::CoefficientVector coeffs;
            switch (block) {
            case FeatureBlock::HEPC:
                coeffs = curves::hepc_coefficients(diagram, n_coeffs,
                                                   constants.scale_for(key));
                break;
            case FeatureBlock::AP_FAPC:
                coeffs = curves::fapc_coefficients(diagram, n_coeffs,
                                                   *curves::ap_domain(diagram),
                                                   curves::ApproximationKind::AP_FAPC);
                break;
            case FeatureBlock::SP_FAPC:
                coeffs = curves::fapc_coefficients(diagram, n_coeffs,
                                                   constants.domain_for(key),
                                                   curves::ApproximationKind::SP_FAPC);
                break;
            default: break;
            }
            values.insert(values.end(), coeffs.values.begin(), coeffs.values.end());
        }
        out.blocks.emplace_back(to_string(block), std::move(values));
    }
    return out;
}

std::vector<std::string> feature_column_names(
    const std::vector<FeatureBlock>& blocks, std::size_t n_coeffs) {
    std::vector<std::string> names;
    for (const FeatureBlock block : blocks) {
        if (block == FeatureBlock::Baseline) {
            for (std::size_t i = 0; i < kClassicalFeatureCount; ++i)
                names.push_back(std::string(to_string(block)) + "." +
                                std::to_string(i));
            continue;
        }
        for (const SourceKey& key : pipeline_source_keys()) {
            const std::size_t width = block_width_per_source(block, n_coeffs);
            for (std::size_t i = 0; i < width; ++i)
                names.push_back(std::string(to_string(block)) + "." + to_string(key) +
                                "." + std::to_string(i));
        }
    }
    return names;
}

} // namespace flowtopo::features
