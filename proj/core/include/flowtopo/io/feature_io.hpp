#pragma once

#include <string>
#include <vector>

#include "flowtopo/features/assemble.hpp"

namespace flowtopo::io {

// One exported row: metadata columns followed by the flattened feature
// blocks. quality_flags is a ';'-joined list (empty when clean).
struct FeatureRow {
    std::string subject_id;
    int epoch_index = 0;
    std::string label;
    int fold = 0;
    double weight = 1.0;
    std::string quality_flags;
    std::vector<double> features;
};

inline constexpr const char* kMetadataColumns[] = {
    "subject_id", "epoch_index", "label", "fold", "weight", "quality_flags",
};

// CSV with a full header row; rows must already be in canonical
// (subject_id, epoch_index) order.
std::string serialize_features_csv(const std::vector<std::string>& feature_columns,
                                   const std::vector<FeatureRow>& rows);

// NDJSON twin: one object per row, same keys as the CSV columns.
std::string serialize_features_ndjson(const std::vector<std::string>& feature_columns,
                                      const std::vector<FeatureRow>& rows);

} // namespace flowtopo::io
