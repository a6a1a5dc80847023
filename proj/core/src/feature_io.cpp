#include "flowtopo/io/feature_io.hpp"

#include <sstream>

#include <json.hpp>

#include "flowtopo/errors.hpp"
#include "flowtopo/io/diagram_io.hpp"

namespace flowtopo::io {

std::string serialize_features_csv(const std::vector<std::string>& feature_columns,
                                   const std::vector<FeatureRow>& rows) {
    std::ostringstream os;
    for (const char* meta : kMetadataColumns) os << meta << ",";
    for (std::size_t i = 0; i < feature_columns.size(); ++i) {
        os << feature_columns[i];
        if (i + 1 < feature_columns.size()) os << ",";
    }
    os << "\n";
    for (const FeatureRow& row : rows) {
        if (row.features.size() != feature_columns.size())
            throw Error("feature row width does not match header");
        os << row.subject_id << "," << row.epoch_index << "," << row.label << ","
           << row.fold << "," << format_double(row.weight) << ","
           << row.quality_flags << ",";
        for (std::size_t i = 0; i < row.features.size(); ++i) {
            os << format_double(row.features[i]);
            if (i + 1 < row.features.size()) os << ",";
        }
        os << "\n";
    }
    return os.str();
}

std::string serialize_features_ndjson(const std::vector<std::string>& feature_columns,
                                      const std::vector<FeatureRow>& rows) {
    std::ostringstream os;
    for (const FeatureRow& row : rows) {
        if (row.features.size() != feature_columns.size())
            throw Error("feature row width does not match header");
        nlohmann::ordered_json obj;
        obj["subject_id"] = row.subject_id;
        obj["epoch_index"] = row.epoch_index;
        obj["label"] = row.label;
        obj["fold"] = row.fold;
        obj["weight"] = row.weight;
        obj["quality_flags"] = row.quality_flags;
        for (std::size_t i = 0; i < feature_columns.size(); ++i)
            obj[feature_columns[i]] = row.features[i];
        os << obj.dump() << "\n";
    }
    return os.str();
}

} // namespace flowtopo::io
