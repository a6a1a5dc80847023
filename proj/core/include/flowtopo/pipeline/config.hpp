#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flowtopo/features/assemble.hpp"

namespace flowtopo::pipeline {

// One run's knobs. Flag overrides win over the config file; the
// serialized form round-trips losslessly (doubles at 17 digits).
struct PipelineConfig {
    double sqi_threshold = 0.25;
    double airflow_downsample_hz = 8.0;
    std::size_t rips_max_points = 512;
    std::size_t embed_dim = 3;
    std::size_t n_coeffs = 15;
    std::vector<features::FeatureBlock> feature_blocks =
        features::parse_feature_blocks("Baseline+AP_FAPC+HEPC");
    int folds_k = 5;
    std::uint64_t seed = 0;
    std::size_t workers = 1;
    std::size_t constants_sample = 10000;
    std::string airflow_channel = "airflow";
    std::string output_format = "csv"; // csv | ndjson

    // io paths
    std::string constants_path;  // empty -> shipped defaults
    std::string manifest_in;     // subject manifest CSV
    std::string features_out;    // feature matrix
    std::string run_manifest_out;
    std::string diagrams_dir;    // optional diagram export
    std::string cache_dir;       // optional diagram cache

    void validate() const; // ConfigError on out-of-range values
};

std::string serialize_config(const PipelineConfig& config);
PipelineConfig parse_config(const std::string& text);

PipelineConfig load_config(const std::string& path);
void save_config(const PipelineConfig& config, const std::string& path);

// FNV-1a over the canonical serialization; stamped into run manifests.
std::string config_hash(const PipelineConfig& config);

} // namespace flowtopo::pipeline
