// flowtopo: respiratory recordings -> topological feature matrices.
//
// Subcommands: extract, constants, residual-report, folds.
// Exit codes: 0 success, 2 input error, 3 config error, 4 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "flowtopo/errors.hpp"
#include "flowtopo/pipeline/pipeline.hpp"
#include "flowtopo/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitConfig = 3;
constexpr int kExitInternal = 4;

struct ConfigFlags {
    std::optional<double> sqi_threshold;
    std::optional<double> airflow_downsample_hz;
    std::optional<std::size_t> rips_max_points;
    std::optional<std::size_t> n_coeffs;
    std::optional<std::string> feature_blocks;
    std::optional<int> folds_k;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> workers;
    std::optional<std::size_t> constants_sample;
    std::optional<std::string> airflow_channel;
    std::optional<std::string> output_format;
    std::optional<std::string> constants_path;
    std::optional<std::string> cache_dir;
    std::optional<std::string> diagrams_dir;
};

void add_config_flags(CLI::App* cmd, std::string& config_path, ConfigFlags& f) {
    cmd->add_option("--config", config_path, "config file (key = value lines)");
    cmd->add_option("--sqi-threshold", f.sqi_threshold, "SQI gate, default 0.25");
    cmd->add_option("--downsample-hz", f.airflow_downsample_hz,
                    "airflow rate before embedding, default 8");
    cmd->add_option("--rips-max-points", f.rips_max_points,
                    "subsample bound for Rips, default 512");
    cmd->add_option("--n-coeffs", f.n_coeffs, "coefficients per curve, default 15");
    cmd->add_option("--blocks", f.feature_blocks,
                    "feature blocks, e.g. Baseline+AP_FAPC+HEPC");
    cmd->add_option("--folds", f.folds_k, "cross-validation folds, default 5");
    cmd->add_option("--seed", f.seed, "seed for every random choice, default 0");
    cmd->add_option("--workers", f.workers, "worker threads, default 1");
    cmd->add_option("--constants-sample", f.constants_sample,
                    "diagram sample size for constants, default 10000");
    cmd->add_option("--airflow-channel", f.airflow_channel,
                    "recording channel name, default airflow");
    cmd->add_option("--format", f.output_format, "csv or ndjson, default csv");
    cmd->add_option("--constants", f.constants_path, "fit constants file");
    cmd->add_option("--cache-dir", f.cache_dir, "diagram cache directory");
    cmd->add_option("--diagrams-dir", f.diagrams_dir,
                    "export per-window diagram CSVs here");
}

flowtopo::pipeline::PipelineConfig resolve_config(const std::string& config_path,
                                                  const ConfigFlags& f) {
    using flowtopo::pipeline::PipelineConfig;
    PipelineConfig c = config_path.empty()
                           ? PipelineConfig{}
                           : flowtopo::pipeline::load_config(config_path);
    // flags win over the file
    if (f.sqi_threshold) c.sqi_threshold = *f.sqi_threshold;
    if (f.airflow_downsample_hz) c.airflow_downsample_hz = *f.airflow_downsample_hz;
    if (f.rips_max_points) c.rips_max_points = *f.rips_max_points;
    if (f.n_coeffs) c.n_coeffs = *f.n_coeffs;
    if (f.feature_blocks)
        c.feature_blocks = flowtopo::features::parse_feature_blocks(*f.feature_blocks);
    if (f.folds_k) c.folds_k = *f.folds_k;
    if (f.seed) c.seed = *f.seed;
    if (f.workers) c.workers = *f.workers;
    if (f.constants_sample) c.constants_sample = *f.constants_sample;
    if (f.airflow_channel) c.airflow_channel = *f.airflow_channel;
    if (f.output_format) c.output_format = *f.output_format;
    if (f.constants_path) c.constants_path = *f.constants_path;
    if (f.cache_dir) c.cache_dir = *f.cache_dir;
    if (f.diagrams_dir) c.diagrams_dir = *f.diagrams_dir;
    c.validate();
    return c;
}

void print_error(const char* kind, const std::exception& e) {
    std::cerr << "{\"error\": \"" << kind << "\", \"message\": \"" << e.what()
              << "\"}\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"topological feature extraction for respiratory recordings"};
    app.set_version_flag("--version", flowtopo::kVersion);
    app.require_subcommand(1);

    // extract
    auto* extract = app.add_subcommand(
        "extract", "subject manifest -> feature matrix + run manifest");
    std::string extract_config;
    ConfigFlags extract_flags;
    std::string manifest_in, features_out, run_manifest_out;
    add_config_flags(extract, extract_config, extract_flags);
    extract->add_option("--subjects", manifest_in,
                        "subject manifest CSV: subject_id,recording,stages,"
                        "events,age_years,sex[,csv_rate_hz]");
    extract->add_option("--out", features_out, "feature matrix output path");
    extract->add_option("--run-manifest", run_manifest_out,
                        "run manifest JSON output path");

    // constants
    auto* constants = app.add_subcommand(
        "constants", "diagram sample directory -> fit constants file");
    std::string constants_config;
    ConfigFlags constants_flags;
    std::string constants_diagrams, constants_out;
    add_config_flags(constants, constants_config, constants_flags);
    constants->add_option("--diagrams", constants_diagrams,
                          "directory of diagram CSVs")->required();
    constants->add_option("--out", constants_out, "constants output path")
        ->required();

    // residual-report
    auto* report = app.add_subcommand(
        "residual-report", "mean residual per (source, method) as CSV");
    std::string report_config;
    ConfigFlags report_flags;
    std::string report_diagrams, report_out;
    add_config_flags(report, report_config, report_flags);
    report->add_option("--diagrams", report_diagrams,
                       "directory of diagram CSVs")->required();
    report->add_option("--out", report_out, "report output path (stdout if empty)");

    // folds
    auto* folds = app.add_subcommand(
        "folds", "demographics CSV -> per-subject fold assignment CSV");
    std::string folds_demographics, folds_out;
    int folds_k = 5;
    std::uint64_t folds_seed = 0;
    folds->add_option("--demographics", folds_demographics,
                      "CSV: subject_id,age_years,sex")->required();
    folds->add_option("--out", folds_out, "fold CSV output path")->required();
    folds->add_option("--k", folds_k, "fold count, default 5");
    folds->add_option("--seed", folds_seed, "shuffle seed, default 0");

    CLI11_PARSE(app, argc, argv);

    try {
        if (extract->parsed()) {
            flowtopo::pipeline::PipelineConfig config =
                resolve_config(extract_config, extract_flags);
            if (!manifest_in.empty()) config.manifest_in = manifest_in;
            if (!features_out.empty()) config.features_out = features_out;
            if (!run_manifest_out.empty()) config.run_manifest_out = run_manifest_out;
            const auto summary = flowtopo::pipeline::run_extract(config);
            std::cout << "extract: " << summary.windows_emitted << " windows from "
                      << summary.subjects << " subjects ("
                      << summary.epochs_total << " candidate epochs)\n";
        } else if (constants->parsed()) {
            const auto config = resolve_config(constants_config, constants_flags);
            std::vector<std::string> warnings;
            flowtopo::pipeline::run_constants(config, constants_diagrams,
                                              constants_out, &warnings);
            for (const std::string& w : warnings)
                std::cerr << "warning: " << w << "\n";
            std::cout << "constants: wrote " << constants_out << "\n";
        } else if (report->parsed()) {
            const auto config = resolve_config(report_config, report_flags);
            const auto rows =
                flowtopo::pipeline::run_residual_report(config, report_diagrams);
            const std::string csv = flowtopo::pipeline::residual_report_csv(rows);
            if (report_out.empty()) {
                std::cout << csv;
            } else {
                std::ofstream os(report_out, std::ios::binary);
                if (!os)
                    throw flowtopo::InputError("cannot write report to " + report_out);
                os << csv;
                std::cout << "residual-report: wrote " << report_out << "\n";
            }
        } else if (folds->parsed()) {
            flowtopo::pipeline::run_folds(folds_demographics, folds_k, folds_seed,
                                          folds_out);
            std::cout << "folds: wrote " << folds_out << "\n";
        }
    } catch (const flowtopo::ConfigError& e) {
        print_error("config", e);
        return kExitConfig;
    } catch (const flowtopo::ParseError& e) {
        print_error("input", e);
        return kExitInput;
    } catch (const flowtopo::InputError& e) {
        print_error("input", e);
        return kExitInput;
    } catch (const flowtopo::Error& e) {
        print_error("internal", e);
        return kExitInternal;
    } catch (const std::exception& e) {
        print_error("internal", e);
        return kExitInternal;
    }
    return kExitOk;
}
