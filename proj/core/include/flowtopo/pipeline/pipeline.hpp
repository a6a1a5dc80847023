#pragma once

#include <map>
#include <string>
#include <vector>

#include "flowtopo/curves/constants.hpp"
#include "flowtopo/pipeline/config.hpp"
#include "flowtopo/preprocess/irr.hpp"
#include "flowtopo/types.hpp"

namespace flowtopo::pipeline {

// One line of the subject manifest CSV:
//   subject_id, recording, stages, events, age_years, sex[, csv_rate_hz]
// recording may be .edf or .csv (csv_rate_hz required then). AHI-based
// subject selection happens upstream when this file is written.
struct SubjectEntry {
    std::string subject_id;
    std::string recording_path;
    std::string stages_path;
    std::string events_path;
    int age_years = 0;
    char sex = 'M';
    double csv_rate_hz = 0.0;
};

std::vector<SubjectEntry> read_subject_manifest(const std::string& path);

// The four diagrams of one scoring window: Rips H0/H1 of the embedded,
// subsampled airflow plus sublevel H0 of the filtered airflow and of the
// IRR signal.
std::map<SourceKey, PersistenceDiagram> compute_window_diagrams(
    const EpochWindow& window, const std::vector<double>& filtered,
    const preprocess::IrrSignal& irr_signal, const PipelineConfig& config);

struct ExtractSummary {
    std::size_t subjects = 0;
    std::size_t windows_emitted = 0;
    std::size_t epochs_total = 0;
    std::map<std::string, std::size_t> skipped_total; // reason -> count
};

// extract: manifest -> feature matrix + run manifest. Deterministic for a
// fixed (inputs, config, seed) regardless of worker count; rows are sorted
// by (subject_id, epoch_index) before writing.
ExtractSummary run_extract(const PipelineConfig& config);

// constants: directory of diagram CSVs -> fit constants file. At most
// config.constants_sample diagrams per source enter the estimate (seeded
// subsample when more are available; a smaller sample is used whole, with
// a warning).
void run_constants(const PipelineConfig& config, const std::string& diagrams_dir,
                   const std::string& out_path,
                   std::vector<std::string>* warnings = nullptr);

struct ResidualReportRow {
    SourceKey key;
    std::size_t diagrams = 0;
    double mean_residual_hepc = 0.0;
    double mean_residual_sp_fapc = 0.0;
    double mean_residual_ap_fapc = 0.0;
    double min_d_min = 0.0;
    double median_d_min = 0.0;
    double median_d_max = 0.0;
    double max_d_max = 0.0;
};

// residual-report: mean reconstruction residual per (source, method) plus
// the support statistics, one row per source. Constants come from
// config.constants_path when set, otherwise they are estimated from the
// same sample.
std::vector<ResidualReportRow> run_residual_report(
    const PipelineConfig& config, const std::string& diagrams_dir);

std::string residual_report_csv(const std::vector<ResidualReportRow>& rows);

// folds: demographics CSV -> per-subject fold CSV (subject_id, fold).
void run_folds(const std::string& demographics_csv, int k, std::uint64_t seed,
               const std::string& out_path);

// Diagram corpus loader shared by constants / residual-report: every
// *.csv under the directory (sorted, recursive), one diagram per
// (file, source, dim).
std::map<SourceKey, std::vector<PersistenceDiagram>> load_diagram_corpus(
    const std::string& dir);

} // namespace flowtopo::pipeline
