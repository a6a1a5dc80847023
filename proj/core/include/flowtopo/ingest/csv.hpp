#pragma once

#include <string>
#include <vector>

#include "flowtopo/types.hpp"

namespace flowtopo::ingest {

// Single-channel recording from numeric text: either one value per line or
// two comma-separated columns (time_s, value); only the value column is
// kept, the rate comes from the argument. A non-numeric first row is
// treated as a header. Line numbers in errors are 1-based over all file
// lines, header included.
Recording read_csv_recording(const std::string& path, double rate_hz,
                             const std::string& channel_name = "airflow");

// Stage CSV: rows (epoch_index, stage); stages may arrive unordered and
// sparse, missing indices default to Unknown.
std::vector<SleepStage> read_stages_csv(const std::string& path);

// Event CSV: rows (kind, start_s, end_s).
std::vector<ScoredEvent> read_events_csv(const std::string& path);

struct SubjectDemographics {
    std::string subject_id;
    Demographics demographics;
};

// Demographics CSV: rows (subject_id, age_years, sex).
std::vector<SubjectDemographics> read_demographics_csv(const std::string& path);

// Split one CSV line on commas; fields are trimmed of surrounding spaces.
std::vector<std::string> split_csv_line(const std::string& line);

} // namespace flowtopo::ingest
