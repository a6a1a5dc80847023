#pragma once

#include <array>
#include <string>
#include <vector>

#include "flowtopo/types.hpp"

namespace flowtopo::ingest {

enum class SkipReason : std::uint8_t {
    ShortHistory,  // target index < 5
    StageExcluded, // label outside {Wake, NREM, REM}
    EventOverlap,  // an apnea/hypopnea/desaturation event touches the window
    LowSqi,        // target-epoch SQI below threshold
    TailTruncated, // stage entry overhangs the recorded samples
};

inline constexpr std::size_t kSkipReasonCount = 5;

const char* to_string(SkipReason r);

struct WindowBuildResult {
    std::vector<EpochWindow> windows;
    // one count per SkipReason, indexed by its enum value
    std::array<std::size_t, kSkipReasonCount> skipped{};
    std::size_t total_epochs = 0;
};

// Assemble the valid 6-epoch scoring windows of one recording.
//
// Epoch i is emitted iff i >= 5, stages[i] is a scored stage, no exclusion
// event overlaps [30(i-5), 30(i+1)) (half-open against half-open), and the
// SQI of epoch i reaches sqi_threshold. Each test is applied in that order
// and an epoch is counted under its first failure, so
// emitted + sum(skipped) == stages.size().
WindowBuildResult build_windows(const Recording& recording,
                                const AnnotationSet& annotations,
                                double sqi_threshold,
                                const std::string& airflow_channel = "airflow");

// Half-open interval intersection, the exclusion test used above.
bool intervals_overlap(double a_start, double a_end, double b_start,
                       double b_end);

} // namespace flowtopo::ingest
