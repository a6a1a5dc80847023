#include "flowtopo/ingest/windows.hpp"

#include <array>
#include <cmath>

#include "flowtopo/errors.hpp"
#include "flowtopo/ingest/sqi.hpp"

namespace flowtopo::ingest {

const char* to_string(SkipReason r) {
    switch (r) {
    case SkipReason::ShortHistory: return "short_history";
    case SkipReason::StageExcluded: return "stage_excluded";
    case SkipReason::EventOverlap: return "event_overlap";
    case SkipReason::LowSqi: return "low_sqi";
    case SkipReason::TailTruncated: return "tail_truncated";
    }
    return "unknown";
}

bool intervals_overlap(double a_start, double a_end, double b_start,
                       double b_end) {
    return a_start < b_end && b_start < a_end;
}

WindowBuildResult build_windows(const Recording& recording,
                                const AnnotationSet& annotations,
                                double sqi_threshold,
                                const std::string& airflow_channel) {
    const Channel* airflow = recording.find_channel(airflow_channel);
    if (!airflow)
        throw ChannelMissingError("recording has no channel '" + airflow_channel +
                                  "'");

    WindowBuildResult result;
    result.total_epochs = annotations.stages.size();
    const double rate = airflow->rate_hz;
    const auto epoch_samples =
        static_cast<std::size_t>(std::llround(kEpochSeconds * rate));
    const std::size_t window_samples = epoch_samples * kWindowEpochs;

    for (std::size_t i = 0; i < annotations.stages.size(); ++i) {
        if (i < kHistoryEpochs) {
            ++result.skipped[static_cast<std::size_t>(SkipReason::ShortHistory)];
            continue;
        }
        const SleepStage stage = annotations.stages[i];
        if (stage == SleepStage::Unknown) {
            ++result.skipped[static_cast<std::size_t>(SkipReason::StageExcluded)];
            continue;
        }
        const double window_start = kEpochSeconds * static_cast<double>(i - kHistoryEpochs);
        const double window_end = kEpochSeconds * static_cast<double>(i + 1);
        bool excluded = false;
        for (const ScoredEvent& ev : annotations.events) {
            if (is_exclusion_event(ev.kind) &&
                intervals_overlap(window_start, window_end, ev.start_s, ev.end_s)) {
                excluded = true;
                break;
            }
        }
        if (excluded) {
            ++result.skipped[static_cast<std::size_t>(SkipReason::EventOverlap)];
            continue;
        }

        const std::size_t start_sample = (i - kHistoryEpochs) * epoch_samples;
        if (start_sample + window_samples > airflow->samples.size()) {
            // stages may overhang the recording by one partial epoch
            ++result.skipped[static_cast<std::size_t>(SkipReason::TailTruncated)];
            continue;
        }

        const std::size_t target_start = i * epoch_samples;
        const double quality =
            sqi({airflow->samples.data() + target_start, epoch_samples}, rate);
        if (quality < sqi_threshold) {
            ++result.skipped[static_cast<std::size_t>(SkipReason::LowSqi)];
            continue;
        }

        EpochWindow window;
        window.subject_id = recording.subject_id;
        window.target_epoch_index = static_cast<int>(i);
        window.airflow.assign(
            airflow->samples.begin() + static_cast<std::ptrdiff_t>(start_sample),
            airflow->samples.begin() +
                static_cast<std::ptrdiff_t>(start_sample + window_samples));
        window.airflow_rate_hz = rate;
        window.label = stage;
        window.sqi = quality;
        result.windows.push_back(std::move(window));
    }
    return result;
}

} // namespace flowtopo::ingest
