#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace flowtopo {

// ---------------------------------------------------------------------------
// Recordings and annotations
// ---------------------------------------------------------------------------

struct Channel {
    std::string name;
    double rate_hz = 0.0;
    std::vector<double> samples; // physical units
};

struct Recording {
    std::vector<Channel> channels;
    std::string subject_id;
    std::string start_time; // "dd.mm.yy hh.mm.ss" as recorded

    const Channel* find_channel(const std::string& name) const;
    double duration_s() const; // duration of the longest channel
};

enum class SleepStage : std::uint8_t { Wake, NREM, REM, Unknown };

const char* to_string(SleepStage s);
SleepStage stage_from_string(const std::string& text);

enum class EventKind : std::uint8_t {
    CentralApnea,
    MixedApnea,
    ObstructiveApnea,
    Hypopnea,
    Desaturation,
    Other,
};

const char* to_string(EventKind k);
EventKind event_kind_from_string(const std::string& text);

// Event kinds that disqualify co-located windows.
bool is_exclusion_event(EventKind k);

struct ScoredEvent {
    EventKind kind = EventKind::Other;
    double start_s = 0.0;
    double end_s = 0.0; // half-open [start_s, end_s)
};

struct Demographics {
    int age_years = 0;
    char sex = 'M'; // 'M' or 'F'
};

struct AnnotationSet {
    std::vector<SleepStage> stages; // one per 30 s epoch
    std::vector<ScoredEvent> events;
    Demographics demographics;
};

inline constexpr double kEpochSeconds = 30.0;
inline constexpr int kHistoryEpochs = 5; // predecessors per scoring window
inline constexpr int kWindowEpochs = kHistoryEpochs + 1;

// One scoring target: the 30 s epoch of interest plus its five predecessors.
struct EpochWindow {
    std::string subject_id;
    int target_epoch_index = 0; // >= kHistoryEpochs
    std::vector<double> airflow; // exactly 180 s at airflow_rate_hz
    double airflow_rate_hz = 0.0;
    SleepStage label = SleepStage::Unknown;
    double sqi = 0.0;

    double duration_s() const { return kWindowEpochs * kEpochSeconds; }
};

// ---------------------------------------------------------------------------
// Persistence diagrams
// ---------------------------------------------------------------------------

enum class DiagramSource : std::uint8_t {
    RipsAirflow,
    SublevelAirflow,
    SublevelIrr,
};

const char* to_string(DiagramSource s);
DiagramSource diagram_source_from_string(const std::string& text);

inline constexpr double kInfiniteDeath = std::numeric_limits<double>::infinity();

struct Bar {
    double birth = 0.0;
    double death = 0.0; // kInfiniteDeath for essential classes
    std::uint32_t multiplicity = 1;

    bool finite() const { return death != kInfiniteDeath; }
    double lifespan() const { return death - birth; }
};

struct PersistenceDiagram {
    std::vector<Bar> bars;
    int dim = 0; // homology dimension, 0 or 1
    DiagramSource source = DiagramSource::RipsAirflow;

    // Canonical form: bars sorted by (birth, death), equal bars merged
    // into multiplicity. Makes diagram equality and serialization
    // byte-stable.
    void normalize();

    // Largest finite death, or nullopt semantics via has_finite_bar().
    bool has_finite_bar() const;
    double max_finite_death() const;

    // Bars with finite death strictly above birth; these are the only
    // bars that contribute to persistence curves.
    bool has_positive_bar() const;
};

// Canonical key for the four diagram families of the pipeline.
struct SourceKey {
    DiagramSource source = DiagramSource::RipsAirflow;
    int dim = 0;

    bool operator==(const SourceKey&) const = default;
    bool operator<(const SourceKey& o) const {
        if (source != o.source) return source < o.source;
        return dim < o.dim;
    }
};

std::string to_string(const SourceKey& k);
SourceKey source_key_from_string(const std::string& text);

// The four families featurized by the pipeline, in export order.
const std::vector<SourceKey>& pipeline_source_keys();

} // namespace flowtopo
