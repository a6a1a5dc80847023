#include "flowtopo/types.hpp"

#include <algorithm>
#include <cctype>

#include "flowtopo/errors.hpp"

namespace flowtopo {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

const Channel* Recording::find_channel(const std::string& name) const {
    const std::string want = lower(name);
    for (const auto& ch : channels) {
        if (lower(ch.name) == want) return &ch;
    }
    return nullptr;
}

double Recording::duration_s() const {
    double best = 0.0;
    for (const auto& ch : channels) {
        if (ch.rate_hz > 0.0)
            best = std::max(best, static_cast<double>(ch.samples.size()) / ch.rate_hz);
    }
    return best;
}

const char* to_string(SleepStage s) {
    switch (s) {
    case SleepStage::Wake: return "Wake";
    case SleepStage::NREM: return "NREM";
    case SleepStage::REM: return "REM";
    case SleepStage::Unknown: return "Unknown";
    }
    return "Unknown";
}

SleepStage stage_from_string(const std::string& text) {
    const std::string t = lower(text);
    if (t == "wake") return SleepStage::Wake;
    if (t == "nrem") return SleepStage::NREM;
    if (t == "rem") return SleepStage::REM;
    return SleepStage::Unknown;
}

const char* to_string(EventKind k) {
    switch (k) {
    case EventKind::CentralApnea: return "central_apnea";
    case EventKind::MixedApnea: return "mixed_apnea";
    case EventKind::ObstructiveApnea: return "obstructive_apnea";
    case EventKind::Hypopnea: return "hypopnea";
    case EventKind::Desaturation: return "desaturation";
    case EventKind::Other: return "other";
    }
    return "other";
}

EventKind event_kind_from_string(const std::string& text) {
    const std::string t = lower(text);
    if (t == "central_apnea") return EventKind::CentralApnea;
    if (t == "mixed_apnea") return EventKind::MixedApnea;
    if (t == "obstructive_apnea") return EventKind::ObstructiveApnea;
    if (t == "hypopnea") return EventKind::Hypopnea;
    if (t == "desaturation") return EventKind::Desaturation;
    return EventKind::Other;
}

bool is_exclusion_event(EventKind k) {
    return k != EventKind::Other;
}

const char* to_string(DiagramSource s) {
    switch (s) {
    case DiagramSource::RipsAirflow: return "rips_airflow";
    case DiagramSource::SublevelAirflow: return "sublevel_airflow";
    case DiagramSource::SublevelIrr: return "sublevel_irr";
    }
    return "rips_airflow";
}

DiagramSource diagram_source_from_string(const std::string& text) {
    const std::string t = lower(text);
    if (t == "rips_airflow") return DiagramSource::RipsAirflow;
    if (t == "sublevel_airflow") return DiagramSource::SublevelAirflow;
    if (t == "sublevel_irr") return DiagramSource::SublevelIrr;
    throw ConfigError("unknown diagram source: " + text);
}

void PersistenceDiagram::normalize() {
    std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    });
    std::vector<Bar> merged;
    merged.reserve(bars.size());
    for (const Bar& b : bars) {
        if (!merged.empty() && merged.back().birth == b.birth &&
            merged.back().death == b.death) {
            merged.back().multiplicity += b.multiplicity;
        } else {
            merged.push_back(b);
        }
    }
    bars.swap(merged);
}

bool PersistenceDiagram::has_finite_bar() const {
    return std::any_of(bars.begin(), bars.end(),
                       [](const Bar& b) { return b.finite(); });
}

double PersistenceDiagram::max_finite_death() const {
    double best = -std::numeric_limits<double>::infinity();
    for (const Bar& b : bars) {
        if (b.finite()) best = std::max(best, b.death);
    }
    return best;
}

bool PersistenceDiagram::has_positive_bar() const {
    return std::any_of(bars.begin(), bars.end(), [](const Bar& b) {
        return b.finite() && b.death > b.birth;
    });
}

std::string to_string(const SourceKey& k) {
    return std::string(to_string(k.source)) + "_h" + std::to_string(k.dim);
}

SourceKey source_key_from_string(const std::string& text) {
    const auto pos = text.rfind("_h");
    if (pos == std::string::npos || pos + 2 >= text.size())
        throw ConfigError("bad source key: " + text);
    SourceKey key;
    key.source = diagram_source_from_string(text.substr(0, pos));
    key.dim = std::stoi(text.substr(pos + 2));
    if (key.dim != 0 && key.dim != 1)
        throw ConfigError("bad source key dimension: " + text);
    return key;
}

const std::vector<SourceKey>& pipeline_source_keys() {
    static const std::vector<SourceKey> keys = {
        {DiagramSource::RipsAirflow, 0},
        {DiagramSource::RipsAirflow, 1},
        {DiagramSource::SublevelAirflow, 0},
        {DiagramSource::SublevelIrr, 0},
    };
    return keys;
}

} // namespace flowtopo
