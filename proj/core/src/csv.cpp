#include "flowtopo/ingest/csv.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "flowtopo/errors.hpp"

namespace flowtopo::ingest {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool parse_double(const std::string& field, double& out) {
    try {
        std::size_t used = 0;
        out = std::stod(field, &used);
        return used == field.size();
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_int(const std::string& field, long long& out) {
    try {
        std::size_t used = 0;
        out = std::stoll(field, &used);
        return used == field.size();
    } catch (const std::exception&) {
        return false;
    }
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw InputError("cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    return lines;
}

} // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

Recording read_csv_recording(const std::string& path, double rate_hz,
                             const std::string& channel_name) {
    if (rate_hz <= 0.0) throw ConfigError("read_csv_recording: rate must be positive");
    const std::vector<std::string> lines = read_lines(path);

    Channel channel;
    channel.name = channel_name;
    channel.rate_hz = rate_hz;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string line = trim(lines[i]);
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        // header row: first field non-numeric on the first line
        double first = 0.0;
        if (i == 0 && !fields.empty() && !parse_double(fields[0], first)) continue;
        double value = 0.0;
        bool ok = false;
        if (fields.size() == 1) {
            ok = parse_double(fields[0], value);
        } else if (fields.size() >= 2) {
            double t = 0.0;
            ok = parse_double(fields[0], t) && parse_double(fields[1], value);
        }
        if (!ok)
            throw ParseError("non-numeric row in " + path,
                             static_cast<long long>(i + 1));
        channel.samples.push_back(value);
    }
    if (channel.samples.empty())
        throw ParseError("no samples in " + path, 0);

    Recording rec;
    rec.subject_id = "unknown";
    rec.channels.push_back(std::move(channel));
    return rec;
}

std::vector<SleepStage> read_stages_csv(const std::string& path) {
    const std::vector<std::string> lines = read_lines(path);
    std::vector<std::pair<long long, SleepStage>> entries;
    long long max_index = -1;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string line = trim(lines[i]);
        if (line.empty() || line[0] == '#') continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() < 2)
            throw ParseError("stage row needs (epoch_index, stage) in " + path,
                             static_cast<long long>(i + 1));
        long long index = 0;
        if (!parse_int(fields[0], index)) {
            if (i == 0) continue; // header
            throw ParseError("bad epoch index in " + path,
                             static_cast<long long>(i + 1));
        }
        if (index < 0)
            throw ParseError("negative epoch index in " + path,
                             static_cast<long long>(i + 1));
        entries.emplace_back(index, stage_from_string(fields[1]));
        max_index = std::max(max_index, index);
    }
    std::vector<SleepStage> stages(static_cast<std::size_t>(max_index + 1),
                                   SleepStage::Unknown);
    for (const auto& [index, stage] : entries)
        stages[static_cast<std::size_t>(index)] = stage;
    return stages;
}

std::vector<ScoredEvent> read_events_csv(const std::string& path) {
    const std::vector<std::string> lines = read_lines(path);
    std::vector<ScoredEvent> events;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string line = trim(lines[i]);
        if (line.empty() || line[0] == '#') continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() < 3)
            throw ParseError("event row needs (kind, start_s, end_s) in " + path,
                             static_cast<long long>(i + 1));
        ScoredEvent ev;
        ev.kind = event_kind_from_string(fields[0]);
        if (!parse_double(fields[1], ev.start_s) ||
            !parse_double(fields[2], ev.end_s)) {
            if (i == 0) continue; // header
            throw ParseError("bad event times in " + path,
                             static_cast<long long>(i + 1));
        }
        if (ev.start_s < 0.0 || ev.end_s <= ev.start_s)
            throw ParseError("event interval must satisfy end > start >= 0 in " +
                                 path,
                             static_cast<long long>(i + 1));
        events.push_back(ev);
    }
    return events;
}

std::vector<SubjectDemographics> read_demographics_csv(const std::string& path) {
    const std::vector<std::string> lines = read_lines(path);
    std::vector<SubjectDemographics> out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string line = trim(lines[i]);
        if (line.empty() || line[0] == '#') continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() < 3)
            throw ParseError("demographics row needs (subject_id, age_years, sex) in " +
                                 path,
                             static_cast<long long>(i + 1));
        long long age = 0;
        if (!parse_int(fields[1], age)) {
            if (i == 0) continue; // header
            throw ParseError("bad age in " + path, static_cast<long long>(i + 1));
        }
        SubjectDemographics sd;
        sd.subject_id = fields[0];
        sd.demographics.age_years = static_cast<int>(age);
        const std::string sex = fields[2];
        if (sex != "M" && sex != "F" && sex != "m" && sex != "f")
            throw ParseError("sex must be M or F in " + path,
                             static_cast<long long>(i + 1));
        sd.demographics.sex =
            static_cast<char>(std::toupper(static_cast<unsigned char>(sex[0])));
        out.push_back(std::move(sd));
    }
    return out;
}

} // namespace flowtopo::ingest
