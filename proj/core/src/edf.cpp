#include "flowtopo/ingest/edf.hpp"

#include <cmath>
#include <cstring>
#include <fstream>

#include "flowtopo/errors.hpp"

namespace flowtopo::ingest {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(' ');
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(' ');
    return s.substr(a, b - a + 1);
}

struct Cursor {
    const std::string& data;
    std::size_t pos = 0;

    std::string take(std::size_t count) {
        if (pos + count > data.size())
            throw ParseError("EDF header ends prematurely",
                             static_cast<long long>(pos));
        std::string out = data.substr(pos, count);
        pos += count;
        return out;
    }

    std::string take_trimmed(std::size_t count) { return trim(take(count)); }

    long long take_int(std::size_t count, const char* what) {
        const std::size_t at = pos;
        const std::string field = take_trimmed(count);
        try {
            std::size_t used = 0;
            const long long v = std::stoll(field, &used);
            if (used != field.size()) throw std::invalid_argument(field);
            return v;
        } catch (const std::exception&) {
            throw ParseError(std::string("EDF: bad integer field ") + what,
                             static_cast<long long>(at));
        }
    }

    double take_double(std::size_t count, const char* what) {
        const std::size_t at = pos;
        const std::string field = take_trimmed(count);
        try {
            std::size_t used = 0;
            const double v = std::stod(field, &used);
            if (used != field.size()) throw std::invalid_argument(field);
            return v;
        } catch (const std::exception&) {
            throw ParseError(std::string("EDF: bad numeric field ") + what,
                             static_cast<long long>(at));
        }
    }
};

} // namespace

EdfFile read_edf_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw InputError("cannot open EDF file " + path);
    std::string data((std::istreambuf_iterator<char>(is)),
                     std::istreambuf_iterator<char>());

    if (data.size() < 256)
        throw ParseError("EDF file shorter than the 256-byte header", 0);

    EdfFile out;
    EdfHeader& h = out.header;
    Cursor cur{data};
    h.version = cur.take_trimmed(8);
    h.patient_id = cur.take_trimmed(80);
    h.recording_id = cur.take_trimmed(80);
    h.start_date = cur.take_trimmed(8);
    h.start_time = cur.take_trimmed(8);
    h.header_bytes = cur.take_int(8, "header bytes");
    h.reserved = cur.take_trimmed(44);
    h.record_count = cur.take_int(8, "record count");
    h.record_duration_s = cur.take_double(8, "record duration");
    h.signal_count = cur.take_int(4, "signal count");

    if (h.signal_count < 1)
        throw ParseError("EDF declares no signals", 252);
    const long long expected_header =
        256 * (1 + h.signal_count);
    if (h.header_bytes != expected_header)
        throw ParseError("EDF header length field does not match signal count",
                         184);
    if (data.size() < static_cast<std::size_t>(expected_header))
        throw ParseError("EDF file shorter than declared header", 184);
    if (h.record_duration_s <= 0.0)
        throw ParseError("EDF record duration must be positive", 244);

    const auto ns = static_cast<std::size_t>(h.signal_count);
    h.signals.resize(ns);
    for (auto& s : h.signals) s.label = cur.take_trimmed(16);
    for (auto& s : h.signals) s.transducer = cur.take_trimmed(80);
    for (auto& s : h.signals) s.physical_dim = cur.take_trimmed(8);
    for (auto& s : h.signals) s.physical_min = cur.take_double(8, "physical min");
    for (auto& s : h.signals) s.physical_max = cur.take_double(8, "physical max");
    for (auto& s : h.signals) s.digital_min = cur.take_int(8, "digital min");
    for (auto& s : h.signals) s.digital_max = cur.take_int(8, "digital max");
    for (auto& s : h.signals) s.prefiltering = cur.take_trimmed(80);
    for (auto& s : h.signals)
        s.samples_per_record = cur.take_int(8, "samples per record");
    for (auto& s : h.signals) cur.take(32); // per-signal reserved

    std::size_t record_bytes = 0;
    for (const auto& s : h.signals) {
        if (s.samples_per_record <= 0)
            throw ParseError("EDF: samples per record must be positive",
                             static_cast<long long>(cur.pos));
        if (s.digital_max == s.digital_min)
            throw CalibrationError("EDF signal '" + s.label +
                                   "': digital range is zero-width");
        if (s.physical_max == s.physical_min)
            throw CalibrationError("EDF signal '" + s.label +
                                   "': physical range is zero-width");
        record_bytes += static_cast<std::size_t>(s.samples_per_record) * 2;
    }

    const std::size_t data_bytes = data.size() - static_cast<std::size_t>(expected_header);
    long long records = h.record_count;
    if (records < 0) records = static_cast<long long>(data_bytes / record_bytes);
    if (static_cast<std::size_t>(records) * record_bytes > data_bytes) {
        const auto complete = static_cast<long long>(data_bytes / record_bytes);
        throw TruncationError("EDF data truncated in record " +
                                  std::to_string(complete),
                              complete);
    }

    Recording& rec = out.recording;
    rec.start_time = h.start_date + " " + h.start_time;
    {
        const std::string& pid = h.patient_id;
        const auto space = pid.find(' ');
        rec.subject_id = space == std::string::npos ? pid : pid.substr(0, space);
        if (rec.subject_id.empty()) rec.subject_id = "unknown";
    }

    rec.channels.resize(ns);
    for (std::size_t s = 0; s < ns; ++s) {
        rec.channels[s].name = h.signals[s].label;
        rec.channels[s].rate_hz =
            static_cast<double>(h.signals[s].samples_per_record) / h.record_duration_s;
        rec.channels[s].samples.reserve(
            static_cast<std::size_t>(records * h.signals[s].samples_per_record));
    }

    const unsigned char* bytes =
        reinterpret_cast<const unsigned char*>(data.data()) + expected_header;
    std::size_t offset = 0;
    for (long long r = 0; r < records; ++r) {
        for (std::size_t s = 0; s < ns; ++s) {
            const EdfSignalHeader& sh = h.signals[s];
            const double gain = (sh.physical_max - sh.physical_min) /
                                static_cast<double>(sh.digital_max - sh.digital_min);
            auto& samples = rec.channels[s].samples;
            for (long long k = 0; k < sh.samples_per_record; ++k) {
                const auto lo = static_cast<std::uint16_t>(bytes[offset]);
                const auto hi = static_cast<std::uint16_t>(bytes[offset + 1]);
                offset += 2;
                const auto raw = static_cast<std::int16_t>(
                    static_cast<std::uint16_t>(lo | (hi << 8)));
                samples.push_back(
                    (static_cast<double>(raw) - static_cast<double>(sh.digital_min)) *
                        gain +
                    sh.physical_min);
            }
        }
    }
    return out;
}

Recording read_edf(const std::string& path) {
    return read_edf_file(path).recording;
}

} // namespace flowtopo::ingest
