#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flowtopo/types.hpp"

namespace flowtopo::ingest {

// Raw textual fields of one EDF signal header, exactly as stored on disk
// (fixed-width ASCII, unpadded here).
struct EdfSignalHeader {
    std::string label;         // 16 bytes
    std::string transducer;    // 80
    std::string physical_dim;  // 8
    double physical_min = 0.0; // 8
    double physical_max = 0.0; // 8
    long long digital_min = 0; // 8
    long long digital_max = 0; // 8
    std::string prefiltering;  // 80
    long long samples_per_record = 0; // 8
};

struct EdfHeader {
    std::string version;        // 8 bytes
    std::string patient_id;     // 80
    std::string recording_id;   // 80
    std::string start_date;     // 8, dd.mm.yy
    std::string start_time;     // 8, hh.mm.ss
    long long header_bytes = 0; // 8
    std::string reserved;       // 44
    long long record_count = 0; // 8, -1 allowed (derived from file size)
    double record_duration_s = 0.0; // 8
    long long signal_count = 0; // 4
    std::vector<EdfSignalHeader> signals;
};

struct EdfFile {
    EdfHeader header;
    Recording recording;
};

// Parse an EDF file: 256-byte fixed header, 256 bytes of per-signal
// header fields, 16-bit little-endian two's-complement data records.
// Samples are calibrated to physical units:
//   (digital - digital_min) * (phys_max - phys_min)
//       / (digital_max - digital_min) + phys_min
//
// Throws ParseError (with byte offset) on malformed headers,
// CalibrationError on a zero-width digital or physical range, and
// TruncationError (with the record index) when the data section ends
// mid-record.
EdfFile read_edf_file(const std::string& path);

// The Recording alone; subject_id comes from the patient field
// (first whitespace-separated token, or the whole trimmed field).
Recording read_edf(const std::string& path);

} // namespace flowtopo::ingest
