#pragma once

#include <stdexcept>
#include <string>

namespace flowtopo {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file. Carries the byte offset (binary formats) or
// line number (text formats) of the first offending location.
class ParseError : public Error {
public:
    ParseError(const std::string& what, long long where)
        : Error(what), offset(where) {}
    long long offset;
};

// Degenerate calibration range in a recording header.
class CalibrationError : public Error {
public:
    using Error::Error;
};

// Data section ends mid-record.
class TruncationError : public Error {
public:
    TruncationError(const std::string& what, long long record)
        : Error(what), record_index(record) {}
    long long record_index;
};

class ChannelMissingError : public Error {
public:
    using Error::Error;
};

// Fewer than two breath onsets were found; the caller drops the window.
class EmptyBreathsError : public Error {
public:
    using Error::Error;
};

// Series too short for the requested delay embedding.
class EmbeddingError : public Error {
public:
    using Error::Error;
};

// Zero-width approximation domain.
class DomainError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class MissingClassError : public Error {
public:
    using Error::Error;
};

// Requested coefficient order beyond the guarded Hermite range.
class OverflowGuardError : public Error {
public:
    using Error::Error;
};

// Bad or missing input handed to a pipeline command.
class InputError : public Error {
public:
    using Error::Error;
};

} // namespace flowtopo
