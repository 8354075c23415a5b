#pragma once

#include <stdexcept>
#include <string>

namespace mapforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegreeMismatchError : Error {
    DegreeMismatchError(int lhs, int rhs)
        : Error("degree mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

struct InvalidConstellationError : Error {
    using Error::Error;
};

struct HypermapModeError : Error {
    HypermapModeError() : Error("operation requires map mode; got a hypermap") {}
};

struct UnknownEdgeError : Error {
    using Error::Error;
};

struct SlotOutOfRangeError : Error {
    SlotOutOfRangeError(int slot, int size)
        : Error("slot " + std::to_string(slot) + " out of range 1.." + std::to_string(size)) {}
};

struct NotGentleError : Error {
    using Error::Error;
};

struct InconsistentDataError : Error {
    using Error::Error;
};

struct UnsupportedFormatError : Error {
    explicit UnsupportedFormatError(const std::string& fmt)
        : Error("unsupported format: " + fmt) {}
};

// Parse failure with a 1-based source location.
struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& msg)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(column_) +
                ": " + msg),
          line(line_), column(column_) {}
};

struct DuplicateKeyError : ParseError {
    DuplicateKeyError(int line_, int column_, const std::string& key)
        : ParseError(line_, column_, "duplicate key '" + key + "'") {}
};

}  // namespace mapforge
