#include "eo/error.hpp"

namespace eo {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::NotNilpotent: return "NotNilpotent";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::NotInImage: return "NotInImage";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::OddDegree: return "OddDegree";
        case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorKind::WindowEmpty: return "WindowEmpty";
        case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
        case ErrorKind::SchemaViolation: return "SchemaViolation";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& msg)
    : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace eo
