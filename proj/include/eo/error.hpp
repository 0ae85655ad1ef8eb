#pragma once

#include <stdexcept>
#include <string>

namespace eo {

enum class ErrorKind {
    NotSquare,
    NotNilpotent,
    OutOfRange,
    NotInImage,
    TooLarge,
    InvariantViolation,
    OddDegree,
    DegreeTooSmall,
    WindowEmpty,
    UnsupportedFormat,
    SchemaViolation,
    InvalidArgument,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg);
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& msg);

}  // namespace eo
