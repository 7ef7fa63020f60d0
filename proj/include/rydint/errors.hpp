#pragma once

#include <stdexcept>
#include <string>

namespace rydint {

enum class ErrorKind {
    Argument, // bad inputs, selection-rule violations, unsupported configurations
    Data,     // missing or malformed atomic data
    Numeric,  // solver / integration failures
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct ArgumentError : Error {
    explicit ArgumentError(const std::string& msg) : Error(ErrorKind::Argument, msg) {}
};

struct DataNotFoundError : Error {
    explicit DataNotFoundError(const std::string& msg) : Error(ErrorKind::Data, msg) {}
};

struct NumericError : Error {
    explicit NumericError(const std::string& msg) : Error(ErrorKind::Numeric, msg) {}
};

} // namespace rydint
