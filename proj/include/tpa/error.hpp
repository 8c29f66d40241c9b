#pragma once

#include <stdexcept>
#include <string>

namespace tpa {

/// Base class for all errors raised by the library (invalid input,
/// malformed documents, inconsistent data).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Error with a source position, raised by the document parsers.
struct ParseError : Error {
    ParseError(const std::string& msg, int line, int col)
            : Error(msg), line(line), col(col) {}

    int line;
    int col;
};

}  // namespace tpa
