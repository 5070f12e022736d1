#ifndef TANALG_ERRORS_HPP
#define TANALG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tanalg {

// Base of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands belong to different rings, or free-module ranks do not match.
struct RingError : Error {
    using Error::Error;
};

// A mathematical precondition was violated (empty/full germ where a proper
// one is required, smooth input to a singular-only check, zero witness, ...).
struct DomainError : Error {
    using Error::Error;
};

// Malformed input text. offset is 0-based into the parsed string; line and
// column are 1-based.
struct ParseError : Error {
    std::size_t offset;
    int line;
    int column;
    ParseError(const std::string& msg, std::size_t off, int ln, int col)
        : Error(msg), offset(off), line(ln), column(col) {}
};

} // namespace tanalg

#endif
