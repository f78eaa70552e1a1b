#pragma once

#include <stdexcept>
#include <string>

namespace cyc {

// Failure categories shared by every module. The C API maps these onto
// status codes and the CLI onto exit codes.
enum class ErrorKind {
    Degree,
    Loop,
    Size,
    Parameter,
    Format,
    InvalidDecomposition,
    BagMismatch,
    Overlap,
    Budget,
    EdgeNotFound,
    Embedding,
    NotPlanar,
    Precondition,
    Backend,
    Parity,
    SizeMismatch,
    NotCubicPlanar,
    UnknownName,
    Io,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace cyc
