#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclic {

enum class ErrorKind {
    InvalidQuiver,
    NoStableIndexing,
    NotCanonical,
    InvalidSplitting,
    InvalidPoint,
    DegreeMismatch,
    IrrationalRoots,
    ChartDegenerate,
    ZeroScalar,
    ZeroInteriorMap,
    QuiverMismatch,
    ZeroGamma,
    ProfileMismatch,
    SyntaxError,
    SemanticError,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every library operation. The kind is stable and is
/// what the CLI maps to exit codes; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse failure with a source location (1-based line, 0-based column).
class SyntaxError : public Error {
public:
    SyntaxError(int line, int column, const std::string& message)
        : Error(ErrorKind::SyntaxError, message), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace cyclic
