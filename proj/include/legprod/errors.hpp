#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace legprod {

// Stable, machine-readable failure names. The CLI prints these verbatim.
enum class ErrorKind {
    InvalidModel,
    UnknownWhitneySign,
    BadChordOrder,
    ConstraintViolated,
    UnknownFixture,
    ActionTie,
    ActionCollision,
    DuplicateProductAction,
    ParityViolation,
    WindowViolation,
    UnknownChord,
    DegenerateTriple,
    ParseError,
    InvalidDiagram,
    UnknownVariable,
    Infeasible,
    InfeasibleBase,
    IoError,
};

std::string_view error_name(ErrorKind kind) noexcept;

// Parse and I/O failures map to exit code 2, everything else is a domain error.
bool is_input_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace legprod
