#include "legprod/errors.hpp"

namespace legprod {

std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidModel: return "InvalidModel";
        case ErrorKind::UnknownWhitneySign: return "UnknownWhitneySign";
        case ErrorKind::BadChordOrder: return "BadChordOrder";
        case ErrorKind::ConstraintViolated: return "ConstraintViolated";
        case ErrorKind::UnknownFixture: return "UnknownFixture";
        case ErrorKind::ActionTie: return "ActionTie";
        case ErrorKind::ActionCollision: return "ActionCollision";
        case ErrorKind::DuplicateProductAction: return "DuplicateProductAction";
        case ErrorKind::ParityViolation: return "ParityViolation";
        case ErrorKind::WindowViolation: return "WindowViolation";
        case ErrorKind::UnknownChord: return "UnknownChord";
        case ErrorKind::DegenerateTriple: return "DegenerateTriple";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidDiagram: return "InvalidDiagram";
        case ErrorKind::UnknownVariable: return "UnknownVariable";
        case ErrorKind::Infeasible: return "Infeasible";
        case ErrorKind::InfeasibleBase: return "InfeasibleBase";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

bool is_input_error(ErrorKind kind) noexcept {
    return kind == ErrorKind::ParseError || kind == ErrorKind::IoError;
}

}  // namespace legprod
