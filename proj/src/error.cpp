#include "motive_forge/error.hpp"

namespace motive_forge {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotDivisible: return "NotDivisible";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::InvalidGenus: return "InvalidGenus";
        case ErrorKind::InsufficientTruncation: return "InsufficientTruncation";
        case ErrorKind::BadConstantTerm: return "BadConstantTerm";
        case ErrorKind::PoleAtOne: return "PoleAtOne";
        case ErrorKind::InvalidSpec: return "InvalidSpec";
        case ErrorKind::EmptyStratum: return "EmptyStratum";
        case ErrorKind::NegativeBetti: return "NegativeBetti";
        case ErrorKind::NotSplit: return "NotSplit";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace motive_forge
