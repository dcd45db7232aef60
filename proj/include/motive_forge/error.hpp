#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace motive_forge {

enum class ErrorKind {
    NotDivisible,
    ZeroPolynomial,
    InvalidGenus,
    InsufficientTruncation,
    BadConstantTerm,
    PoleAtOne,
    InvalidSpec,
    EmptyStratum,
    NegativeBetti,
    NotSplit,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every arithmetic or contract failure in the library surfaces as this type;
// callers branch on kind() rather than on the message.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

    ErrorKind kind() const noexcept { return kind_; }
    // The message without the kind prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace motive_forge
