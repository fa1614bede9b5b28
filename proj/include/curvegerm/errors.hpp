#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace curvegerm {

enum class ErrorKind {
    SyntaxError,
    UnknownVariable,
    DegreeTooLarge,
    ZeroPolynomial,
    SingularMatrix,
    ZeroIdeal,
    NotAGerm,
    NonIsolatedSingularity,
    NotSingular,
    ReducibleTangentCone,
    NotABranch,
    InconsistentSequence,
    InvalidCharacteristic,
    MultiplicityTooSmall,
    SmoothGerm,
    FileNotFound,
    MalformedCorpus,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All domain failures raised by the library carry a kind so that front ends
// can map them onto exit codes without parsing messages.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> stage = std::nullopt)
        : std::runtime_error(message), kind_(kind), stage_(stage) {}

    ErrorKind kind() const noexcept { return kind_; }
    /// Resolution stage at which the failure was detected, when meaningful.
    std::optional<std::size_t> stage() const noexcept { return stage_; }

   private:
    ErrorKind kind_;
    std::optional<std::size_t> stage_;
};

}  // namespace curvegerm
