#include "curvegerm/errors.hpp"

namespace curvegerm {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownVariable: return "UnknownVariable";
        case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::ZeroIdeal: return "ZeroIdeal";
        case ErrorKind::NotAGerm: return "NotAGerm";
        case ErrorKind::NonIsolatedSingularity: return "NonIsolatedSingularity";
        case ErrorKind::NotSingular: return "NotSingular";
        case ErrorKind::ReducibleTangentCone: return "ReducibleTangentCone";
        case ErrorKind::NotABranch: return "NotABranch";
        case ErrorKind::InconsistentSequence: return "InconsistentSequence";
        case ErrorKind::InvalidCharacteristic: return "InvalidCharacteristic";
        case ErrorKind::MultiplicityTooSmall: return "MultiplicityTooSmall";
        case ErrorKind::SmoothGerm: return "SmoothGerm";
        case ErrorKind::FileNotFound: return "FileNotFound";
        case ErrorKind::MalformedCorpus: return "MalformedCorpus";
    }
    return "Unknown";
}

}  // namespace curvegerm
