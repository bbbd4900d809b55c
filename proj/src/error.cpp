#include "ldi/error.hpp"

namespace ldi {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ZeroNoInverse: return "ZeroNoInverse";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RegisterOutOfRange: return "RegisterOutOfRange";
    case ErrorKind::DuplicateRegister: return "DuplicateRegister";
    case ErrorKind::RowOutOfRange: return "RowOutOfRange";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::YRequiresQubit: return "YRequiresQubit";
    case ErrorKind::HeaderMismatch: return "HeaderMismatch";
    case ErrorKind::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorKind::DependentGenerators: return "DependentGenerators";
    case ErrorKind::NoCanonicalForm: return "NoCanonicalForm";
    case ErrorKind::SameModulus: return "SameModulus";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::Overflow: return "Overflow";
    }
    return "Unknown";
}

}  // namespace ldi
