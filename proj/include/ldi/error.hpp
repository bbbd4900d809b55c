#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ldi {

enum class ErrorKind {
    NotPrime,
    ZeroNoInverse,
    DimensionMismatch,
    RegisterOutOfRange,
    DuplicateRegister,
    RowOutOfRange,
    ModulusMismatch,
    LengthMismatch,
    SyntaxError,
    YRequiresQubit,
    HeaderMismatch,
    NonPrimeModulus,
    DependentGenerators,
    NoCanonicalForm,
    SameModulus,
    InstanceTooLarge,
    Overflow,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace ldi
