#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ldi/pauli.hpp"

namespace ldi {

/// Parses the matrix file format:
///
///     # comment
///     q 2
///     n 4
///     k 4
///     c 1                  (optional)
///     d 3                  (optional)
///     entries unbounded    (optional; keeps integer entries as written)
///     0 1 0 0 | 1 0 1 0    (k rows of 2n integers, '|' optional)
///
/// Errors: SyntaxError (with line and column), HeaderMismatch, NonPrimeModulus.
CodeSpec parse_code_file(std::string_view text);

/// Inverse of parse_code_file; `comments` are emitted as leading '#' lines.
std::string format_code_file(const CodeSpec &c, const std::vector<std::string> &comments = {});

/// Exact rational in lowest terms with a positive denominator.
class Rational {
  public:
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    /// "num/den", or just "num" when den = 1.
    std::string to_string() const;

    friend bool operator==(const Rational &, const Rational &) = default;

  private:
    std::int64_t num_;
    std::int64_t den_;
};

struct RatesReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t c = 0;
    Rational entanglement_assisted{0, 1};       // (n + c - k) / n
    Rational tradeoff_rate{0, 1};               // (n + c - k) / n
    Rational tradeoff_entanglement{0, 1};       // c / n
    Rational catalytic{0, 1};                   // (n - k) / n
};

RatesReport rates(std::size_t n, std::size_t k, std::size_t c);

}  // namespace ldi
