#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ldi/modular.hpp"

namespace ldi {

/// Either arithmetic mod a prime (phi_q) or over the integers (phi_infinity).
class Modulus {
  public:
    static Modulus finite(PrimeModulus q) { return Modulus(q); }
    static Modulus unbounded() { return Modulus(std::nullopt); }

    bool is_finite() const noexcept { return prime_.has_value(); }
    PrimeModulus prime() const;
    std::int64_t normalize(std::int64_t a) const { return prime_ ? prime_->reduce(a) : a; }
    std::string to_string() const;

    friend bool operator==(const Modulus &, const Modulus &) = default;

  private:
    explicit Modulus(std::optional<PrimeModulus> p) : prime_(p) {}
    std::optional<PrimeModulus> prime_;
};

/// phi image of one n-register Pauli: (x_1..x_n | z_1..z_n). Phases are not tracked.
class PhiVector {
  public:
    PhiVector(std::vector<std::int64_t> entries, Modulus modulus);
    static PhiVector zero(std::size_t n, Modulus modulus);

    std::size_t registers() const noexcept { return entries_.size() / 2; }
    const Modulus &modulus() const noexcept { return modulus_; }
    std::span<const std::int64_t> entries() const noexcept { return entries_; }
    std::int64_t x(std::size_t reg) const { return entries_[reg]; }
    std::int64_t z(std::size_t reg) const { return entries_[reg + registers()]; }

    friend bool operator==(const PhiVector &, const PhiVector &) = default;

  private:
    std::vector<std::int64_t> entries_;
    Modulus modulus_;
};

/// X^x_power Z^z_power on one register (0-based).
struct PauliTerm {
    std::size_t reg;
    std::int64_t x_power;
    std::int64_t z_power;
};

PhiVector phi_of_pauli(std::span<const PauliTerm> terms, std::size_t n, PrimeModulus q);

/// Component-wise sum, reduced for finite moduli. Throws ModulusMismatch / LengthMismatch.
PhiVector compose(const PhiVector &a, const PhiVector &b);

/// Number of registers whose (x, z) pair is non-zero.
std::size_t weight(const PhiVector &v);
std::size_t weight(std::span<const std::int64_t> entries, std::optional<PrimeModulus> reduce_mod = std::nullopt);

/// Whitespace-separated register tokens: I, X, Z, Y (q = 2 only), X^a, Z^b, X^aZ^b.
PhiVector parse_pauli_string(std::string_view text, PrimeModulus q);
std::string format_pauli_string(const PhiVector &v);

struct DeclaredParams {
    std::optional<std::int64_t> k;
    std::optional<std::int64_t> c;
    std::optional<std::int64_t> d;
    friend bool operator==(const DeclaredParams &, const DeclaredParams &) = default;
};

/// k generators over n registers at local dimension q.
///
/// With `unbounded_entries` the integer entries are kept as given (phi_infinity); otherwise they are
/// normalized into [0, q). Linear independence is not enforced here; operations that need it raise
/// DependentGenerators.
class CodeSpec {
  public:
    CodeSpec(PrimeModulus q, std::size_t n, IntMatrix generators, bool unbounded_entries = false,
             DeclaredParams declared = {});

    PrimeModulus q() const noexcept { return q_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return generators_.rows(); }
    const IntMatrix &generators() const noexcept { return generators_; }
    bool unbounded_entries() const noexcept { return unbounded_; }
    const DeclaredParams &declared() const noexcept { return declared_; }

    PhiVector generator(std::size_t i) const;
    Modulus modulus() const { return unbounded_ ? Modulus::unbounded() : Modulus::finite(q_); }

    /// Generators reduced mod q.
    IntMatrix reduced() const { return generators_.reduced(q_); }
    bool independent() const;
    void require_independent() const;

    /// Same integer matrix read at another prime (entries reduced unless unbounded).
    CodeSpec reinterpret(PrimeModulus p) const;
    CodeSpec with_declared(DeclaredParams declared) const;

    friend bool operator==(const CodeSpec &, const CodeSpec &) = default;

  private:
    PrimeModulus q_;
    std::size_t n_;
    IntMatrix generators_;
    bool unbounded_;
    DeclaredParams declared_;
};

/// Exchange registers i and j (columns (i, i+n) and (j, j+n)).
CodeSpec register_swap(const CodeSpec &c, std::size_t i, std::size_t j);
/// Hadamard (Fourier) conjugation on register i: (x, z) -> (-z mod q, x).
CodeSpec hadamard_swap(const CodeSpec &c, std::size_t i);

// In-place forms shared with the canonicalizer.
void apply_register_swap(IntMatrix &m, std::size_t n, std::size_t i, std::size_t j);
void apply_hadamard_swap(IntMatrix &m, std::size_t n, std::size_t i, const Modulus &modulus);

}  // namespace ldi
