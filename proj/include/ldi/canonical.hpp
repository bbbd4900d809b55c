#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "ldi/pauli.hpp"

namespace ldi {

struct RegisterSwap {
    std::size_t i;
    std::size_t j;
    friend bool operator==(const RegisterSwap &, const RegisterSwap &) = default;
};
struct HadamardSwap {
    std::size_t reg;
    friend bool operator==(const HadamardSwap &, const HadamardSwap &) = default;
};

using TransformStep = std::variant<RowScale, RowAdd, RowSwap, RegisterSwap, HadamardSwap>;
using TransformLog = std::vector<TransformStep>;

/// Applies each step in order; row operations are taken mod c.q().
CodeSpec replay(const TransformLog &log, const CodeSpec &c);

/// A code in the form [ I_k X2 | Z1 Z2 ] mod q, with the steps that produced it.
struct CanonicalForm {
    CodeSpec code;
    TransformLog log;

    IntMatrix x2() const;
    IntMatrix z1() const;
    IntMatrix z2() const;
};

/// Brings c to canonical form. Throws DependentGenerators when rank < k and NoCanonicalForm when
/// no choice of per-register Hadamards gives an X half of rank k (always the case for k > n).
CanonicalForm canonicalize(const CodeSpec &c);

bool has_identity_x_block(const IntMatrix &m, std::size_t n);

}  // namespace ldi
