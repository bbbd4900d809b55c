#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ldi/pauli.hpp"

namespace ldi {

/// sum_k [b_z[k] * a_x[k] - b_x[k] * a_z[k]], normalized by `modulus`.
std::int64_t symplectic_product(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                                const Modulus &modulus);
std::int64_t symplectic_product(const PhiVector &a, const PhiVector &b, const Modulus &modulus);

/// Pairwise symplectic products of the rows of a generator matrix.
struct CommutatorMatrix {
    IntMatrix entries;
    Modulus modulus;

    bool is_zero() const;
    bool is_antisymmetric() const;
};

CommutatorMatrix commutator_matrix(const IntMatrix &generators, const Modulus &modulus);
CommutatorMatrix commutator_matrix(const CodeSpec &c, const Modulus &modulus);

struct NoncommutingPair {
    std::size_t i;
    std::size_t j;
    std::int64_t value;  // product mod q, i < j
};

struct EntanglementReport {
    std::size_t c = 0;  // entangled pairs
    std::size_t s = 0;  // k - 2c
    std::vector<NoncommutingPair> noncommuting_pairs;
};

/// c = rank of the mod-q commutator matrix / 2. Throws DependentGenerators.
EntanglementReport min_entanglement(const CodeSpec &c);

/// Rows (z | -x) mod p: e has zero syndrome iff syndrome_matrix * e = 0.
IntMatrix syndrome_matrix(const IntMatrix &generators, PrimeModulus p);

/// Basis over GF(p) of errors commuting with every generator.
IntMatrix undetectable_kernel(const CodeSpec &c, PrimeModulus p);
IntMatrix undetectable_kernel(const IntMatrix &generators, PrimeModulus p);

/// Basis of the rowspace elements that commute with every generator (rowspace ∩ kernel).
IntMatrix isotropic_subgroup(const IntMatrix &generators, PrimeModulus p);

/// e in the GF(p) row space of the generators.
bool in_group(const CodeSpec &c, const PhiVector &e, PrimeModulus p);

}  // namespace ldi
