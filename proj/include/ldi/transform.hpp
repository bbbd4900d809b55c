#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ldi/canonical.hpp"
#include "ldi/distance.hpp"
#include "ldi/modular.hpp"
#include "ldi/symplectic.hpp"

namespace ldi {

/// How n_ij is represented. Exact uses -nu^{-1} * alpha_ij as an integer product; Centered shifts
/// it by a multiple of p into (-p/2, p/2].
enum class NRepresentative { Exact, Centered };

/// Split of one integer commutator entry c_ij (i > j) into the pieces that build L.
struct PairDecomposition {
    std::size_t i;
    std::size_t j;
    std::int64_t c;      // integer symplectic product of canonical rows i and j
    std::int64_t alpha;  // c mod q in [0, q)
    std::int64_t m;      // (c - alpha) / q
    std::int64_t n;      // alpha + n*q = 0 mod p
    std::int64_t l;      // (m - n) * q
};

struct CommutatorDecomposition {
    PrimeModulus q;
    PrimeModulus p;
    std::int64_t nu;      // q mod p
    std::int64_t nu_inv;  // in [1, p)
    std::vector<PairDecomposition> pairs;  // i > j, row-major by i then j
};

CommutatorDecomposition decompose(const CanonicalForm &canon, PrimeModulus p,
                                  NRepresentative rep = NRepresentative::Exact);

struct VerificationReport {
    bool matches_source_mod_q = false;
    bool commutes_mod_p = false;
    bool l_lower_and_q_divisible = false;
    std::int64_t max_entry_observed = 0;

    bool passed() const { return matches_source_mod_q && commutes_mod_p && l_lower_and_q_divisible; }
};

struct TransformResult {
    CanonicalForm source;
    PrimeModulus target_p;
    IntMatrix l;       // k x k, strictly lower triangular
    IntMatrix output;  // k x 2n over the integers
    CommutatorDecomposition decomposition;

    /// "ldi" when the output's integer commutator vanishes (valid at every prime), else "effectively-ldi".
    std::string label() const;
    /// The output as a code over the target prime, entries kept as integers.
    CodeSpec output_code() const;
};

/// Canonicalize, decompose, add L to Z1, and re-verify. Throws SameModulus, DependentGenerators,
/// NoCanonicalForm.
TransformResult transform(const CodeSpec &c, PrimeModulus p, NRepresentative rep = NRepresentative::Exact);

VerificationReport verify(const TransformResult &result);

struct BoundsReport {
    BigUnsigned b;
    BigUnsigned p_star;
    std::uint64_t d_used = 0;
    std::optional<std::int64_t> max_entry_observed;
};

/// [2 + (n-k)(q-1)](q-1).
BigUnsigned entry_bound(const CodeSpec &c);
BoundsReport threshold(const CodeSpec &c, std::uint64_t d);

struct ScanEntry {
    PrimeModulus p;
    std::optional<Error> error;
    std::optional<TransformResult> result;
    std::optional<VerificationReport> verification;
    std::optional<DistanceReport> distance;
    std::optional<bool> distance_preserved;
};

struct ScanReport {
    std::optional<std::size_t> source_distance;  // declared d, else measured at q
    bool source_distance_declared = false;
    std::vector<ScanEntry> entries;
};

/// Transform, verify and measure distance at each prime. Per-prime errors are recorded, not thrown.
ScanReport prime_scan(const CodeSpec &c, std::span<const PrimeModulus> primes, std::size_t max_weight);

}  // namespace ldi
