#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ldi/pauli.hpp"

namespace ldi {

/// Result of a zero-syndrome search at prime p.
///
/// `d_pure` is the least weight of any nonzero error commuting with every generator. `d` is the least
/// weight of such an error outside the isotropic subgroup (group elements that commute with all
/// generators); it is absent when every undetectable error lies in that subgroup, in which case the
/// headline distance() falls back to d_pure.
struct DistanceReport {
    PrimeModulus p;
    std::optional<std::size_t> d_pure{};
    std::optional<std::size_t> d{};
    std::optional<PhiVector> witness{};       // achieves distance()
    std::optional<PhiVector> pure_witness{};  // achieves d_pure
    bool kernel_is_isotropic = false;
    bool degenerate = false;
    bool cap_hit = false;
    std::vector<std::uint64_t> candidates_per_weight{};  // index w; filled for completed weight classes

    std::optional<std::size_t> distance() const {
        if (d) return d;
        if (kernel_is_isotropic) return d_pure;
        return std::nullopt;
    }
};

constexpr std::uint64_t kOracleLimit = 10'000'000;

/// Enumerates errors by increasing weight up to max_weight (clamped to n). Ties are broken by the
/// lexicographically smallest support, then the smallest per-register assignment, where the
/// assignment of a register is x * p + z.
DistanceReport detection_distance(const IntMatrix &generators, PrimeModulus p, std::size_t max_weight);
DistanceReport detection_distance(const IntMatrix &generators, PrimeModulus p);

/// Exhaustive scan over all p^{2n} vectors. Throws InstanceTooLarge above kOracleLimit.
DistanceReport oracle_distance(const IntMatrix &generators, PrimeModulus p);

/// True iff every nonzero element of the isotropic subgroup has weight >= d.
bool nondegeneracy_check(const CodeSpec &c, PrimeModulus p, std::size_t d);

/// C(n, w) * (p^2 - 1)^w.
std::uint64_t candidate_count(std::size_t n, std::size_t w, PrimeModulus p);

}  // namespace ldi
