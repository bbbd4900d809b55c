#include "ldi/symplectic.hpp"

namespace ldi {

std::int64_t symplectic_product(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                                const Modulus &modulus) {
    if (a.size() != b.size() || a.size() % 2 != 0) {
        throw Error(ErrorKind::LengthMismatch, "symplectic product of vectors with lengths " +
                                                   std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
    const std::size_t n = a.size() / 2;
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
        acc = checked_add(acc, checked_mul(b[k + n], a[k]));
        acc = checked_add(acc, -checked_mul(b[k], a[k + n]));
    }
    return modulus.normalize(acc);
}

std::int64_t symplectic_product(const PhiVector &a, const PhiVector &b, const Modulus &modulus) {
    return symplectic_product(a.entries(), b.entries(), modulus);
}

bool CommutatorMatrix::is_zero() const { return entries.max_abs() == 0; }

bool CommutatorMatrix::is_antisymmetric() const {
    for (std::size_t i = 0; i < entries.rows(); ++i) {
        if (entries(i, i) != 0) return false;
        for (std::size_t j = 0; j < i; ++j) {
            if (modulus.normalize(entries(i, j) + entries(j, i)) != 0) return false;
        }
    }
    return true;
}

CommutatorMatrix commutator_matrix(const IntMatrix &generators, const Modulus &modulus) {
    const std::size_t k = generators.rows();
    CommutatorMatrix out{IntMatrix(k, k), modulus};
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const std::int64_t v = symplectic_product(generators.row(i), generators.row(j), modulus);
            out.entries(i, j) = v;
            out.entries(j, i) = modulus.normalize(-v);
        }
    }
    return out;
}

CommutatorMatrix commutator_matrix(const CodeSpec &c, const Modulus &modulus) {
    return commutator_matrix(c.generators(), modulus);
}

EntanglementReport min_entanglement(const CodeSpec &c) {
    c.require_independent();
    const CommutatorMatrix cm = commutator_matrix(c.generators(), Modulus::finite(c.q()));
    EntanglementReport rep;
    const std::size_t rank = rank_mod(cm.entries, c.q());
    rep.c = rank / 2;
    rep.s = c.k() - rank;
    for (std::size_t i = 0; i < c.k(); ++i) {
        for (std::size_t j = i + 1; j < c.k(); ++j) {
            if (cm.entries(i, j) != 0) rep.noncommuting_pairs.push_back({i, j, cm.entries(i, j)});
        }
    }
    return rep;
}

IntMatrix syndrome_matrix(const IntMatrix &generators, PrimeModulus p) {
    const std::size_t n = generators.cols() / 2;
    IntMatrix out(generators.rows(), generators.cols());
    for (std::size_t r = 0; r < generators.rows(); ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            out(r, k) = p.reduce(generators(r, k + n));
            out(r, k + n) = p.reduce(-generators(r, k));
        }
    }
    return out;
}

IntMatrix undetectable_kernel(const IntMatrix &generators, PrimeModulus p) {
    return nullspace_mod(syndrome_matrix(generators, p), p);
}

IntMatrix undetectable_kernel(const CodeSpec &c, PrimeModulus p) { return undetectable_kernel(c.generators(), p); }

IntMatrix isotropic_subgroup(const IntMatrix &generators, PrimeModulus p) {
    // x * G commutes with every row of G iff x * C = 0, with C the commutator matrix.
    const IntMatrix g = generators.reduced(p);
    const CommutatorMatrix cm = commutator_matrix(g, Modulus::finite(p));
    IntMatrix ct(cm.entries.cols(), cm.entries.rows());
    for (std::size_t i = 0; i < ct.rows(); ++i)
        for (std::size_t j = 0; j < ct.cols(); ++j) ct(i, j) = cm.entries(j, i);
    const IntMatrix coeffs = nullspace_mod(ct, p);

    IntMatrix spanning(0, g.cols());
    for (std::size_t b = 0; b < coeffs.rows(); ++b) {
        std::vector<std::int64_t> v(g.cols(), 0);
        for (std::size_t r = 0; r < g.rows(); ++r) {
            if (coeffs(b, r) == 0) continue;
            for (std::size_t col = 0; col < g.cols(); ++col) v[col] = p.reduce(v[col] + coeffs(b, r) * g(r, col));
        }
        spanning.append_row(v);
    }
    // Dependent generators can make the image smaller than the coefficient space.
    RrefResult rr = rref_mod(spanning, p);
    IntMatrix basis(0, g.cols());
    for (std::size_t i = 0; i < rr.rank; ++i) basis.append_row(rr.reduced.row(i));
    return basis;
}

bool in_group(const CodeSpec &c, const PhiVector &e, PrimeModulus p) {
    if (e.entries().size() != 2 * c.n()) {
        throw Error(ErrorKind::LengthMismatch, "error vector length " + std::to_string(e.entries().size()) +
                                                   " vs 2n = " + std::to_string(2 * c.n()));
    }
    return solve_in_rowspace(c.generators(), e.entries(), p).has_value();
}

}  // namespace ldi
