#include "ldi/canonical.hpp"

#include <algorithm>
#include <optional>

namespace ldi {

namespace {

constexpr std::size_t kMaxHadamardSearchRegisters = 20;

void apply_step(IntMatrix &m, std::size_t n, const TransformStep &step, PrimeModulus q) {
    std::visit(
        [&](const auto &s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, RegisterSwap>) {
                apply_register_swap(m, n, s.i, s.j);
            } else if constexpr (std::is_same_v<T, HadamardSwap>) {
                apply_hadamard_swap(m, n, s.reg, Modulus::finite(q));
            } else {
                apply_row_op(m, s, q);
            }
        },
        step);
}

class Eliminator {
  public:
    Eliminator(IntMatrix m, std::size_t n, PrimeModulus q) : m_(std::move(m)), n_(n), q_(q) {}

    void step(TransformStep s) {
        apply_step(m_, n_, s, q_);
        log_.push_back(s);
    }

    // Returns false when some pivot cannot be placed.
    bool run(bool allow_hadamard) {
        const std::size_t k = m_.rows();
        for (std::size_t r = 0; r < k; ++r) {
            auto found = find_entry(r, 0);
            if (!found && allow_hadamard) {
                found = find_entry(r, n_);
                if (found) step(HadamardSwap{found->first});
            }
            if (!found) return false;
            const auto [reg, row] = *found;
            if (row != r) step(RowSwap{r, row});
            if (reg != r) step(RegisterSwap{r, reg});
            if (m_(r, r) != 1) step(RowScale{r, mod_inverse(m_(r, r), q_)});
            for (std::size_t i = 0; i < k; ++i) {
                if (i != r && m_(i, r) != 0) step(RowAdd{i, r, q_.value() - m_(i, r)});
            }
        }
        return true;
    }

    IntMatrix &matrix() { return m_; }
    TransformLog &log() { return log_; }

  private:
    // First (register, row) with a non-zero entry in the half starting at `offset`,
    // registers scanned left to right, rows top to bottom.
    std::optional<std::pair<std::size_t, std::size_t>> find_entry(std::size_t r, std::size_t offset) const {
        for (std::size_t reg = r; reg < n_; ++reg) {
            for (std::size_t row = r; row < m_.rows(); ++row) {
                if (m_(row, reg + offset) != 0) return std::pair{reg, row};
            }
        }
        return std::nullopt;
    }

    IntMatrix m_;
    std::size_t n_;
    PrimeModulus q_;
    TransformLog log_;
};

std::size_t x_half_rank(const IntMatrix &m, std::size_t n, PrimeModulus q) {
    IntMatrix x(m.rows(), n);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c) x(r, c) = m(r, c);
    return rank_mod(x, q);
}

// Smallest, then lexicographically first, register set whose Hadamards give the X half full rank.
std::optional<std::vector<std::size_t>> find_hadamard_set(const IntMatrix &m, std::size_t n, PrimeModulus q) {
    const std::size_t k = m.rows();
    for (std::size_t size = 0; size <= n; ++size) {
        std::vector<bool> mask(n, false);
        std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(size), true);
        do {
            IntMatrix trial = m;
            std::vector<std::size_t> regs;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask[i]) {
                    regs.push_back(i);
                    apply_hadamard_swap(trial, n, i, Modulus::finite(q));
                }
            }
            if (x_half_rank(trial, n, q) == k) return regs;
        } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    return std::nullopt;
}

IntMatrix block(const IntMatrix &m, std::size_t col0, std::size_t width) {
    IntMatrix out(m.rows(), width);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < width; ++c) out(r, c) = m(r, col0 + c);
    return out;
}

}  // namespace

CodeSpec replay(const TransformLog &log, const CodeSpec &c) {
    IntMatrix m = c.reduced();
    for (const auto &s : log) apply_step(m, c.n(), s, c.q());
    return CodeSpec(c.q(), c.n(), std::move(m), false, c.declared());
}

IntMatrix CanonicalForm::x2() const { return block(code.generators(), code.k(), code.n() - code.k()); }
IntMatrix CanonicalForm::z1() const { return block(code.generators(), code.n(), code.k()); }
IntMatrix CanonicalForm::z2() const {
    return block(code.generators(), code.n() + code.k(), code.n() - code.k());
}

bool has_identity_x_block(const IntMatrix &m, std::size_t n) {
    const std::size_t k = m.rows();
    if (k > n) return false;
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
            if (m(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

CanonicalForm canonicalize(const CodeSpec &c) {
    c.require_independent();
    const std::size_t n = c.n(), k = c.k();
    if (k > n) {
        throw Error(ErrorKind::NoCanonicalForm,
                    "k = " + std::to_string(k) + " generators cannot carry an identity block on n = " +
                        std::to_string(n) + " registers");
    }

    Eliminator greedy(c.reduced(), n, c.q());
    if (greedy.run(true)) {
        return {CodeSpec(c.q(), n, std::move(greedy.matrix()), false, c.declared()), std::move(greedy.log())};
    }

    if (n > kMaxHadamardSearchRegisters) {
        throw Error(ErrorKind::NoCanonicalForm, "greedy pivoting failed and n is too large for a Hadamard search");
    }
    const auto hadamards = find_hadamard_set(c.reduced(), n, c.q());
    if (!hadamards) {
        throw Error(ErrorKind::NoCanonicalForm, "no choice of Hadamards gives the X half rank " + std::to_string(k));
    }
    Eliminator fallback(c.reduced(), n, c.q());
    for (auto reg : *hadamards) fallback.step(HadamardSwap{reg});
    fallback.run(false);
    return {CodeSpec(c.q(), n, std::move(fallback.matrix()), false, c.declared()), std::move(fallback.log())};
}

}  // namespace ldi
