#include "ldi/pauli.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace ldi {

PrimeModulus Modulus::prime() const {
    if (!prime_) throw Error(ErrorKind::ModulusMismatch, "unbounded modulus has no prime");
    return *prime_;
}

std::string Modulus::to_string() const {
    return prime_ ? "mod " + std::to_string(prime_->value()) : "unbounded";
}

PhiVector::PhiVector(std::vector<std::int64_t> entries, Modulus modulus)
    : entries_(std::move(entries)), modulus_(modulus) {
    if (entries_.size() % 2 != 0) {
        throw Error(ErrorKind::LengthMismatch, "phi vector length " + std::to_string(entries_.size()) + " is odd");
    }
    for (auto &e : entries_) e = modulus_.normalize(e);
}

PhiVector PhiVector::zero(std::size_t n, Modulus modulus) {
    return PhiVector(std::vector<std::int64_t>(2 * n, 0), modulus);
}

PhiVector phi_of_pauli(std::span<const PauliTerm> terms, std::size_t n, PrimeModulus q) {
    std::vector<std::int64_t> v(2 * n, 0);
    std::vector<bool> seen(n, false);
    for (const auto &t : terms) {
        if (t.reg >= n) {
            throw Error(ErrorKind::RegisterOutOfRange,
                        "register " + std::to_string(t.reg) + " outside " + std::to_string(n) + " registers");
        }
        if (seen[t.reg]) throw Error(ErrorKind::DuplicateRegister, "register " + std::to_string(t.reg) + " repeated");
        seen[t.reg] = true;
        v[t.reg] = q.reduce(t.x_power);
        v[t.reg + n] = q.reduce(t.z_power);
    }
    return PhiVector(std::move(v), Modulus::finite(q));
}

PhiVector compose(const PhiVector &a, const PhiVector &b) {
    if (a.modulus() != b.modulus()) {
        throw Error(ErrorKind::ModulusMismatch, a.modulus().to_string() + " vs " + b.modulus().to_string());
    }
    if (a.entries().size() != b.entries().size()) {
        throw Error(ErrorKind::LengthMismatch, "phi vectors of different lengths");
    }
    std::vector<std::int64_t> out(a.entries().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(a.entries()[i], b.entries()[i]);
    return PhiVector(std::move(out), a.modulus());
}

std::size_t weight(std::span<const std::int64_t> entries, std::optional<PrimeModulus> reduce_mod) {
    const std::size_t n = entries.size() / 2;
    std::size_t w = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t x = entries[i], z = entries[i + n];
        if (reduce_mod) {
            x = reduce_mod->reduce(x);
            z = reduce_mod->reduce(z);
        }
        if (x != 0 || z != 0) ++w;
    }
    return w;
}

std::size_t weight(const PhiVector &v) { return weight(v.entries()); }

namespace {

[[noreturn]] void syntax_error(std::string_view token, const std::string &why) {
    throw Error(ErrorKind::SyntaxError, "token '" + std::string(token) + "': " + why);
}

// Parses "X", "X^a" at position pos for letter L. Returns the power (1 when no exponent).
std::int64_t parse_power(std::string_view token, std::size_t &pos) {
    ++pos;
    if (pos >= token.size() || token[pos] != '^') return 1;
    ++pos;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data() + pos, token.data() + token.size(), value);
    if (ec != std::errc() || ptr == token.data() + pos) syntax_error(token, "expected an exponent after '^'");
    pos = static_cast<std::size_t>(ptr - token.data());
    return value;
}

}  // namespace

PhiVector parse_pauli_string(std::string_view text, PrimeModulus q) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) tokens.push_back(text.substr(start, i - start));
    }
    if (tokens.empty()) throw Error(ErrorKind::SyntaxError, "empty Pauli string");

    const std::size_t n = tokens.size();
    std::vector<std::int64_t> v(2 * n, 0);
    for (std::size_t reg = 0; reg < n; ++reg) {
        std::string_view tok = tokens[reg];
        std::int64_t xp = 0, zp = 0;
        if (tok == "I") {
        } else if (tok == "Y") {
            if (q.value() != 2) {
                throw Error(ErrorKind::YRequiresQubit, "Y is only defined for q = 2, got q = " + std::to_string(q.value()));
            }
            xp = zp = 1;
        } else {
            std::size_t pos = 0;
            if (tok[pos] == 'X') xp = parse_power(tok, pos);
            if (pos < tok.size() && tok[pos] == 'Z') zp = parse_power(tok, pos);
            if (pos == 0 || pos != tok.size()) syntax_error(tok, "expected I, Y, X^a, Z^b or X^aZ^b");
        }
        v[reg] = q.reduce(xp);
        v[reg + n] = q.reduce(zp);
    }
    return PhiVector(std::move(v), Modulus::finite(q));
}

std::string format_pauli_string(const PhiVector &v) {
    std::ostringstream out;
    const std::size_t n = v.registers();
    for (std::size_t reg = 0; reg < n; ++reg) {
        if (reg != 0) out << ' ';
        const std::int64_t x = v.x(reg), z = v.z(reg);
        if (x == 0 && z == 0) {
            out << 'I';
            continue;
        }
        if (x != 0) out << 'X' << (x == 1 ? "" : "^" + std::to_string(x));
        if (z != 0) out << 'Z' << (z == 1 ? "" : "^" + std::to_string(z));
    }
    return out.str();
}

CodeSpec::CodeSpec(PrimeModulus q, std::size_t n, IntMatrix generators, bool unbounded_entries, DeclaredParams declared)
    : q_(q), n_(n), generators_(std::move(generators)), unbounded_(unbounded_entries), declared_(declared) {
    if (generators_.rows() > 0 && generators_.cols() != 2 * n_) {
        throw Error(ErrorKind::LengthMismatch, "generator rows have length " + std::to_string(generators_.cols()) +
                                                   ", expected 2n = " + std::to_string(2 * n_));
    }
    if (generators_.rows() == 0) generators_ = IntMatrix(0, 2 * n_);
    if (generators_.rows() > 2 * n_) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::to_string(generators_.rows()) + " generators exceed 2n = " + std::to_string(2 * n_));
    }
    if (!unbounded_) generators_ = generators_.reduced(q_);
}

PhiVector CodeSpec::generator(std::size_t i) const {
    auto r = generators_.row(i);
    return PhiVector(std::vector<std::int64_t>(r.begin(), r.end()), modulus());
}

bool CodeSpec::independent() const { return rank_mod(generators_, q_) == k(); }

void CodeSpec::require_independent() const {
    const std::size_t r = rank_mod(generators_, q_);
    if (r != k()) {
        throw Error(ErrorKind::DependentGenerators, "generator rank " + std::to_string(r) + " over GF(" +
                                                        std::to_string(q_.value()) + ") is below k = " +
                                                        std::to_string(k()));
    }
}

CodeSpec CodeSpec::reinterpret(PrimeModulus p) const { return CodeSpec(p, n_, generators_, unbounded_, declared_); }

CodeSpec CodeSpec::with_declared(DeclaredParams declared) const {
    return CodeSpec(q_, n_, generators_, unbounded_, declared);
}

void apply_register_swap(IntMatrix &m, std::size_t n, std::size_t i, std::size_t j) {
    if (i >= n || j >= n) {
        throw Error(ErrorKind::RegisterOutOfRange,
                    "register swap (" + std::to_string(i) + ", " + std::to_string(j) + ") with n = " + std::to_string(n));
    }
    m.swap_cols(i, j);
    m.swap_cols(i + n, j + n);
}

void apply_hadamard_swap(IntMatrix &m, std::size_t n, std::size_t i, const Modulus &modulus) {
    if (i >= n) {
        throw Error(ErrorKind::RegisterOutOfRange, "Hadamard on register " + std::to_string(i) + " with n = " +
                                                       std::to_string(n));
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const std::int64_t x = m(r, i), z = m(r, i + n);
        m(r, i) = modulus.normalize(-z);
        m(r, i + n) = x;
    }
}

CodeSpec register_swap(const CodeSpec &c, std::size_t i, std::size_t j) {
    IntMatrix g = c.generators();
    apply_register_swap(g, c.n(), i, j);
    return CodeSpec(c.q(), c.n(), std::move(g), c.unbounded_entries(), c.declared());
}

CodeSpec hadamard_swap(const CodeSpec &c, std::size_t i) {
    IntMatrix g = c.generators();
    apply_hadamard_swap(g, c.n(), i, c.modulus());
    return CodeSpec(c.q(), c.n(), std::move(g), c.unbounded_entries(), c.declared());
}

}  // namespace ldi
