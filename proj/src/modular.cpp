#include "ldi/modular.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace ldi {

namespace {

std::int64_t mul_mod(std::int64_t a, std::int64_t b, PrimeModulus m) {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m.value() + m.value()) % m.value();
}

}  // namespace

bool is_prime(std::int64_t v) {
    if (v < 2) return false;
    if (v < 4) return true;
    if (v % 2 == 0) return false;
    for (std::int64_t d = 3; d <= v / d; d += 2) {
        if (v % d == 0) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(std::int64_t value) : value_(value) {
    if (!is_prime(value)) throw Error(ErrorKind::NotPrime, std::to_string(value) + " is not prime");
}

std::int64_t mod_inverse(std::int64_t a, PrimeModulus m) {
    std::int64_t r0 = m.value(), r1 = m.reduce(a);
    if (r1 == 0) {
        throw Error(ErrorKind::ZeroNoInverse,
                    std::to_string(a) + " is 0 mod " + std::to_string(m.value()) + " and has no inverse");
    }
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t quot = r0 / r1;
        r0 = std::exchange(r1, r0 - quot * r1);
        t0 = std::exchange(t1, t0 - quot * t1);
    }
    return m.reduce(t0);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "integer addition overflow");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "integer multiplication overflow");
    return out;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>> &rows) {
    IntMatrix out(0, rows.empty() ? 0 : rows.front().size());
    for (const auto &r : rows) out.append_row(r);
    return out;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

void IntMatrix::append_row(std::span<const std::int64_t> values) {
    if (rows_ == 0 && data_.empty()) cols_ = values.size();
    if (values.size() != cols_) {
        throw Error(ErrorKind::DimensionMismatch,
                    "row of length " + std::to_string(values.size()) + " appended to " + std::to_string(cols_) +
                        "-column matrix");
    }
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

IntMatrix IntMatrix::reduced(PrimeModulus m) const {
    IntMatrix out = *this;
    for (auto &x : out.data_) x = m.reduce(x);
    return out;
}

std::int64_t IntMatrix::max_abs() const {
    std::int64_t best = 0;
    for (auto x : data_) best = std::max(best, x < 0 ? -x : x);
    return best;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
    return out;
}

void apply_row_op(IntMatrix &mat, const RowOp &op, PrimeModulus m) {
    auto check = [&](std::size_t r) {
        if (r >= mat.rows()) {
            throw Error(ErrorKind::RowOutOfRange,
                        "row " + std::to_string(r) + " out of range for " + std::to_string(mat.rows()) + " rows");
        }
    };
    std::visit(
        [&](const auto &o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, RowScale>) {
                check(o.row);
                for (auto &x : mat.row(o.row)) x = mul_mod(m.reduce(x), m.reduce(o.factor), m);
            } else if constexpr (std::is_same_v<T, RowAdd>) {
                check(o.target);
                check(o.source);
                auto src = mat.row(o.source);
                auto dst = mat.row(o.target);
                const std::int64_t f = m.reduce(o.factor);
                for (std::size_t c = 0; c < mat.cols(); ++c) {
                    dst[c] = m.reduce(m.reduce(dst[c]) + mul_mod(f, m.reduce(src[c]), m));
                }
            } else {
                check(o.a);
                check(o.b);
                mat.swap_rows(o.a, o.b);
            }
        },
        op);
}

RrefResult rref_mod(const IntMatrix &mat, PrimeModulus m, std::optional<std::span<const std::size_t>> column_order) {
    RrefResult res;
    res.reduced = mat.reduced(m);
    IntMatrix &a = res.reduced;

    std::vector<std::size_t> natural;
    if (!column_order) {
        natural.resize(a.cols());
        std::iota(natural.begin(), natural.end(), std::size_t{0});
        column_order = std::span<const std::size_t>(natural);
    }

    auto record = [&](RowOp op) {
        apply_row_op(a, op, m);
        res.ops.push_back(op);
    };

    std::size_t r = 0;
    for (std::size_t col : *column_order) {
        if (r == a.rows()) break;
        if (col >= a.cols()) throw Error(ErrorKind::DimensionMismatch, "column order entry out of range");
        std::size_t pivot = r;
        while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != r) record(RowSwap{r, pivot});
        if (a(r, col) != 1) record(RowScale{r, mod_inverse(a(r, col), m)});
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i != r && a(i, col) != 0) record(RowAdd{i, r, m.value() - a(i, col)});
        }
        res.pivot_cols.push_back(col);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t rank_mod(const IntMatrix &mat, PrimeModulus m) { return rref_mod(mat, m).rank; }

std::optional<std::vector<std::int64_t>> solve_in_rowspace(const IntMatrix &mat, std::span<const std::int64_t> v,
                                                           PrimeModulus m) {
    if (v.size() != mat.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "vector length " + std::to_string(v.size()) +
                                                      " does not match " + std::to_string(mat.cols()) + " columns");
    }
    // Track the row operations on an identity so reduced rows are expressed in the original rows.
    const std::size_t k = mat.rows();
    IntMatrix aug(k, mat.cols() + k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t c = 0; c < mat.cols(); ++c) aug(i, c) = mat(i, c);
        aug(i, mat.cols() + i) = 1;
    }
    std::vector<std::size_t> order(mat.cols());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const RrefResult rr = rref_mod(aug, m, order);

    std::vector<std::int64_t> residual(v.begin(), v.end());
    for (auto &x : residual) x = m.reduce(x);
    std::vector<std::int64_t> coeffs(k, 0);
    for (std::size_t i = 0; i < rr.rank; ++i) {
        const std::int64_t f = residual[rr.pivot_cols[i]];
        if (f == 0) continue;
        for (std::size_t c = 0; c < mat.cols(); ++c) {
            residual[c] = m.reduce(residual[c] - mul_mod(f, rr.reduced(i, c), m));
        }
        for (std::size_t j = 0; j < k; ++j) {
            coeffs[j] = m.reduce(coeffs[j] + mul_mod(f, rr.reduced(i, mat.cols() + j), m));
        }
    }
    if (std::any_of(residual.begin(), residual.end(), [](std::int64_t x) { return x != 0; })) return std::nullopt;
    return coeffs;
}

IntMatrix nullspace_mod(const IntMatrix &mat, PrimeModulus m) {
    const RrefResult rr = rref_mod(mat, m);
    std::vector<bool> is_pivot(mat.cols(), false);
    for (auto c : rr.pivot_cols) is_pivot[c] = true;

    IntMatrix basis(0, mat.cols());
    for (std::size_t free = 0; free < mat.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::int64_t> v(mat.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivot_cols[i]] = m.reduce(-rr.reduced(i, free));
        basis.append_row(v);
    }
    return basis;
}

BigUnsigned BigUnsigned::from_rep(Rep v) {
    BigUnsigned out;
    out.value_ = std::move(v);
    return out;
}

BigUnsigned BigUnsigned::pow(std::uint64_t exponent) const {
    Rep result = 1;
    Rep base = value_;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return from_rep(std::move(result));
}

BigUnsigned eval_p_star(const BigUnsigned &bound, std::uint64_t d) {
    if (d == 0) throw Error(ErrorKind::DimensionMismatch, "distance must be at least 1");
    const std::uint64_t e = d - 1;
    return bound.pow(2 * e) * BigUnsigned(2 * e).pow(e);
}

}  // namespace ldi
