#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ldi/error.hpp"

namespace ldi {

bool is_prime(std::int64_t v);

/// A prime local dimension. Construction fails with NotPrime for composites and values < 2.
class PrimeModulus {
  public:
    explicit PrimeModulus(std::int64_t value);

    std::int64_t value() const noexcept { return value_; }

    /// Least non-negative residue of a.
    std::int64_t reduce(std::int64_t a) const noexcept {
        std::int64_t r = a % value_;
        return r < 0 ? r + value_ : r;
    }

    friend bool operator==(const PrimeModulus &, const PrimeModulus &) = default;

  private:
    std::int64_t value_;
};

/// Returns b in [1, m) with a*b = 1 mod m. Throws ZeroNoInverse when a = 0 mod m.
std::int64_t mod_inverse(std::int64_t a, PrimeModulus m);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Dense row-major integer matrix.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>> &rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::int64_t &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<std::int64_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const std::int64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const std::int64_t> values);
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

    /// Copy with every entry replaced by its least non-negative residue.
    IntMatrix reduced(PrimeModulus m) const;
    std::int64_t max_abs() const;
    std::vector<std::vector<std::int64_t>> to_rows() const;

    friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

// Elementary row operations. RowAdd performs row[target] += factor * row[source].
struct RowScale {
    std::size_t row;
    std::int64_t factor;
    friend bool operator==(const RowScale &, const RowScale &) = default;
};
struct RowAdd {
    std::size_t target;
    std::size_t source;
    std::int64_t factor;
    friend bool operator==(const RowAdd &, const RowAdd &) = default;
};
struct RowSwap {
    std::size_t a;
    std::size_t b;
    friend bool operator==(const RowSwap &, const RowSwap &) = default;
};
using RowOp = std::variant<RowScale, RowAdd, RowSwap>;

/// Applies one row operation, reducing the touched rows mod m.
void apply_row_op(IntMatrix &mat, const RowOp &op, PrimeModulus m);

struct RrefResult {
    IntMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;  // pivot column of row i, i < rank
    std::vector<RowOp> ops;
};

/// Reduced row-echelon form over GF(m). Pivot columns are tried in `column_order`
/// (default: natural order); columns not listed are never pivots.
RrefResult rref_mod(const IntMatrix &mat, PrimeModulus m,
                    std::optional<std::span<const std::size_t>> column_order = std::nullopt);

std::size_t rank_mod(const IntMatrix &mat, PrimeModulus m);

/// Coefficients c with c * mat = v (mod m), or nullopt when v is outside the row space.
std::optional<std::vector<std::int64_t>> solve_in_rowspace(const IntMatrix &mat, std::span<const std::int64_t> v,
                                                           PrimeModulus m);

/// Basis (as rows) of {x : mat * x^T = 0 mod m}.
IntMatrix nullspace_mod(const IntMatrix &mat, PrimeModulus m);

/// Exact non-negative integer for the B and p* calculators.
class BigUnsigned {
  public:
    using Rep = boost::multiprecision::cpp_int;

    BigUnsigned() = default;
    BigUnsigned(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    static BigUnsigned from_rep(Rep v);

    BigUnsigned pow(std::uint64_t exponent) const;
    std::string to_string() const { return value_.str(); }
    const Rep &rep() const noexcept { return value_; }

    friend BigUnsigned operator*(const BigUnsigned &a, const BigUnsigned &b) {
        return from_rep(a.value_ * b.value_);
    }
    friend bool operator==(const BigUnsigned &a, const BigUnsigned &b) { return a.value_ == b.value_; }
    friend auto operator<=>(const BigUnsigned &a, const BigUnsigned &b) {
        return a.value_ < b.value_ ? std::strong_ordering::less
               : b.value_ < a.value_ ? std::strong_ordering::greater
                                     : std::strong_ordering::equal;
    }

  private:
    Rep value_;
};

/// B^{2(d-1)} * [2(d-1)]^{d-1}, with 0^0 = 1 so that d = 1 gives 1.
BigUnsigned eval_p_star(const BigUnsigned &bound, std::uint64_t d);

}  // namespace ldi
