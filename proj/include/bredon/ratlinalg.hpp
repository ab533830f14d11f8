#pragma once

/**
 * Exact rational scalars and dense matrices.
 *
 * Every routine here is a pure function of its arguments. Elimination always
 * pivots on the first nonzero entry (scanning rows top to bottom) of the
 * leftmost remaining column, so results are reproducible bit for bit.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace bredon {

/// GMP rationals; arithmetic results are always in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "[+-]digits" or "[+-]digits/digits" with a nonzero denominator.
/// Throws ParseError otherwise. The result is canonicalized.
Rational parse_rational(std::string_view text);

using RatVector = std::vector<Rational>;

class RatMatrix
{
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RatMatrix identity(std::size_t n);
    static RatMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    /// Builds a matrix from nested row lists; all rows must have equal length.
    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    static RatMatrix from_columns(std::size_t rows, const std::vector<RatVector>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    RatVector column(std::size_t c) const;
    const std::vector<Rational>& entries() const { return data_; }

    bool is_zero() const;
    bool is_identity() const;
    RatMatrix transpose() const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact product; throws std::invalid_argument when a.cols() != b.rows().
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
RatVector multiply(const RatMatrix& a, std::span<const Rational> v);
RatMatrix add(const RatMatrix& a, const RatMatrix& b);
RatMatrix scale(const RatMatrix& a, const Rational& s);
/// Square matrix power by repeated squaring; exponent 0 gives the identity.
RatMatrix power(const RatMatrix& a, std::size_t exponent);
/// Block-diagonal direct sum.
RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b);

/// Reduced row echelon form together with the pivot column of each nonzero row.
struct EchelonForm
{
    RatMatrix reduced;
    std::vector<std::size_t> pivot_columns;
};

EchelonForm reduced_row_echelon(RatMatrix m);

std::size_t rank(const RatMatrix& m);

/// Basis of {v : m v = 0}; one vector per non-pivot column, with a 1 in that
/// column. Size is m.cols() - rank(m).
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Basis of the column space: the pivot columns of m, in order.
std::vector<RatVector> image_basis(const RatMatrix& m);

/// Some x with m x = b, or nullopt if the system is inconsistent. Free
/// variables are set to zero.
std::optional<RatVector> solve(const RatMatrix& m, std::span<const Rational> b);

} // namespace bredon
