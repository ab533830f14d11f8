#include "bredon/ratlinalg.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

#include "bredon/error.hpp"

namespace bredon {

std::string to_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "'");

    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw ParseError("zero denominator in rational '" + std::string(text) + "'");
    if (negative)
        n = -n;
    Rational q(n, d);
    q.canonicalize();
    return q;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows * cols)
        throw std::invalid_argument("RatMatrix: entry count does not match shape");
}

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows)
{
    if (rows.empty())
        return {};
    const std::size_t cols = rows.front().size();
    std::vector<Rational> data;
    data.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols)
            throw std::invalid_argument("RatMatrix::from_rows: ragged rows");
        data.insert(data.end(), r.begin(), r.end());
    }
    return {rows.size(), cols, std::move(data)};
}

RatMatrix RatMatrix::from_columns(std::size_t rows, const std::vector<RatVector>& columns)
{
    RatMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw std::invalid_argument("RatMatrix::from_columns: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

RatVector RatMatrix::column(std::size_t c) const
{
    RatVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

bool RatMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool RatMatrix::is_identity() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? 1 : 0))
                return false;
    return true;
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool operator==(const RatMatrix& a, const RatMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: dimension mismatch (" + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()) + ")");
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (sgn(b(k, j)) != 0)
                    out(i, j) += aik * b(k, j);
        }
    return out;
}

RatVector multiply(const RatMatrix& a, std::span<const Rational> v)
{
    if (a.cols() != v.size())
        throw std::invalid_argument("multiply: vector length mismatch");
    RatVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0)
                out[i] += a(i, k) * v[k];
    return out;
}

RatMatrix add(const RatMatrix& a, const RatMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("add: shape mismatch");
    RatMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) += b(r, c);
    return out;
}

RatMatrix scale(const RatMatrix& a, const Rational& s)
{
    RatMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) *= s;
    return out;
}

RatMatrix power(const RatMatrix& a, std::size_t exponent)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("power: matrix is not square");
    RatMatrix result = RatMatrix::identity(a.rows());
    RatMatrix base = a;
    while (exponent > 0) {
        if (exponent & 1U)
            result = multiply(result, base);
        exponent >>= 1U;
        if (exponent > 0)
            base = multiply(base, base);
    }
    return result;
}

RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b)
{
    RatMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            out(a.rows() + r, a.cols() + c) = b(r, c);
    return out;
}

namespace {

// Forward elimination to row echelon form. When `reduce` is set, also clears
// entries above each pivot and normalizes pivots to 1. Row operations only
// touch the columns where the pivot row is nonzero; the matrices produced by
// cell complexes are very sparse.
EchelonForm eliminate(RatMatrix m, bool reduce)
{
    EchelonForm out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t pivot_row = 0;
    std::vector<std::size_t> support;
    Rational factor;

    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t found = rows;
        for (std::size_t r = pivot_row; r < rows; ++r)
            if (sgn(m(r, c)) != 0) {
                found = r;
                break;
            }
        if (found == rows)
            continue;
        if (found != pivot_row)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(m(found, j), m(pivot_row, j));

        if (reduce && m(pivot_row, c) != 1) {
            const Rational inv = 1 / m(pivot_row, c);
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(m(pivot_row, j)) != 0)
                    m(pivot_row, j) *= inv;
        }

        support.clear();
        for (std::size_t j = c; j < cols; ++j)
            if (sgn(m(pivot_row, j)) != 0)
                support.push_back(j);

        const std::size_t first = reduce ? 0 : pivot_row + 1;
        for (std::size_t r = first; r < rows; ++r) {
            if (r == pivot_row || sgn(m(r, c)) == 0)
                continue;
            factor = m(r, c) / m(pivot_row, c);
            for (const std::size_t j : support)
                m(r, j) -= factor * m(pivot_row, j);
        }
        out.pivot_columns.push_back(c);
        ++pivot_row;
    }
    out.reduced = std::move(m);
    return out;
}

} // namespace

EchelonForm reduced_row_echelon(RatMatrix m)
{
    return eliminate(std::move(m), true);
}

std::size_t rank(const RatMatrix& m)
{
    if (m.empty())
        return 0;
    // Eliminate along the shorter side.
    if (m.rows() < m.cols())
        return eliminate(m.transpose(), false).pivot_columns.size();
    return eliminate(m, false).pivot_columns.size();
}

std::vector<RatVector> kernel_basis(const RatMatrix& m)
{
    const std::size_t cols = m.cols();
    if (m.rows() == 0) {
        std::vector<RatVector> basis;
        for (std::size_t c = 0; c < cols; ++c) {
            RatVector v(cols);
            v[c] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    const EchelonForm ef = reduced_row_echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (const std::size_t c : ef.pivot_columns)
        is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        RatVector v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < ef.pivot_columns.size(); ++i)
            v[ef.pivot_columns[i]] = -ef.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<RatVector> image_basis(const RatMatrix& m)
{
    std::vector<RatVector> basis;
    if (m.empty())
        return basis;
    for (const std::size_t c : eliminate(m, false).pivot_columns)
        basis.push_back(m.column(c));
    return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, std::span<const Rational> b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side length mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const EchelonForm ef = reduced_row_echelon(std::move(aug));
    if (!ef.pivot_columns.empty() && ef.pivot_columns.back() == m.cols())
        return std::nullopt;
    RatVector x(m.cols());
    for (std::size_t i = 0; i < ef.pivot_columns.size(); ++i)
        x[ef.pivot_columns[i]] = ef.reduced(i, m.cols());
    return x;
}

} // namespace bredon
