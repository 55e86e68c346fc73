#pragma once

// Exact rational arithmetic and small dense linear algebra over Q.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace m06 {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator. The result is in lowest terms.
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& r);

/// Parses a comma-separated list of rationals.
RationalVector parse_rational_list(std::string_view csv);

/// Row-major dense matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RationalMatrix from_rows(std::span<const RationalVector> rows);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<Rational>& entries() const noexcept { return entries_; }

    RationalVector row(std::size_t r) const;
    RationalVector operator*(std::span<const Rational> v) const;
    RationalMatrix operator*(const RationalMatrix& other) const;

    bool operator==(const RationalMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Reduced row echelon form plus the pivot column of each nonzero row.
struct EchelonForm {
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;
};

EchelonForm row_reduce(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of the right null space. Each vector has integer entries with
/// content 1 and a positive first nonzero entry; vectors are ordered by
/// their free column.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Projective dimension of the span of the given points (rank - 1).
/// Throws std::invalid_argument on a zero vector or ragged input.
int span_dimension(std::span<const RationalVector> points);

/// Inverse of a square matrix; throws std::domain_error when singular.
RationalMatrix inverse(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);

bool is_zero(std::span<const Rational> v);

/// Scales v to integer entries with content 1 and positive first nonzero
/// entry. The zero vector is returned unchanged.
RationalVector primitive_integer_vector(std::span<const Rational> v);

} // namespace m06
