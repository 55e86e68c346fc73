#include "m06/exact.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace m06 {

namespace {

bool is_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Integer d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(Integer(std::string(num), 10), d);
    r.canonicalize();
    if (negative)
        r = -r;
    return r;
}

std::string to_string(const Rational& r)
{
    return r.get_str(10);
}

RationalVector parse_rational_list(std::string_view csv)
{
    RationalVector out;
    std::size_t start = 0;
    while (true) {
        const auto comma = csv.find(',', start);
        out.push_back(parse_rational(csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols)
{
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows * cols)
        throw std::invalid_argument("matrix entry count does not match rows x cols");
}

RationalMatrix RationalMatrix::from_rows(std::span<const RationalVector> rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalVector RationalMatrix::row(std::size_t r) const
{
    return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

RationalVector RationalMatrix::operator*(std::span<const Rational> v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("matrix-vector size mismatch");
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out[r] += (*this)(r, c) * v[c];
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const
{
    if (cols_ != other.rows_)
        throw std::invalid_argument("matrix-matrix size mismatch");
    RationalMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (a == 0)
                continue;
            for (std::size_t c = 0; c < other.cols_; ++c)
                out(r, c) += a * other(k, c);
        }
    return out;
}

EchelonForm row_reduce(RationalMatrix m)
{
    EchelonForm out;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t pivot = lead;
        while (pivot < m.rows() && m(pivot, c) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != lead)
            for (std::size_t k = 0; k < m.cols(); ++k)
                std::swap(m(pivot, k), m(lead, k));
        const Rational inv = 1 / Rational(m(lead, c));
        for (std::size_t k = c; k < m.cols(); ++k)
            m(lead, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m(r, c) == 0)
                continue;
            const Rational f = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                m(r, k) -= f * m(lead, k);
        }
        out.pivots.push_back(c);
        ++lead;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const RationalMatrix& m)
{
    return row_reduce(m).pivots.size();
}

bool is_zero(std::span<const Rational> v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

RationalVector primitive_integer_vector(std::span<const Rational> v)
{
    RationalVector out(v.begin(), v.end());
    if (is_zero(v))
        return out;
    Integer den_lcm = 1;
    for (const auto& x : v)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    Integer content = 0;
    for (const auto& x : v) {
        const Integer scaled = x.get_num() * (den_lcm / x.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    }
    const auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    Rational factor(den_lcm, content);
    factor.canonicalize();
    if (*first < 0)
        factor = -factor;
    for (auto& x : out)
        x *= factor;
    return out;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m)
{
    const EchelonForm ef = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ef.pivots)
        is_pivot[p] = true;

    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        RationalVector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < ef.pivots.size(); ++r)
            v[ef.pivots[r]] = -ef.reduced(r, free);
        basis.push_back(primitive_integer_vector(v));
    }
    return basis;
}

int span_dimension(std::span<const RationalVector> points)
{
    if (points.empty())
        throw std::invalid_argument("span_dimension of an empty point set");
    for (const auto& p : points)
        if (is_zero(p))
            throw std::invalid_argument("zero vector is not a projective point");
    return static_cast<int>(rank(RationalMatrix::from_rows(points))) - 1;
}

RationalMatrix inverse(const RationalMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    const EchelonForm ef = row_reduce(std::move(aug));
    if (ef.pivots.size() < n || ef.pivots[n - 1] != n - 1)
        throw std::domain_error("matrix is singular");
    RationalMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out(r, c) = ef.reduced(r, n + c);
    return out;
}

Rational determinant(const RationalMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    RationalMatrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k)
                std::swap(a(p, k), a(c, k));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a(r, c) == 0)
                continue;
            const Rational f = a(r, c) / a(c, c);
            for (std::size_t k = c; k < n; ++k)
                a(r, k) -= f * a(c, k);
        }
    }
    return det;
}

} // namespace m06
