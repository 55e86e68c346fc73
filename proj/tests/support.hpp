#pragma once

// Independent reference computations shared by the test programs. Nothing
// here calls into the library's linear algebra.

#include "m06/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace testing_support {

using m06::Rational;
using m06::RationalMatrix;
using m06::RationalVector;

inline Rational q(long num, long den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational random_rational(std::mt19937_64& rng, int num_bound, int den_bound)
{
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

// Cofactor expansion along the first row.
inline Rational laplace_determinant(const std::vector<std::vector<Rational>>& a)
{
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return a[0][0];
    Rational total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (a[0][c] == 0)
            continue;
        std::vector<std::vector<Rational>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(a[r][k]);
            minor.push_back(row);
        }
        const Rational term = a[0][c] * laplace_determinant(minor);
        total += (c % 2 == 0) ? term : Rational(-term);
    }
    return total;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n)
{
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Largest k with a nonzero k x k minor.
inline std::size_t minor_rank(const RationalMatrix& m)
{
    for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
        std::vector<std::size_t> rows(k), cols(k);
        std::iota(rows.begin(), rows.end(), 0);
        do {
            std::iota(cols.begin(), cols.end(), 0);
            do {
                std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        sub[i][j] = m(rows[i], cols[j]);
                if (laplace_determinant(sub) != 0)
                    return k;
            } while (next_combination(cols, m.cols()));
        } while (next_combination(rows, m.rows()));
    }
    return 0;
}

// Product of a random rows x r and r x cols matrix, so the rank is usually r.
inline RationalMatrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t r)
{
    RationalMatrix a(rows, r), b(r, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < r; ++j)
            a(i, j) = random_rational(rng, 4, 3);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            b(i, j) = random_rational(rng, 4, 3);
    RationalMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t k = 0; k < r; ++k)
                out(i, j) += a(i, k) * b(k, j);
    return out;
}

inline RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t n)
{
    for (;;) {
        RationalMatrix g(n, n);
        std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                rows[i][j] = g(i, j) = random_rational(rng, 5, 4);
        if (laplace_determinant(rows) != 0)
            return g;
    }
}

} // namespace testing_support
