#pragma once

// Symmetric divisor classes on the moduli space of n-pointed stable rational
// curves, written in the boundary basis B_2 .. B_{floor(n/2)}, together with
// F-curve / C_j intersection numbers and the n = 6 chamber decomposition.

#include "m06/exact.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace m06 {

class SymmetricDivisor {
public:
    /// Zero class. Throws std::invalid_argument for n < 4.
    explicit SymmetricDivisor(int n);

    /// Coefficients of B_2, B_3, ..., B_{floor(n/2)} in that order.
    SymmetricDivisor(int n, RationalVector coeffs);

    /// The boundary class B_i; i is folded into range via B_i = B_{n-i}.
    static SymmetricDivisor boundary(int n, int i);

    int n() const noexcept { return n_; }
    int max_index() const noexcept { return n_ / 2; }

    /// Coefficient of B_i, i in 2..n-2 (folded).
    const Rational& coeff(int i) const;
    const RationalVector& coeffs() const noexcept { return coeffs_; }

    /// Adds c to the coefficient of B_i, folding i.
    void add_boundary(int i, const Rational& c);

    /// Canonical index for B_i: min(i, n - i). Throws outside 2..n-2.
    int fold(int i) const;

    SymmetricDivisor& operator+=(const SymmetricDivisor& other);
    SymmetricDivisor& operator-=(const SymmetricDivisor& other);
    SymmetricDivisor& operator*=(const Rational& s);

    friend SymmetricDivisor operator+(SymmetricDivisor a, const SymmetricDivisor& b) { return a += b; }
    friend SymmetricDivisor operator-(SymmetricDivisor a, const SymmetricDivisor& b) { return a -= b; }
    friend SymmetricDivisor operator*(const Rational& s, SymmetricDivisor d) { return d *= s; }
    friend SymmetricDivisor operator-(SymmetricDivisor d) { return d *= Rational(-1); }

    bool operator==(const SymmetricDivisor& other) const = default;

    bool is_zero() const;

    /// e.g. "2/5*B2 + 1/5*B3"; "0" for the zero class.
    std::string to_string() const;

private:
    void check_same_n(const SymmetricDivisor& other) const;

    int n_;
    RationalVector coeffs_;
};

/// F-curve class; only the block sizes matter against symmetric divisors.
struct FCurveClass {
    std::array<int, 4> partition;

    /// Sorts ascending; throws if any part is < 1.
    static FCurveClass from_parts(std::array<int, 4> parts);
    int n() const noexcept { return partition[0] + partition[1] + partition[2] + partition[3]; }
    std::string to_string() const;
    bool operator==(const FCurveClass&) const = default;
};

/// All F-curve classes for n, in lexicographic order of sorted partitions.
std::vector<FCurveClass> f_curve_classes(int n);

struct SpecialCurveCj {
    int j;
};

SymmetricDivisor canonical_divisor(int n);
SymmetricDivisor psi_divisor(int n);
SymmetricDivisor total_boundary(int n);

/// a*K + b*psi in the boundary basis.
SymmetricDivisor from_K_psi(int n, const Rational& a, const Rational& b);

/// Inverse of from_K_psi on n = 6: returns (a, b) with D = a*K + b*psi.
std::pair<Rational, Rational> to_K_psi(const SymmetricDivisor& d);

Rational intersect_f_curve(const SymmetricDivisor& d, const FCurveClass& f);
Rational intersect_cj(const SymmetricDivisor& d, SpecialCurveCj c);

struct FNonnegativity {
    bool nonnegative = true;
    std::vector<FCurveClass> violations;
    /// True only for n = 6, where F-nonnegativity characterizes nef classes.
    bool characterizes_nef = false;
};

FNonnegativity is_F_nonnegative(const SymmetricDivisor& d);

bool is_effective_symmetric(const SymmetricDivisor& d);

/// Pullback of the canonical polarization of the symmetric-weight conic
/// quotient of (P^2)^6; this is -K/2 = 1/5 B2 + 1/10 B3.
SymmetricDivisor canonical_polarization_DA();

enum class BaseLocus { Empty, B2, B3, NotApplicable };
enum class MoriModel { AmpleModel_M06, SegreCubic, IgusaQuartic, Point, OutsideEffectiveCone };

const char* to_string(BaseLocus b);
const char* to_string(MoriModel m);

struct ChamberReport {
    MoriModel model = MoriModel::OutsideEffectiveCone;
    BaseLocus stable_base_locus = BaseLocus::NotApplicable;
    bool boundary_case = false;
};

/// n = 6 only. Throws std::domain_error for a non-effective class.
BaseLocus stable_base_locus(const SymmetricDivisor& d);

/// n = 6 only. Non-effective classes give OutsideEffectiveCone.
ChamberReport mori_model(const SymmetricDivisor& d);

} // namespace m06
