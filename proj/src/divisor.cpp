#include "m06/divisor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace m06 {

SymmetricDivisor::SymmetricDivisor(int n)
    : n_(n)
{
    if (n < 4)
        throw std::invalid_argument("symmetric divisors need n >= 4, got " + std::to_string(n));
    coeffs_.resize(static_cast<std::size_t>(n / 2 - 1));
}

SymmetricDivisor::SymmetricDivisor(int n, RationalVector coeffs)
    : SymmetricDivisor(n)
{
    if (coeffs.size() != coeffs_.size())
        throw std::invalid_argument("expected " + std::to_string(coeffs_.size()) + " boundary coefficients for n = "
                                    + std::to_string(n));
    coeffs_ = std::move(coeffs);
}

SymmetricDivisor SymmetricDivisor::boundary(int n, int i)
{
    SymmetricDivisor d(n);
    d.add_boundary(i, 1);
    return d;
}

int SymmetricDivisor::fold(int i) const
{
    if (i < 2 || i > n_ - 2)
        throw std::out_of_range("boundary index " + std::to_string(i) + " outside 2.." + std::to_string(n_ - 2));
    return std::min(i, n_ - i);
}

const Rational& SymmetricDivisor::coeff(int i) const
{
    return coeffs_[static_cast<std::size_t>(fold(i) - 2)];
}

void SymmetricDivisor::add_boundary(int i, const Rational& c)
{
    coeffs_[static_cast<std::size_t>(fold(i) - 2)] += c;
}

void SymmetricDivisor::check_same_n(const SymmetricDivisor& other) const
{
    if (other.n_ != n_)
        throw std::invalid_argument("divisors live on different moduli spaces (n = " + std::to_string(n_) + " vs "
                                    + std::to_string(other.n_) + ")");
}

SymmetricDivisor& SymmetricDivisor::operator+=(const SymmetricDivisor& other)
{
    check_same_n(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += other.coeffs_[k];
    return *this;
}

SymmetricDivisor& SymmetricDivisor::operator-=(const SymmetricDivisor& other)
{
    check_same_n(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] -= other.coeffs_[k];
    return *this;
}

SymmetricDivisor& SymmetricDivisor::operator*=(const Rational& s)
{
    for (auto& c : coeffs_)
        c *= s;
    return *this;
}

bool SymmetricDivisor::is_zero() const
{
    return m06::is_zero(coeffs_);
}

std::string SymmetricDivisor::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0)
            continue;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        const Rational mag = abs(c);
        if (mag != 1)
            os << m06::to_string(mag) << "*";
        os << "B" << (k + 2);
        first = false;
    }
    return first ? "0" : os.str();
}

FCurveClass FCurveClass::from_parts(std::array<int, 4> parts)
{
    for (int p : parts)
        if (p < 1)
            throw std::invalid_argument("F-curve parts must be positive");
    std::sort(parts.begin(), parts.end());
    return FCurveClass{parts};
}

std::string FCurveClass::to_string() const
{
    std::ostringstream os;
    os << "F" << partition[0] << "," << partition[1] << "," << partition[2] << "," << partition[3];
    return os.str();
}

std::vector<FCurveClass> f_curve_classes(int n)
{
    std::vector<FCurveClass> out;
    for (int a = 1; 4 * a <= n; ++a)
        for (int b = a; a + 3 * b <= n; ++b)
            for (int c = b; a + b + 2 * c <= n; ++c) {
                const int d = n - a - b - c;
                if (d >= c)
                    out.push_back(FCurveClass{{a, b, c, d}});
            }
    return out;
}

SymmetricDivisor canonical_divisor(int n)
{
    SymmetricDivisor k(n);
    for (int i = 2; i <= n / 2; ++i) {
        Rational c(i * (n - i), n - 1);
        c.canonicalize();
        k.add_boundary(i, c - 2);
    }
    return k;
}

SymmetricDivisor total_boundary(int n)
{
    SymmetricDivisor b(n);
    for (int i = 2; i <= n / 2; ++i)
        b.add_boundary(i, 1);
    return b;
}

SymmetricDivisor psi_divisor(int n)
{
    return canonical_divisor(n) + Rational(2) * total_boundary(n);
}

SymmetricDivisor from_K_psi(int n, const Rational& a, const Rational& b)
{
    return a * canonical_divisor(n) + b * psi_divisor(n);
}

std::pair<Rational, Rational> to_K_psi(const SymmetricDivisor& d)
{
    if (d.n() != 6)
        throw std::domain_error("K and psi span the symmetric classes only for n = 6");
    // B2 = -9/2 K - 1/2 psi, B3 = 4K + psi
    const Rational& x = d.coeff(2);
    const Rational& y = d.coeff(3);
    return {Rational(-9, 2) * x + 4 * y, Rational(-1, 2) * x + y};
}

namespace {

// r_k with r_1 = 0 and r_k = r_{n-k}.
Rational folded_coeff(const SymmetricDivisor& d, int k)
{
    const int i = std::min(k, d.n() - k);
    if (i <= 1)
        return 0;
    return d.coeff(i);
}

} // namespace

Rational intersect_f_curve(const SymmetricDivisor& d, const FCurveClass& f)
{
    if (f.n() != d.n())
        throw std::invalid_argument("F-curve " + f.to_string() + " does not partition n = " + std::to_string(d.n()));
    const auto& a = f.partition;
    Rational out = 0;
    for (int part : a)
        out -= folded_coeff(d, part);
    out += folded_coeff(d, a[0] + a[1]);
    out += folded_coeff(d, a[0] + a[2]);
    out += folded_coeff(d, a[0] + a[3]);
    return out;
}

Rational intersect_cj(const SymmetricDivisor& d, SpecialCurveCj c)
{
    const int n = d.n();
    if (c.j < 2 || c.j > n - 2)
        throw std::out_of_range("C_j needs 2 <= j <= " + std::to_string(n - 2) + ", got " + std::to_string(c.j));
    Rational out = 0;
    // B_{j-1} meets C_j in j points; C_j lies in B_j with normal degree -(j - 2).
    if (c.j - 1 >= 2)
        out += c.j * d.coeff(c.j - 1);
    out -= (c.j - 2) * d.coeff(c.j);
    return out;
}

FNonnegativity is_F_nonnegative(const SymmetricDivisor& d)
{
    FNonnegativity out;
    out.characterizes_nef = d.n() == 6;
    for (const auto& f : f_curve_classes(d.n()))
        if (intersect_f_curve(d, f) < 0) {
            out.nonnegative = false;
            out.violations.push_back(f);
        }
    return out;
}

bool is_effective_symmetric(const SymmetricDivisor& d)
{
    return std::all_of(d.coeffs().begin(), d.coeffs().end(), [](const Rational& c) { return c >= 0; });
}

SymmetricDivisor canonical_polarization_DA()
{
    return SymmetricDivisor(6, {Rational(1, 5), Rational(1, 10)});
}

const char* to_string(BaseLocus b)
{
    switch (b) {
    case BaseLocus::Empty: return "Empty";
    case BaseLocus::B2: return "B2";
    case BaseLocus::B3: return "B3";
    case BaseLocus::NotApplicable: return "NotApplicable";
    }
    return "?";
}

const char* to_string(MoriModel m)
{
    switch (m) {
    case MoriModel::AmpleModel_M06: return "AmpleModel_M06";
    case MoriModel::SegreCubic: return "SegreCubic";
    case MoriModel::IgusaQuartic: return "IgusaQuartic";
    case MoriModel::Point: return "Point";
    case MoriModel::OutsideEffectiveCone: return "OutsideEffectiveCone";
    }
    return "?";
}

namespace {

void require_n6(const SymmetricDivisor& d)
{
    if (d.n() != 6)
        throw std::domain_error("the chamber decomposition is only available for n = 6");
}

} // namespace

ChamberReport mori_model(const SymmetricDivisor& d)
{
    require_n6(d);
    ChamberReport r;
    if (!is_effective_symmetric(d))
        return r;

    // D = x B2 + y B3; walls are the rays of slope y/x = 0, 1/2 (-K), 3 (K + psi/3), infinity.
    const Rational& x = d.coeff(2);
    const Rational& y = d.coeff(3);
    if (x == 0 && y == 0) {
        r = {MoriModel::Point, BaseLocus::Empty, true};
    } else if (x == 0) {
        r = {MoriModel::Point, BaseLocus::B3, true};
    } else if (y == 0) {
        r = {MoriModel::Point, BaseLocus::B2, true};
    } else if (2 * y < x) {
        r = {MoriModel::IgusaQuartic, BaseLocus::B2, false};
    } else if (2 * y == x) {
        r = {MoriModel::IgusaQuartic, BaseLocus::Empty, true};
    } else if (y < 3 * x) {
        r = {MoriModel::AmpleModel_M06, BaseLocus::Empty, false};
    } else if (y == 3 * x) {
        r = {MoriModel::SegreCubic, BaseLocus::Empty, true};
    } else {
        r = {MoriModel::SegreCubic, BaseLocus::B3, false};
    }
    return r;
}

BaseLocus stable_base_locus(const SymmetricDivisor& d)
{
    require_n6(d);
    if (!is_effective_symmetric(d))
        throw std::domain_error("stable base locus requested for a non-effective class " + d.to_string());
    return mori_model(d).stable_base_locus;
}

} // namespace m06
