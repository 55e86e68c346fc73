#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "m06/divisor.hpp"
#include "support.hpp"

#include <set>

using namespace m06;
using namespace testing_support;

namespace {

SymmetricDivisor b(const Rational& x, const Rational& y)
{
    return SymmetricDivisor(6, {x, y});
}

// Intersection with an F-curve by summing over labeled boundary divisors
// D_S, S up to complement: D_S . F is -1 when S or its complement is a single
// block, +1 when S is a union of two blocks, and 0 otherwise.
Rational labeled_f_intersection(const SymmetricDivisor& d, const std::array<int, 4>& parts)
{
    const int n = d.n();
    std::vector<int> block(n);
    int pos = 0;
    for (int k = 0; k < 4; ++k)
        for (int m = 0; m < parts[k]; ++m)
            block[pos++] = k;
    Rational total = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (!(mask & 1u))
            continue;  // one representative per complementary pair
        const int size = __builtin_popcount(mask);
        if (size < 2 || size > n - 2)
            continue;
        std::array<int, 4> inside{}, count{};
        for (int i = 0; i < n; ++i) {
            ++count[block[i]];
            if (mask & (1u << i))
                ++inside[block[i]];
        }
        int full = 0;
        bool unions_of_blocks = true;
        for (int k = 0; k < 4; ++k) {
            if (inside[k] == count[k])
                ++full;
            else if (inside[k] != 0)
                unions_of_blocks = false;
        }
        if (!unions_of_blocks)
            continue;
        const int local = (full == 2) ? 1 : -1;
        total += local * d.coeff(std::min(size, n - size));
    }
    return total;
}

std::array<int, 4> parts_of(const FCurveClass& f)
{
    return f.partition;
}

// Chamber oracle for x B2 + y B3 written directly from the slope intervals.
std::string chamber_oracle(const Rational& x, const Rational& y)
{
    if (x < 0 || y < 0)
        return "OutsideEffectiveCone/NotApplicable/0";
    if (x == 0 && y == 0)
        return "Point/Empty/1";
    if (y == 0)
        return "Point/B2/1";
    if (x == 0)
        return "Point/B3/1";
    const Rational s = y / x;
    if (s < Rational(1, 2))
        return "IgusaQuartic/B2/0";
    if (s == Rational(1, 2))
        return "IgusaQuartic/Empty/1";
    if (s < 3)
        return "AmpleModel_M06/Empty/0";
    if (s == 3)
        return "SegreCubic/Empty/1";
    return "SegreCubic/B3/0";
}

std::string chamber_key(const ChamberReport& r)
{
    return std::string(to_string(r.model)) + "/" + to_string(r.stable_base_locus) + "/"
           + (r.boundary_case ? "1" : "0");
}

} // namespace

TEST_CASE("boundary basis bookkeeping")
{
    CHECK_THROWS_AS(SymmetricDivisor(3), std::invalid_argument);
    const auto d = SymmetricDivisor::boundary(7, 5);
    CHECK(d.coeff(2) == 1);
    CHECK(d.coeff(5) == 1);
    CHECK(d.coeff(3) == 0);
    CHECK(d.fold(4) == 3);
    CHECK_THROWS(d.fold(1));
    CHECK_THROWS(d.fold(6));
    CHECK(b(Rational(2, 5), Rational(1, 5)).to_string() == "2/5*B2 + 1/5*B3");
    CHECK(b(-1, 0).to_string() == "-B2");
    CHECK(SymmetricDivisor(6).to_string() == "0");
    CHECK_THROWS(SymmetricDivisor(6) + SymmetricDivisor(7));
}

TEST_CASE("canonical and psi classes in the boundary basis")
{
    CHECK(canonical_divisor(6) == b(Rational(-2, 5), Rational(-1, 5)));
    CHECK(psi_divisor(6) == b(Rational(8, 5), Rational(9, 5)));
    CHECK(to_K_psi(SymmetricDivisor::boundary(6, 2)) == std::pair<Rational, Rational>(Rational(-9, 2), Rational(-1, 2)));
    CHECK(to_K_psi(SymmetricDivisor::boundary(6, 3)) == std::pair<Rational, Rational>(4, 1));

    for (int n = 4; n <= 10; ++n) {
        const auto K = canonical_divisor(n);
        const auto psi = psi_divisor(n);
        CHECK(psi == K + 2 * total_boundary(n));
        for (int i = 2; i <= n / 2; ++i) {
            const Rational expected = q(i * (n - i), n - 1) - 2;
            CHECK(K.coeff(i) == expected);
            CHECK(total_boundary(n).coeff(i) == 1);
        }
    }
}

TEST_CASE("K, psi change of basis round-trips")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const Rational a = random_rational(rng, 9, 7), c = random_rational(rng, 9, 7);
        const auto d = from_K_psi(6, a, c);
        CHECK(d == a * canonical_divisor(6) + c * psi_divisor(6));
        CHECK(to_K_psi(d) == std::pair<Rational, Rational>(a, c));
    }
}

TEST_CASE("F-curve intersections match the labeled boundary sum")
{
    std::mt19937_64 rng(17);
    for (int n = 5; n <= 10; ++n) {
        const auto classes = f_curve_classes(n);
        for (const auto& f : classes)
            CHECK(f.n() == n);
        for (int trial = 0; trial < 10; ++trial) {
            RationalVector c(n / 2 - 1);
            for (auto& x : c)
                x = random_rational(rng, 6, 5);
            const SymmetricDivisor d(n, c);
            for (const auto& f : classes)
                CHECK(intersect_f_curve(d, f) == labeled_f_intersection(d, parts_of(f)));
        }
    }
}

TEST_CASE("F-curve classes are the unordered 4-part partitions")
{
    CHECK(f_curve_classes(6).size() == 2);
    CHECK(f_curve_classes(6)[0].to_string() == "F1,1,1,3");
    CHECK(f_curve_classes(6)[1].to_string() == "F1,1,2,2");
    std::set<std::array<int, 4>> brute;
    for (int a = 1; a <= 12; ++a)
        for (int b2 = a; b2 <= 12; ++b2)
            for (int c = b2; c <= 12; ++c) {
                const int d = 12 - a - b2 - c;
                if (d >= c)
                    brute.insert({a, b2, c, d});
            }
    CHECK(f_curve_classes(12).size() == brute.size());
    CHECK(FCurveClass::from_parts({3, 1, 2, 1}).partition == std::array<int, 4>{1, 1, 2, 3});
    CHECK_THROWS(FCurveClass::from_parts({0, 1, 2, 3}));
}

TEST_CASE("intersection table for n = 6")
{
    const auto K = canonical_divisor(6);
    const auto psi = psi_divisor(6);
    const auto B2 = SymmetricDivisor::boundary(6, 2);
    const auto B3 = SymmetricDivisor::boundary(6, 3);
    const auto f1113 = FCurveClass::from_parts({1, 1, 1, 3});
    const auto f1122 = FCurveClass::from_parts({1, 1, 2, 2});
    const SpecialCurveCj c4{4};
    const std::vector<SymmetricDivisor> cols{psi, K, B2, B3};
    const std::array<int, 4> row_f1113{3, -1, 3, -1}, row_f1122{2, 0, -1, 2}, row_c4{4, 0, -2, 4};
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(intersect_f_curve(cols[k], f1113) == row_f1113[k]);
        CHECK(intersect_f_curve(cols[k], f1122) == row_f1122[k]);
        CHECK(intersect_cj(cols[k], c4) == row_c4[k]);
    }
}

TEST_CASE("C_j intersections follow j r_{j-1} - (j-2) r_j")
{
    // n = 7 folds B5 onto B2 and B4 onto B3.
    const SymmetricDivisor d(7, {Rational(2), Rational(3)});
    CHECK(intersect_cj(d, SpecialCurveCj{2}) == 0);
    CHECK(intersect_cj(d, SpecialCurveCj{3}) == 3 * 2 - 1 * 3);
    CHECK(intersect_cj(d, SpecialCurveCj{4}) == 4 * 3 - 2 * 3);
    CHECK(intersect_cj(d, SpecialCurveCj{5}) == 5 * 3 - 3 * 2);
    const SymmetricDivisor e(6, {Rational(1), Rational(0)});
    CHECK(intersect_cj(e, SpecialCurveCj{3}) == 3);
}

TEST_CASE("the conic polarization solves its defining intersections")
{
    // Solve F1113 . D = 1/2, F1122 . D = 0 by Cramer's rule on the 2 x 2 system.
    const auto f1113 = FCurveClass::from_parts({1, 1, 1, 3});
    const auto f1122 = FCurveClass::from_parts({1, 1, 2, 2});
    const auto B2 = SymmetricDivisor::boundary(6, 2);
    const auto B3 = SymmetricDivisor::boundary(6, 3);
    const Rational a = intersect_f_curve(B2, f1113), bb = intersect_f_curve(B3, f1113);
    const Rational c = intersect_f_curve(B2, f1122), d = intersect_f_curve(B3, f1122);
    const Rational det = a * d - bb * c;
    REQUIRE(det != 0);
    const Rational r0(1, 2), r1(0);
    const Rational x = (r0 * d - bb * r1) / det;
    const Rational y = (a * r1 - r0 * c) / det;
    CHECK(canonical_polarization_DA() == b(x, y));
    CHECK(canonical_polarization_DA() == Rational(-1, 2) * canonical_divisor(6));
    CHECK(canonical_polarization_DA() == b(Rational(1, 5), Rational(1, 10)));
}

TEST_CASE("F-nonnegativity carves out the slope interval [1/2, 3]")
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> v(0, 60);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational x(v(rng) + 1), y(v(rng));
        const auto r = is_F_nonnegative(b(x, y));
        const Rational s = y / x;
        CHECK(r.nonnegative == (s >= Rational(1, 2) && s <= 3));
        CHECK(r.characterizes_nef);
        CHECK(r.violations.empty() == r.nonnegative);
    }
    CHECK_FALSE(is_F_nonnegative(SymmetricDivisor(7, {1, 1})).characterizes_nef);
}

TEST_CASE("effectivity on the symmetric quadrant")
{
    CHECK(is_effective_symmetric(b(1, 0)));
    CHECK(is_effective_symmetric(b(0, 0)));
    CHECK_FALSE(is_effective_symmetric(b(-1, 5)));
    CHECK_FALSE(is_effective_symmetric(canonical_divisor(6)));
}

TEST_CASE("chamber walls")
{
    const auto K = canonical_divisor(6);
    const auto psi = psi_divisor(6);
    CHECK(chamber_key(mori_model(SymmetricDivisor::boundary(6, 2))) == "Point/B2/1");
    CHECK(chamber_key(mori_model(-K)) == "IgusaQuartic/Empty/1");
    CHECK(chamber_key(mori_model(K + Rational(1, 3) * psi)) == "SegreCubic/Empty/1");
    CHECK(chamber_key(mori_model(SymmetricDivisor::boundary(6, 3))) == "Point/B3/1");
    CHECK(chamber_key(mori_model(K)) == "OutsideEffectiveCone/NotApplicable/0");
    CHECK_THROWS_AS(stable_base_locus(K), std::domain_error);
    CHECK_THROWS(mori_model(SymmetricDivisor(7)));
}

TEST_CASE("chamber sweep over 1000 rays with scaling invariance")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> v(0, 40);
    std::uniform_int_distribution<int> scale(1, 9);
    for (int trial = 0; trial < 1000; ++trial) {
        Rational x(v(rng), 1 + v(rng) % 7), y(v(rng), 1 + v(rng) % 7);
        x.canonicalize();
        y.canonicalize();
        if (trial % 10 == 0)
            y = x / 2;  // -K ray
        if (trial % 10 == 1)
            y = 3 * x;  // K + psi/3 ray
        const auto d = b(x, y);
        const auto r = mori_model(d);
        CHECK(chamber_key(r) == chamber_oracle(x, y));
        CHECK(chamber_key(mori_model(q(scale(rng), scale(rng)) * d)) == chamber_key(r));
        if (is_effective_symmetric(d))
            CHECK(stable_base_locus(d) == r.stable_base_locus);
    }
}
