#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "m06/m2.hpp"
#include "support.hpp"

using namespace m06;
using namespace testing_support;

namespace {

M2Divisor stack(Rational l, Rational d0, Rational d1)
{
    return {M2Space::Stack, l, d0, d1};
}

M2Divisor coarse(Rational l, Rational d0, Rational d1)
{
    return {M2Space::CoarseSpace, l, d0, d1};
}

SymmetricDivisor b(const Rational& x, const Rational& y)
{
    return SymmetricDivisor(6, {x, y});
}

// Model for u delta0 + v delta1 on the stack from the stated intervals:
// (delta0, lambda] Satake, (lambda, delta0 + 12 delta1) coarse space,
// [delta0 + 12 delta1, delta1) P^6 quotient, end rays a point.
std::string oracle(const Rational& u, const Rational& v)
{
    if (u < 0 || v < 0)
        return "OutsideEffectiveCone/0";
    if (u == 0 || v == 0)
        return "Point/1";
    const Rational s = v / u;
    if (s < 2)
        return "SatakeA2/0";
    if (s == 2)
        return "SatakeA2/1";
    if (s < 12)
        return "M2CoarseSpace/0";
    if (s == 12)
        return "P6QuotientSL2/1";
    return "P6QuotientSL2/0";
}

std::string key(const M2ChamberReport& r)
{
    return std::string(to_string(r.model)) + "/" + (r.boundary_case ? "1" : "0");
}

} // namespace

TEST_CASE("lambda reduction")
{
    const auto r = stack(1, 0, 0).reduced();
    CHECK(r.lambda == 0);
    CHECK(r.boundary0 == Rational(1, 10));
    CHECK(r.boundary1 == Rational(1, 5));
    const auto c = coarse(1, 0, 0).reduced();
    CHECK(c.boundary0 == Rational(1, 10));
    CHECK(c.boundary1 == Rational(1, 10));
    CHECK(to_coarse_boundary(stack(0, 1, 12)) == std::pair<Rational, Rational>(1, 6));
    CHECK(stack(0, 1, 12).to_string() == "delta0 + 12*delta1");
    CHECK(coarse(2, 0, Rational(-1, 2)).to_string() == "2*lambda - 1/2*Delta1");
}

TEST_CASE("pullbacks")
{
    CHECK(pullback_to_m06(stack(1, 0, 0)) == b(Rational(1, 5), Rational(1, 10)));
    CHECK(pullback_to_m06(stack(1, 0, 0)) == Rational(-1, 2) * canonical_divisor(6));
    CHECK(pullback_to_m06(coarse(0, 1, 0)) == b(2, 0));
    CHECK(pullback_to_m06(coarse(0, 0, 1)) == b(0, 1));
    CHECK(pullback_to_m06(stack(0, 0, 1)) == b(0, Rational(1, 2)));
    CHECK(pullback_to_m06(coarse(0, 1, 6)) == b(2, 6));
    CHECK(pullback_to_m06(coarse(0, 1, 6)) == 15 * (canonical_divisor(6) + Rational(1, 3) * psi_divisor(6)));
    CHECK(pullback_to_m06(stack(0, 1, 12)) == b(2, 6));
    CHECK(pullback_to_m06(coarse(1, 0, 0)) == pullback_to_m06(stack(1, 0, 0)));
}

TEST_CASE("pullback is linear")
{
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        const auto space = trial % 2 ? M2Space::Stack : M2Space::CoarseSpace;
        const M2Divisor d1{space, random_rational(rng, 5, 3), random_rational(rng, 5, 3), random_rational(rng, 5, 3)};
        const M2Divisor d2{space, random_rational(rng, 5, 3), random_rational(rng, 5, 3), random_rational(rng, 5, 3)};
        const Rational a = random_rational(rng, 5, 3), c = random_rational(rng, 5, 3);
        const M2Divisor combo{space, a * d1.lambda + c * d2.lambda, a * d1.boundary0 + c * d2.boundary0,
                              a * d1.boundary1 + c * d2.boundary1};
        CHECK(pullback_to_m06(combo) == a * pullback_to_m06(d1) + c * pullback_to_m06(d2));
    }
}

TEST_CASE("walls pull back to walls")
{
    const auto K = canonical_divisor(6);
    const auto psi = psi_divisor(6);
    CHECK(pullback_to_m06(stack(1, 0, 0)) == Rational(1, 2) * (-K));
    CHECK(pullback_to_m06(stack(0, 1, 12)) == 15 * (K + Rational(1, 3) * psi));
    CHECK(key(m2_chamber(stack(1, 0, 0))) == "SatakeA2/1");
    CHECK(key(m2_chamber(stack(0, 1, 12))) == "P6QuotientSL2/1");
    CHECK(key(m2_chamber(stack(0, 1, 0))) == "Point/1");
    CHECK(key(m2_chamber(stack(0, 0, 1))) == "Point/1");
    CHECK(key(m2_chamber(stack(0, -1, 1))) == "OutsideEffectiveCone/0");
}

TEST_CASE("200-ray chamber sweep")
{
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> v(0, 50);
    for (int trial = 0; trial < 200; ++trial) {
        Rational u(v(rng), 1 + v(rng) % 5), w(v(rng), 1 + v(rng) % 5);
        u.canonicalize();
        w.canonicalize();
        if (trial % 8 == 0)
            w = 2 * u;
        if (trial % 8 == 1)
            w = 12 * u;
        if (u == 0 && w == 0)
            u = 1;
        const bool use_coarse = trial % 3 == 0;
        const auto d = use_coarse ? coarse(0, u, w / 2) : stack(0, u, w);
        CHECK(key(m2_chamber(d)) == oracle(u, w));
        CHECK(key(m2_chamber(stack(0, 7 * u, 7 * w))) == oracle(u, w));
    }
}

TEST_CASE("Hassett-Keel slice")
{
    CHECK(hassett_keel_divisor(Rational(9, 11)).to_string() == "13/110*delta0 + 78/55*delta1");
    const auto d = hassett_keel_divisor(Rational(9, 11));
    CHECK(d.boundary1 == 12 * d.boundary0);
    CHECK(hassett_keel_divisor(Rational(7, 10)).boundary0 == 0);
    CHECK(key(m2_chamber(hassett_keel_divisor(Rational(7, 10)))) == "Point/1");
    CHECK(key(m2_chamber(hassett_keel_divisor(Rational(9, 11)))) == "P6QuotientSL2/1");
    CHECK(key(m2_chamber(hassett_keel_divisor(Rational(2)))) == "SatakeA2/1");
    CHECK(key(m2_chamber(hassett_keel_divisor(Rational(1, 2)))) == "OutsideEffectiveCone/0");

    // K + 2 delta is a positive multiple of lambda
    const auto two = hassett_keel_divisor(2);
    const auto lam = stack(1, 0, 0).reduced();
    CHECK(two.boundary0 * lam.boundary1 == two.boundary1 * lam.boundary0);

    for (int k = 1; k <= 300; ++k) {
        const Rational alpha = Rational(7, 10) + q(k, 100);
        const auto r = m2_chamber(hassett_keel_divisor(alpha));
        if (alpha < Rational(9, 11))
            CHECK(key(r) == "P6QuotientSL2/0");
        else if (alpha < 2)
            CHECK(key(r) == "M2CoarseSpace/0");
        else if (alpha == 2)
            CHECK(key(r) == "SatakeA2/1");
        else
            CHECK(key(r) == "SatakeA2/0");
        CHECK(hassett_keel_alpha(hassett_keel_divisor(alpha)) == alpha);
    }
}

TEST_CASE("classes with no alpha")
{
    CHECK_FALSE(hassett_keel_alpha(stack(0, 1, 0)).has_value());
    CHECK_FALSE(hassett_keel_alpha(stack(0, 1, 1)).has_value());
    CHECK_FALSE(hassett_keel_alpha(stack(0, 2, 1)).has_value());
    CHECK_FALSE(hassett_keel_alpha(stack(0, -1, 3)).has_value());
    CHECK(hassett_keel_alpha(stack(1, 0, 0)) == Rational(2));
    CHECK(hassett_keel_alpha(stack(0, 1, 12)) == Rational(9, 11));
    CHECK(hassett_keel_alpha(stack(0, 0, 1)) == Rational(7, 10));
}
