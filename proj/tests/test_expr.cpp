#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "m06/expr.hpp"

using namespace m06;

namespace {

SymmetricDivisor b(const Rational& x, const Rational& y)
{
    return SymmetricDivisor(6, {x, y});
}

std::size_t error_position(const char* text, int n = 6)
{
    try {
        parse_divisor_expression(text, n);
    } catch (const ExpressionError& e) {
        return e.position();
    }
    FAIL("expected an ExpressionError for " << text);
    return 0;
}

} // namespace

TEST_CASE("symbols and arithmetic")
{
    CHECK(parse_divisor_expression("B2") == b(1, 0));
    CHECK(parse_divisor_expression("B4") == b(1, 0));
    CHECK(parse_divisor_expression("K") == canonical_divisor(6));
    CHECK(parse_divisor_expression("psi") == psi_divisor(6));
    CHECK(parse_divisor_expression("DA") == b(Rational(1, 5), Rational(1, 10)));
    CHECK(parse_divisor_expression("-9/2*K - 1/2*psi") == b(1, 0));
    CHECK(parse_divisor_expression("4K+psi") == b(0, 1));
    CHECK(parse_divisor_expression("  K + 1/3 * psi ") == b(Rational(2, 15), Rational(2, 5)));
    CHECK(parse_divisor_expression("2(B2 - B3)") == b(2, -2));
    CHECK(parse_divisor_expression("-(K)") == b(Rational(2, 5), Rational(1, 5)));
    CHECK(parse_divisor_expression("--B3") == b(0, 1));
    CHECK(parse_divisor_expression("1/2*3*B2") == b(Rational(3, 2), 0));
    CHECK(parse_divisor_expression("0") == b(0, 0));
    CHECK(parse_divisor_expression("B2 - B2") == b(0, 0));
}

TEST_CASE("other n")
{
    CHECK(parse_divisor_expression("B5", 7) == SymmetricDivisor(7, {1, 0}));
    CHECK(parse_divisor_expression("K", 5) == canonical_divisor(5));
    CHECK_THROWS_AS(parse_divisor_expression("DA", 7), ExpressionError);
    CHECK_THROWS_AS(parse_divisor_expression("B6", 7), ExpressionError);
}

TEST_CASE("errors carry positions")
{
    CHECK(error_position("2 + K") == 2);
    CHECK(error_position("K * psi") == 2);
    CHECK(error_position("K +") == 3);
    CHECK(error_position("B1") == 0);
    CHECK(error_position("(K") == 2);
    CHECK(error_position("K )") == 2);
    CHECK(error_position("3") == 0);
    CHECK(error_position("x") == 0);
    CHECK(error_position("1/0*K") == 0);
    CHECK_THROWS_AS(parse_divisor_expression(""), ExpressionError);
}
