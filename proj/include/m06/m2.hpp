#pragma once

// Divisor classes on the genus-two moduli stack and its coarse space, their
// pullback to symmetric classes on the six-pointed rational moduli space,
// and the resulting chamber lookup.

#include "m06/divisor.hpp"

#include <optional>

namespace m06 {

enum class M2Space { Stack, CoarseSpace };

/// lambda + b0 * (delta0 | Delta0) + b1 * (delta1 | Delta1).
struct M2Divisor {
    M2Space space = M2Space::Stack;
    Rational lambda = 0;
    Rational boundary0 = 0;
    Rational boundary1 = 0;

    /// Eliminates lambda using lambda = (Delta0 + Delta1) / 10 on the coarse
    /// space, i.e. lambda = (delta0 + 2 delta1) / 10 on the stack.
    M2Divisor reduced() const;
    std::string to_string() const;
};

/// Coarse-space coefficients (Delta0, Delta1) of a reduced class.
std::pair<Rational, Rational> to_coarse_boundary(const M2Divisor& d);

SymmetricDivisor pullback_to_m06(const M2Divisor& d);

enum class M2Model { M2CoarseSpace, P6QuotientSL2, SatakeA2, Point, OutsideEffectiveCone };
const char* to_string(M2Model m);

struct M2ChamberReport {
    M2Model model = M2Model::OutsideEffectiveCone;
    bool boundary_case = false;
};

/// Pulls back and runs the six-point chamber lookup, cross-checked against a
/// direct slope test in the stack boundary basis (throws std::logic_error on
/// disagreement). Non-effective classes give OutsideEffectiveCone.
M2ChamberReport m2_chamber(const M2Divisor& d);

/// K + alpha * delta on the stack with K = 13 lambda - 2 delta, in reduced
/// boundary form (alpha - 7/10) delta0 + (alpha + 3/5) delta1.
M2Divisor hassett_keel_divisor(const Rational& alpha);

/// The alpha with D proportional to K + alpha * delta, if any. Classes in
/// [delta0, delta0 + delta1] and non-effective classes have none.
std::optional<Rational> hassett_keel_alpha(const M2Divisor& d);

} // namespace m06
