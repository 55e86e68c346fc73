#include "m06/m2.hpp"

#include <sstream>
#include <stdexcept>

namespace m06 {

M2Divisor M2Divisor::reduced() const
{
    M2Divisor out = *this;
    out.lambda = 0;
    const Rational tenth(1, 10);
    if (space == M2Space::CoarseSpace) {
        out.boundary0 += lambda * tenth;
        out.boundary1 += lambda * tenth;
    } else {
        out.boundary0 += lambda * tenth;
        out.boundary1 += 2 * lambda * tenth;
    }
    return out;
}

std::string M2Divisor::to_string() const
{
    const bool stack = space == M2Space::Stack;
    const std::pair<const Rational*, const char*> terms[] = {
        {&lambda, "lambda"}, {&boundary0, stack ? "delta0" : "Delta0"}, {&boundary1, stack ? "delta1" : "Delta1"}};
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, name] : terms) {
        if (*c == 0)
            continue;
        if (first)
            os << (*c < 0 ? "-" : "");
        else
            os << (*c < 0 ? " - " : " + ");
        if (abs(*c) != 1)
            os << m06::to_string(Rational(abs(*c))) << "*";
        os << name;
        first = false;
    }
    return first ? "0" : os.str();
}

std::pair<Rational, Rational> to_coarse_boundary(const M2Divisor& d)
{
    const M2Divisor r = d.reduced();
    if (r.space == M2Space::CoarseSpace)
        return {r.boundary0, r.boundary1};
    // q* Delta0 = delta0, q* Delta1 = 2 delta1
    return {r.boundary0, r.boundary1 / 2};
}

SymmetricDivisor pullback_to_m06(const M2Divisor& d)
{
    // pi* Delta0 = 2 B2, pi* Delta1 = B3
    const auto [d0, d1] = to_coarse_boundary(d);
    return SymmetricDivisor(6, {Rational(2 * d0), d1});
}

const char* to_string(M2Model m)
{
    switch (m) {
    case M2Model::M2CoarseSpace: return "M2CoarseSpace";
    case M2Model::P6QuotientSL2: return "P6QuotientSL2";
    case M2Model::SatakeA2: return "SatakeA2";
    case M2Model::Point: return "Point";
    case M2Model::OutsideEffectiveCone: return "OutsideEffectiveCone";
    }
    return "?";
}

namespace {

M2Model relabel(MoriModel m)
{
    switch (m) {
    case MoriModel::AmpleModel_M06: return M2Model::M2CoarseSpace;
    case MoriModel::SegreCubic: return M2Model::P6QuotientSL2;
    case MoriModel::IgusaQuartic: return M2Model::SatakeA2;
    case MoriModel::Point: return M2Model::Point;
    case MoriModel::OutsideEffectiveCone: return M2Model::OutsideEffectiveCone;
    }
    return M2Model::OutsideEffectiveCone;
}

// Chamber from the stack coefficients u delta0 + v delta1 directly:
// walls at v/u = 2 (lambda) and v/u = 12 (delta0 + 12 delta1).
M2ChamberReport direct_chamber(const Rational& u, const Rational& v)
{
    if (u < 0 || v < 0)
        return {M2Model::OutsideEffectiveCone, false};
    if (u == 0 || v == 0)
        return {M2Model::Point, true};
    if (v < 2 * u)
        return {M2Model::SatakeA2, false};
    if (v == 2 * u)
        return {M2Model::SatakeA2, true};
    if (v < 12 * u)
        return {M2Model::M2CoarseSpace, false};
    if (v == 12 * u)
        return {M2Model::P6QuotientSL2, true};
    return {M2Model::P6QuotientSL2, false};
}

} // namespace

M2ChamberReport m2_chamber(const M2Divisor& d)
{
    const ChamberReport r = mori_model(pullback_to_m06(d));
    const M2ChamberReport out{relabel(r.model), r.boundary_case};

    const auto [d0, d1] = to_coarse_boundary(d);
    const M2ChamberReport direct = direct_chamber(d0, 2 * d1);
    if (direct.model != out.model || direct.boundary_case != out.boundary_case)
        throw std::logic_error("pulled-back chamber disagrees with the direct slope test for " + d.to_string());
    return out;
}

M2Divisor hassett_keel_divisor(const Rational& alpha)
{
    M2Divisor k{M2Space::Stack, 13, alpha - 2, alpha - 2};
    return k.reduced();
}

std::optional<Rational> hassett_keel_alpha(const M2Divisor& d)
{
    const auto [d0, d1] = to_coarse_boundary(d);
    const Rational u = d0, v = 2 * d1;
    if (u < 0 || v < 0 || (u == 0 && v == 0))
        return std::nullopt;
    // v (alpha - 7/10) = u (alpha + 3/5)
    if (v <= u)
        return std::nullopt;
    return Rational((Rational(7, 10) * v + Rational(3, 5) * u) / (v - u));
}

} // namespace m06
