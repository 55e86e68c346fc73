#include "m06/report.hpp"

#include "m06/divisor.hpp"
#include "m06/git.hpp"
#include "m06/hypersurface.hpp"
#include "m06/m2.hpp"

#include <json.hpp>

#include <array>
#include <functional>
#include <iomanip>
#include <sstream>

namespace m06 {

using Json = nlohmann::ordered_json;

bool PaperReport::pass() const
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

namespace {

class Recorder {
public:
    explicit Recorder(PaperReport& r) : report_(r) {}

    void section(std::string name) { section_ = std::move(name); }

    void check(std::string name, std::string expected, std::string computed)
    {
        const bool ok = expected == computed;
        report_.checks.push_back({section_, std::move(name), std::move(expected), std::move(computed), ok});
    }

    void check(std::string name, const Rational& expected, const Rational& computed)
    {
        check(std::move(name), to_string(expected), to_string(computed));
    }

    void check_flag(std::string name, bool computed) { check(std::move(name), "true", computed ? "true" : "false"); }

private:
    PaperReport& report_;
    std::string section_;
};

std::string k_psi_string(const std::pair<Rational, Rational>& ab)
{
    const auto& [a, bb] = ab;
    return to_string(a) + "*K " + (bb < 0 ? "- " : "+ ") + to_string(abs(bb)) + "*psi";
}

SymmetricDivisor b(const Rational& x, const Rational& y)
{
    return SymmetricDivisor(6, {x, y});
}

std::string chamber_string(const ChamberReport& r)
{
    return std::string(to_string(r.model)) + ", " + to_string(r.stable_base_locus)
           + (r.boundary_case ? ", wall" : "");
}

std::string m2_string(const M2ChamberReport& r)
{
    return std::string(to_string(r.model)) + (r.boundary_case ? ", wall" : "");
}

std::string sci(double v)
{
    std::ostringstream os;
    os << std::setprecision(3) << std::scientific << v;
    return os.str();
}

void divisor_sections(Recorder& rec)
{
    const auto K = canonical_divisor(6);
    const auto psi = psi_divisor(6);
    const auto B2 = SymmetricDivisor::boundary(6, 2);
    const auto B3 = SymmetricDivisor::boundary(6, 3);

    rec.section("canonical-psi-relations");
    rec.check("K", "-2/5*B2 - 1/5*B3", K.to_string());
    rec.check("psi", "8/5*B2 + 9/5*B3", psi.to_string());
    rec.check("B2 in (K, psi)", "-9/2*K - 1/2*psi", k_psi_string(to_K_psi(B2)));
    rec.check("B3 in (K, psi)", "4*K + 1*psi", k_psi_string(to_K_psi(B3)));

    rec.section("intersection-table");
    struct Row {
        std::string name;
        std::function<Rational(const SymmetricDivisor&)> dot;
        std::array<int, 4> expected;
    };
    const std::vector<Row> rows = {
        {"F1,1,1,3", [](const SymmetricDivisor& d) { return intersect_f_curve(d, FCurveClass::from_parts({1, 1, 1, 3})); },
         {3, -1, 3, -1}},
        {"F1,1,2,2", [](const SymmetricDivisor& d) { return intersect_f_curve(d, FCurveClass::from_parts({1, 1, 2, 2})); },
         {2, 0, -1, 2}},
        {"C4", [](const SymmetricDivisor& d) { return intersect_cj(d, SpecialCurveCj{4}); }, {4, 0, -2, 4}},
    };
    const std::array<std::pair<const char*, SymmetricDivisor>, 4> cols = {
        {{"psi", psi}, {"K", K}, {"B2", B2}, {"B3", B3}}};
    for (const auto& row : rows)
        for (std::size_t c = 0; c < 4; ++c)
            rec.check(row.name + " . " + cols[c].first, Rational(row.expected[c]), row.dot(cols[c].second));

    rec.section("canonical-polarization");
    const auto DA = canonical_polarization_DA();
    rec.check("F1,1,1,3 . DA", Rational(1, 2), intersect_f_curve(DA, FCurveClass::from_parts({1, 1, 1, 3})));
    rec.check("F1,1,2,2 . DA", Rational(0), intersect_f_curve(DA, FCurveClass::from_parts({1, 1, 2, 2})));
    rec.check("DA = -1/2 K", (Rational(-1, 2) * K).to_string(), DA.to_string());

    rec.section("stable-base-loci");
    rec.check("slope 1/4 (4B2 + B3)", "B2", to_string(stable_base_locus(b(4, 1))));
    rec.check("-K", "Empty", to_string(stable_base_locus(-K)));
    rec.check("slope 1 (B2 + B3)", "Empty", to_string(stable_base_locus(b(1, 1))));
    rec.check("K + 1/3 psi", "Empty", to_string(stable_base_locus(K + Rational(1, 3) * psi)));
    rec.check("slope 4 (B2 + 4B3)", "B3", to_string(stable_base_locus(b(1, 4))));

    rec.section("chambers");
    rec.check("B2", "Point, B2, wall", chamber_string(mori_model(B2)));
    rec.check("-K", "IgusaQuartic, Empty, wall", chamber_string(mori_model(-K)));
    rec.check("K + 1/3 psi", "SegreCubic, Empty, wall", chamber_string(mori_model(K + Rational(1, 3) * psi)));
    rec.check("B3", "Point, B3, wall", chamber_string(mori_model(B3)));
    rec.check("slope 1/4", "IgusaQuartic, B2", chamber_string(mori_model(b(4, 1))));
    rec.check("slope 1", "AmpleModel_M06, Empty", chamber_string(mori_model(b(1, 1))));
    rec.check("slope 4", "SegreCubic, B3", chamber_string(mori_model(b(1, 4))));

    rec.section("nef-cone");
    rec.check_flag("-K is F-nonnegative", is_F_nonnegative(-K).nonnegative);
    rec.check_flag("K + 1/3 psi is F-nonnegative", is_F_nonnegative(K + Rational(1, 3) * psi).nonnegative);
    rec.check_flag("slope 1/2 - 1/100 is not F-nonnegative", !is_F_nonnegative(b(100, 49)).nonnegative);
    rec.check_flag("slope 3 + 1/100 is not F-nonnegative", !is_F_nonnegative(b(100, 301)).nonnegative);
}

void git_section(Recorder& rec)
{
    rec.section("semistable-strata");
    for (const auto& rep : stratum_representatives()) {
        const std::string l = to_string(rep.label);
        const auto verdict = stability_status(rep.config, WeightVector::symmetric(2, 6));
        rec.check(l + " status", "StrictlySemistable", to_string(verdict.status));
        rec.check(l + " stratum", l, to_string(match_stratum(stratum_signature(rep.config), verdict)));
        rec.check(l + " stabilizer dimension", std::to_string(rep.stabilizer_dimension),
                  std::to_string(stabilizer_dimension(rep.config)));
        rec.check(l + " orbit closure", to_string(rep.orbit_closure),
                  to_string(polystable_degeneration(rep.config).label));
    }
}

void hypersurface_sections(Recorder& rec, std::uint64_t seed)
{
    rec.section("igusa-singular-lines");
    const auto lines = pair_partition_lines();
    rec.check("line count", "15", std::to_string(lines.size()));
    const std::array<std::pair<int, int>, 5> params = {{{1, 1}, {1, 2}, {2, -3}, {5, -1}, {-4, 7}}};
    int on = 0, singular = 0;
    for (const auto& line : lines)
        for (const auto& [a, bb] : params) {
            const P5Point p = line.point(a, bb);
            if (evaluate(Hypersurface::IgusaQuartic, p).vanishes()) {
                ++on;
                singular += is_singular_point(Hypersurface::IgusaQuartic, p) ? 1 : 0;
            }
        }
    rec.check("sampled points on I4", "75", std::to_string(on));
    rec.check("sampled points singular", "75", std::to_string(singular));
    const LineIncidence inc = line_incidence(lines);
    int lines_with_three = 0;
    for (const auto& m : inc.meeting_points)
        lines_with_three += m.size() == 3 ? 1 : 0;
    int points_on_three = 0;
    for (const auto& [p, m] : inc.point_multiplicity)
        points_on_three += m == 3 ? 1 : 0;
    rec.check("lines meeting the others at 3 points", "15", std::to_string(lines_with_three));
    rec.check("meeting points", "15", std::to_string(inc.point_multiplicity.size()));
    rec.check("meeting points on 3 lines", "15", std::to_string(points_on_three));

    rec.section("segre-nodes");
    const auto nodes = segre_nodes();
    rec.check("node count", "10", std::to_string(nodes.size()));
    int good = 0;
    for (const auto& p : nodes)
        good += evaluate(Hypersurface::SegreCubic, p).vanishes() && is_singular_point(Hypersurface::SegreCubic, p);
    rec.check("nodes on S3 and singular", "10", std::to_string(good));
    const NodeSearchReport s = random_singular_search(10000, seed);
    rec.check("random search points", "10000", std::to_string(s.points_checked));
    rec.check("additional singular points", "0", std::to_string(s.additional_singular));

    rec.section("gauss-map-duality");
    const DualityReport d = duality_sample_check(100, 1e-9, seed, 20);
    rec.check("floating samples", "100", std::to_string(d.samples));
    rec.check("exact samples (at least 20)", "true", d.exact_samples >= 20 ? "true" : std::to_string(d.exact_samples));
    rec.check("max residual within 1e-9", "true", d.max_residual <= 1e-9 ? "true" : sci(d.max_residual));
    rec.check_flag("exact residuals zero", d.exact_all_zero);
}

void m2_sections(Recorder& rec)
{
    const auto K = canonical_divisor(6);
    const auto psi = psi_divisor(6);
    const auto stack = [](Rational l, Rational d0, Rational d1) { return M2Divisor{M2Space::Stack, l, d0, d1}; };
    const auto coarse = [](Rational l, Rational d0, Rational d1) { return M2Divisor{M2Space::CoarseSpace, l, d0, d1}; };

    rec.section("genus-two-bridge");
    rec.check("pullback lambda", "1/5*B2 + 1/10*B3", pullback_to_m06(stack(1, 0, 0)).to_string());
    rec.check("pullback lambda = -1/2 K", (Rational(-1, 2) * K).to_string(), pullback_to_m06(stack(1, 0, 0)).to_string());
    rec.check("pullback Delta0 + 6 Delta1", "2*B2 + 6*B3", pullback_to_m06(coarse(0, 1, 6)).to_string());
    rec.check("pullback Delta0 + 6 Delta1 = 15(K + 1/3 psi)", (Rational(15) * (K + Rational(1, 3) * psi)).to_string(),
              pullback_to_m06(coarse(0, 1, 6)).to_string());
    rec.check("pullback delta0 + 12 delta1", "2*B2 + 6*B3", pullback_to_m06(stack(0, 1, 12)).to_string());
    rec.check("lambda", "SatakeA2, wall", m2_string(m2_chamber(stack(1, 0, 0))));
    rec.check("delta0 + 12 delta1", "P6QuotientSL2, wall", m2_string(m2_chamber(stack(0, 1, 12))));
    rec.check("delta0", "Point, wall", m2_string(m2_chamber(stack(0, 1, 0))));
    rec.check("delta1", "Point, wall", m2_string(m2_chamber(stack(0, 0, 1))));
    rec.check("delta0 + 5 delta1", "M2CoarseSpace", m2_string(m2_chamber(stack(0, 1, 5))));
    rec.check("delta0 + 20 delta1", "P6QuotientSL2", m2_string(m2_chamber(stack(0, 1, 20))));
    rec.check("delta0 + delta1", "SatakeA2", m2_string(m2_chamber(stack(0, 1, 1))));

    rec.section("hassett-keel");
    const auto hk = [](const Rational& a) { return m2_string(m2_chamber(hassett_keel_divisor(a))); };
    rec.check("alpha = 7/10", "Point, wall", hk(Rational(7, 10)));
    rec.check("alpha = 4/5", "P6QuotientSL2", hk(Rational(4, 5)));
    rec.check("alpha = 9/11", "P6QuotientSL2, wall", hk(Rational(9, 11)));
    rec.check("alpha = 1", "M2CoarseSpace", hk(Rational(1)));
    rec.check("alpha = 2", "SatakeA2, wall", hk(Rational(2)));
    rec.check("alpha = 3", "SatakeA2", hk(Rational(3)));
    rec.check("alpha = 9/11 class", "13/110*delta0 + 78/55*delta1",
              hassett_keel_divisor(Rational(9, 11)).to_string());
}

} // namespace

PaperReport build_paper_report(std::uint64_t seed)
{
    PaperReport report;
    report.seed = seed;
    Recorder rec(report);
    divisor_sections(rec);
    git_section(rec);
    hypersurface_sections(rec, seed);
    m2_sections(rec);
    return report;
}

CommandOutput run_paper_report(std::uint64_t seed, OutputMode mode)
{
    const PaperReport r = build_paper_report(seed);
    CommandOutput out;
    out.exit_code = r.pass() ? 0 : 1;

    if (mode == OutputMode::Json) {
        Json j;
        j["seed"] = r.seed;
        j["pass"] = r.pass();
        Json sections = Json::array();
        for (const auto& c : r.checks) {
            if (sections.empty() || sections.back()["name"] != c.section)
                sections.push_back(Json{{"name", c.section}, {"pass", true}, {"checks", Json::array()}});
            auto& s = sections.back();
            s["checks"].push_back(
                Json{{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
            if (!c.pass)
                s["pass"] = false;
        }
        j["sections"] = sections;
        out.body = j.dump(2) + "\n";
        return out;
    }

    std::ostringstream os;
    os << "seed: " << r.seed << "\n";
    std::string current;
    int failed = 0;
    for (const auto& c : r.checks) {
        if (c.section != current) {
            current = c.section;
            os << "\n== " << current << "\n";
        }
        os << (c.pass ? "  PASS  " : "  FAIL  ") << c.name << ": expected " << c.expected;
        if (!c.pass)
            os << ", computed " << c.computed;
        os << "\n";
        failed += c.pass ? 0 : 1;
    }
    os << "\n" << r.checks.size() - failed << "/" << r.checks.size() << " checks passed\n";
    out.body = os.str();
    return out;
}

} // namespace m06
