#include "m06/report.hpp"

#include "m06/divisor.hpp"
#include "m06/expr.hpp"
#include "m06/git.hpp"
#include "m06/hypersurface.hpp"
#include "m06/m2.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace m06 {

using Json = nlohmann::ordered_json;

namespace {

std::string render(const Json& j)
{
    return j.dump(2) + "\n";
}

std::string format_double(double v)
{
    std::ostringstream os;
    os << std::setprecision(6) << std::scientific << v;
    return os.str();
}

Json coefficients_json(const SymmetricDivisor& d)
{
    Json j = Json::object();
    for (int i = 2; i <= d.max_index(); ++i)
        j["B" + std::to_string(i)] = to_string(d.coeff(i));
    return j;
}

std::vector<int> parse_int_list(const std::string& csv)
{
    std::vector<int> out;
    std::stringstream ss(csv);
    for (std::string tok; std::getline(ss, tok, ',');) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw UsageError("expected an integer, got '" + tok + "'");
        }
        if (used != tok.size())
            throw UsageError("expected an integer, got '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

struct CurveSpec {
    std::optional<FCurveClass> f;
    std::optional<SpecialCurveCj> c;
    std::string label;
};

CurveSpec parse_curve(const std::string& text, int n)
{
    if (text.size() < 3 || text[1] != ':' || (text[0] != 'F' && text[0] != 'C'))
        throw UsageError("curve must be written F:a,b,c,d or C:j, got '" + text + "'");
    const auto values = parse_int_list(text.substr(2));
    if (text[0] == 'F') {
        if (values.size() != 4)
            throw UsageError("an F-curve needs four block sizes");
        const auto f = FCurveClass::from_parts({values[0], values[1], values[2], values[3]});
        if (f.n() != n)
            throw UsageError("F-curve " + f.to_string() + " does not partition n = " + std::to_string(n));
        return {f, std::nullopt, f.to_string()};
    }
    if (values.size() != 1)
        throw UsageError("a C_j curve needs one index");
    if (values[0] < 2 || values[0] > n - 2)
        throw UsageError("C_j needs 2 <= j <= " + std::to_string(n - 2));
    return {std::nullopt, SpecialCurveCj{values[0]}, "C" + std::to_string(values[0])};
}

} // namespace

CommandOutput run_divisor(const DivisorRequest& req, OutputMode mode)
{
    const SymmetricDivisor d = parse_divisor_expression(req.expr, req.n);
    Json j;
    j["expr"] = req.expr;
    j["n"] = req.n;
    j["divisor"] = d.to_string();
    j["coefficients"] = coefficients_json(d);
    std::ostringstream text;
    text << "divisor: " << d.to_string() << "  (n = " << req.n << ")\n";
    CommandOutput out;

    if (req.action == "eval") {
        if (req.n == 6) {
            const auto [a, b] = to_K_psi(d);
            j["K"] = to_string(a);
            j["psi"] = to_string(b);
            text << "in K, psi basis: " << to_string(a) << "*K " << (b < 0 ? "- " : "+ ") << to_string(abs(b)) << "*psi\n";
        }
        j["effective"] = is_effective_symmetric(d);
        text << "effective: " << (is_effective_symmetric(d) ? "yes" : "no") << "\n";
    } else if (req.action == "intersect") {
        std::vector<std::pair<std::string, Rational>> rows;
        if (req.curve) {
            const CurveSpec cs = parse_curve(*req.curve, req.n);
            rows.emplace_back(cs.label, cs.f ? intersect_f_curve(d, *cs.f) : intersect_cj(d, *cs.c));
        } else {
            for (const auto& f : f_curve_classes(req.n))
                rows.emplace_back(f.to_string(), intersect_f_curve(d, f));
            for (int jj = 2; jj <= req.n - 2; ++jj)
                rows.emplace_back("C" + std::to_string(jj), intersect_cj(d, SpecialCurveCj{jj}));
        }
        Json inter = Json::object();
        for (const auto& [label, value] : rows) {
            inter[label] = to_string(value);
            text << label << " . D = " << to_string(value) << "\n";
        }
        j["intersections"] = inter;
        const FNonnegativity nef = is_F_nonnegative(d);
        j["F_nonnegative"] = nef.nonnegative;
        j["nef"] = nef.characterizes_nef ? Json(nef.nonnegative) : Json("undetermined");
        text << "F-nonnegative: " << (nef.nonnegative ? "yes" : "no");
        if (!nef.characterizes_nef)
            text << " (nefness is decided by F-curves only for n = 6)";
        text << "\n";
    } else if (req.action == "chamber") {
        if (req.n != 6)
            throw UsageError("chamber lookup is available for n = 6 only");
        const ChamberReport r = mori_model(d);
        j["effective"] = is_effective_symmetric(d);
        j["model"] = to_string(r.model);
        j["stableBaseLocus"] = to_string(r.stable_base_locus);
        j["boundaryCase"] = r.boundary_case;
        if (!is_effective_symmetric(d))
            text << "flag: class is not effective\n";
        text << "model: " << to_string(r.model) << "\n"
             << "stable base locus: " << to_string(r.stable_base_locus) << "\n"
             << "on a chamber wall: " << (r.boundary_case ? "yes" : "no") << "\n";
    } else if (req.action == "baselocus") {
        if (req.n != 6)
            throw UsageError("stable base loci are available for n = 6 only");
        j["effective"] = is_effective_symmetric(d);
        if (!is_effective_symmetric(d)) {
            j["stableBaseLocus"] = nullptr;
            text << "flag: class is not effective; stable base locus undefined\n";
            out.exit_code = 1;
        } else {
            const BaseLocus b = stable_base_locus(d);
            j["stableBaseLocus"] = to_string(b);
            text << "stable base locus: " << to_string(b) << "\n";
        }
    } else {
        throw UsageError("unknown divisor action '" + req.action + "'");
    }
    out.body = mode == OutputMode::Json ? render(j) : text.str();
    return out;
}

namespace {

Json witness_json(const StabilityWitness& w)
{
    Json pts = Json::array();
    for (auto i : w.points)
        pts.push_back(i + 1);
    return Json{{"dimension", w.subspace_dimension},
                {"points", pts},
                {"weight", to_string(w.weight)},
                {"kind", w.violation ? "violation" : "equality"}};
}

std::string witness_text(const StabilityWitness& w)
{
    std::ostringstream os;
    os << (w.violation ? "violation" : "equality ") << "  dim W = " << w.subspace_dimension << "  points {";
    for (std::size_t k = 0; k < w.points.size(); ++k)
        os << (k ? "," : "") << w.points[k] + 1;
    os << "}  weight " << to_string(w.weight) << " vs " << w.subspace_dimension + 1;
    return os.str();
}

Json config_json(const PointConfiguration& c)
{
    Json pts = Json::array();
    for (const auto& p : c.points()) {
        Json row = Json::array();
        for (const auto& x : p)
            row.push_back(to_string(x));
        pts.push_back(row);
    }
    return pts;
}

bool is_sextuple(const PointConfiguration& c, const WeightVector& a)
{
    return c.d() == 2 && c.size() == 6 && a.is_symmetric();
}

} // namespace

CommandOutput run_git(const GitRequest& req, OutputMode mode)
{
    const PointConfiguration c = parse_configuration(req.config_text, req.dim);
    const WeightVector a = req.weights ? WeightVector(c.d(), parse_rational_list(*req.weights))
                                       : WeightVector::symmetric(c.d(), c.size());
    if (a.size() != c.size())
        throw UsageError("--weights has " + std::to_string(a.size()) + " entries for " + std::to_string(c.size())
                         + " points");

    Json j;
    j["dim"] = c.d();
    j["points"] = c.size();
    std::ostringstream text;
    CommandOutput out;

    if (req.action == "stability") {
        const StabilityVerdict v = stability_status(c, a);
        j["status"] = to_string(v.status);
        Json ws = Json::array();
        text << "status: " << to_string(v.status) << "\n";
        for (const auto& w : v.witnesses) {
            ws.push_back(witness_json(w));
            text << "  " << witness_text(w) << "\n";
        }
        j["witnesses"] = ws;
        const int stab = stabilizer_dimension(c);
        j["stabilizerDimension"] = stab;
        text << "stabilizer dimension: " << stab << "\n";
        if (is_sextuple(c, a)) {
            const StratumLabel l = match_stratum(stratum_signature(c), v);
            j["stratum"] = to_string(l);
            text << "stratum: " << to_string(l) << "\n";
        }
    } else if (req.action == "stratum") {
        if (c.d() != 2)
            throw UsageError("stratum signatures need points in P^2");
        const StratumSignature sig = stratum_signature(c);
        const StabilityVerdict v = stability_status(c, a);
        Json classes = Json::array();
        text << "coincidence classes:";
        for (const auto& cls : sig.coincidence_classes) {
            Json cj = Json::array();
            text << " {";
            for (std::size_t k = 0; k < cls.size(); ++k) {
                cj.push_back(cls[k] + 1);
                text << (k ? "," : "") << cls[k] + 1;
            }
            text << "}";
            classes.push_back(cj);
        }
        text << "\n";
        Json lines = Json::array();
        for (const auto& l : sig.lines) {
            Json pts = Json::array();
            text << "line through";
            for (auto k : l.classes) {
                Json members = Json::array();
                for (auto idx : sig.coincidence_classes[k])
                    members.push_back(idx + 1);
                pts.push_back(members);
                text << " {";
                for (std::size_t m = 0; m < sig.coincidence_classes[k].size(); ++m)
                    text << (m ? "," : "") << sig.coincidence_classes[k][m] + 1;
                text << "}";
            }
            text << "  (" << l.weighted_count << " points)\n";
            lines.push_back(Json{{"classes", pts}, {"count", l.weighted_count}});
        }
        j["coincidenceClasses"] = classes;
        j["lines"] = lines;
        j["status"] = to_string(v.status);
        const StratumLabel label = is_sextuple(c, a) ? match_stratum(sig, v) : StratumLabel::Unrecognized;
        j["stratum"] = to_string(label);
        j["stabilizerDimension"] = stabilizer_dimension(c);
        text << "status: " << to_string(v.status) << "\n"
             << "stratum: " << to_string(label) << "\n"
             << "stabilizer dimension: " << stabilizer_dimension(c) << "\n";
    } else if (req.action == "limit") {
        if (!req.ops)
            throw UsageError("limit needs --ops w0,w1,...");
        std::vector<long> w;
        for (int x : parse_int_list(*req.ops))
            w.push_back(x);
        const PointConfiguration lim = ops_limit(c, OneParameterSubgroup(w));
        const StabilityVerdict v = stability_status(lim, a);
        j["limit"] = config_json(lim);
        j["limitStatus"] = to_string(v.status);
        text << "# limit configuration\n" << lim.to_text() << "# status: " << to_string(v.status) << "\n";
    } else if (req.action == "degenerate") {
        if (!is_sextuple(c, a))
            throw UsageError("degeneration needs six points in P^2 with symmetric weights");
        const Degeneration deg = polystable_degeneration(c);
        j["start"] = to_string(classify_sextuple(c));
        j["label"] = to_string(deg.label);
        Json steps = Json::array();
        text << "start: " << to_string(classify_sextuple(c)) << "\n";
        for (const auto& s : deg.steps) {
            Json pts = Json::array();
            text << "  adapted to " << s.flag << " {";
            for (std::size_t k = 0; k < s.witness_points.size(); ++k) {
                pts.push_back(s.witness_points[k] + 1);
                text << (k ? "," : "") << s.witness_points[k] + 1;
            }
            text << "} -> " << to_string(s.label_after) << "\n";
            steps.push_back(Json{{"flag", s.flag}, {"points", pts}, {"label", to_string(s.label_after)}});
        }
        j["steps"] = steps;
        j["limit"] = config_json(deg.limit);
        text << "closed orbit: " << to_string(deg.label) << "\n# limit configuration\n" << deg.limit.to_text();
    } else if (req.action == "conic") {
        if (c.d() != 2 || c.size() != 6)
            throw UsageError("the conic test needs six points in P^2");
        const bool on = lies_on_conic(c);
        j["veroneseRank"] = rank(veronese_matrix(c));
        j["liesOnConic"] = on;
        text << "Veronese rank: " << rank(veronese_matrix(c)) << "\n"
             << "lies on a conic: " << (on ? "true" : "false") << "\n";
    } else {
        throw UsageError("unknown git action '" + req.action + "'");
    }
    out.body = mode == OutputMode::Json ? render(j) : text.str();
    return out;
}

namespace {

std::vector<Hypersurface> surfaces_for(const std::optional<std::string>& s)
{
    if (!s)
        return {Hypersurface::SegreCubic, Hypersurface::IgusaQuartic};
    if (*s == "segre")
        return {Hypersurface::SegreCubic};
    if (*s == "igusa")
        return {Hypersurface::IgusaQuartic};
    throw UsageError("--surface must be segre or igusa");
}

Json vector_json(const RationalVector& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_string(x));
    return a;
}

} // namespace

CommandOutput run_hypersurface(const HypersurfaceRequest& req, OutputMode mode)
{
    Json j;
    std::ostringstream text;
    CommandOutput out;

    if (req.action == "eval" || req.action == "singular") {
        if (!req.point)
            throw UsageError(req.action + " needs --point x1,...,x6");
        const P5Point p(parse_rational_list(*req.point));
        j["point"] = vector_json(p.coords());
        text << "point: " << p.to_string() << "\n";
        Json res = Json::object();
        for (Hypersurface h : surfaces_for(req.surface)) {
            const FormValues v = evaluate(h, p);
            Json e{{"linear", to_string(v.linear)}, {"form", to_string(v.degree_form)}};
            text << to_string(h) << ": linear = " << to_string(v.linear) << ", form = " << to_string(v.degree_form);
            if (req.action == "eval") {
                e["gradient"] = vector_json(gradient(h, p));
            } else {
                if (!v.vanishes())
                    throw UsageError(p.to_string() + " does not lie on the " + to_string(h));
                const bool sing = is_singular_point(h, p);
                e["singular"] = sing;
                text << ", singular = " << (sing ? "true" : "false");
            }
            text << "\n";
            res[to_string(h)] = e;
        }
        j["surfaces"] = res;
    } else if (req.action == "lines") {
        const auto lines = pair_partition_lines();
        const LineIncidence inc = line_incidence(lines);
        Json ls = Json::array();
        bool all_three = true;
        for (std::size_t k = 0; k < lines.size(); ++k) {
            Json pts = Json::array();
            for (const auto& p : inc.meeting_points[k])
                pts.push_back(vector_json(p.coords()));
            all_three = all_three && inc.meeting_points[k].size() == 3;
            ls.push_back(Json{{"pairing", lines[k].to_string()}, {"meetingPoints", pts}});
            text << "L" << k + 1 << " " << lines[k].to_string() << " meets the others at";
            for (const auto& p : inc.meeting_points[k])
                text << " " << p.to_string();
            text << "\n";
        }
        bool three_lines = true;
        for (const auto& [p, m] : inc.point_multiplicity)
            three_lines = three_lines && m == 3;
        j["count"] = lines.size();
        j["lines"] = ls;
        j["meetingPointCount"] = inc.point_multiplicity.size();
        j["eachLineMeetsOthersAt3Points"] = all_three;
        j["eachMeetingPointOn3Lines"] = three_lines;
        text << lines.size() << " lines; " << inc.point_multiplicity.size() << " meeting points\n"
             << "each meets others at 3 points: " << (all_three ? "yes" : "no") << "\n"
             << "each meeting point lies on 3 lines: " << (three_lines ? "yes" : "no") << "\n";
        if (!all_three || !three_lines)
            out.exit_code = 1;
    } else if (req.action == "nodes") {
        const auto nodes = segre_nodes();
        Json ns = Json::array();
        bool ok = true;
        for (const auto& p : nodes) {
            const bool on = evaluate(Hypersurface::SegreCubic, p).vanishes();
            const bool sing = on && is_singular_point(Hypersurface::SegreCubic, p);
            ok = ok && on && sing;
            ns.push_back(Json{{"point", vector_json(p.coords())}, {"onSurface", on}, {"singular", sing}});
            text << p.to_string() << "  on S3: " << (on ? "yes" : "no") << "  singular: " << (sing ? "yes" : "no")
                 << "\n";
        }
        j["count"] = nodes.size();
        j["nodes"] = ns;
        text << nodes.size() << " nodes\n";
        if (req.search > 0) {
            const NodeSearchReport s = random_singular_search(req.search, req.seed);
            j["search"] = Json{{"seed", req.seed},
                               {"checked", s.points_checked},
                               {"singular", s.singular_found},
                               {"additional", s.additional_singular}};
            text << "random search (seed " << req.seed << "): " << s.points_checked << " points, "
                 << s.singular_found << " singular, " << s.additional_singular << " not among the nodes\n";
            ok = ok && s.additional_singular == 0;
        }
        if (!ok)
            out.exit_code = 1;
    } else if (req.action == "duality") {
        const DualityReport r = duality_sample_check(req.samples, req.tolerance, req.seed, req.exact_samples);
        j["seed"] = r.seed;
        j["samples"] = r.samples;
        j["exactSamples"] = r.exact_samples;
        j["skipped"] = r.skipped;
        j["maxResidual"] = r.max_residual;
        j["exactResidualZero"] = r.exact_all_zero;
        j["tolerance"] = r.tolerance;
        j["pass"] = r.pass;
        text << "seed: " << r.seed << "\n"
             << "samples: " << r.samples << " floating, " << r.exact_samples << " exact, " << r.skipped
             << " skipped\n"
             << "max residual: " << format_double(r.max_residual) << " (tolerance " << format_double(r.tolerance)
             << ")\n"
             << "exact residuals zero: " << (r.exact_all_zero ? "yes" : "no") << "\n"
             << "pass: " << (r.pass ? "yes" : "no") << "\n";
        if (!r.pass)
            out.exit_code = 1;
    } else {
        throw UsageError("unknown hypersurface action '" + req.action + "'");
    }
    out.body = mode == OutputMode::Json ? render(j) : text.str();
    return out;
}

CommandOutput run_m2(const M2Request& req, OutputMode mode)
{
    const bool stack_flags = req.delta0 || req.delta1;
    const bool coarse_flags = req.Delta0 || req.Delta1;
    const bool class_flags = stack_flags || coarse_flags || req.lambda;
    if (req.alpha && class_flags)
        throw UsageError("--alpha cannot be combined with divisor coefficients");
    if (stack_flags && coarse_flags)
        throw UsageError("mixing stack (--delta0/--delta1) and coarse (--Delta0/--Delta1) coefficients");
    if (!req.alpha && !class_flags)
        throw UsageError("give divisor coefficients or --alpha");

    Json j;
    std::ostringstream text;
    M2Divisor d;
    if (req.alpha) {
        const Rational alpha = parse_rational(*req.alpha);
        d = hassett_keel_divisor(alpha);
        j["alpha"] = to_string(alpha);
        text << "K + " << to_string(alpha) << "*delta\n";
    } else {
        auto get = [](const std::optional<std::string>& s) { return s ? parse_rational(*s) : Rational(0); };
        d.space = coarse_flags ? M2Space::CoarseSpace : M2Space::Stack;
        d.lambda = get(req.lambda);
        d.boundary0 = get(coarse_flags ? req.Delta0 : req.delta0);
        d.boundary1 = get(coarse_flags ? req.Delta1 : req.delta1);
    }
    const M2Divisor r = d.reduced();
    const SymmetricDivisor pb = pullback_to_m06(d);
    const M2ChamberReport ch = m2_chamber(d);
    j["space"] = d.space == M2Space::Stack ? "stack" : "coarse";
    j["class"] = d.to_string();
    j["reduced"] = r.to_string();
    j["pullback"] = pb.to_string();
    j["pullbackCoefficients"] = coefficients_json(pb);
    j["model"] = to_string(ch.model);
    j["boundaryCase"] = ch.boundary_case;
    text << "class: " << d.to_string() << "\n"
         << "reduced: " << r.to_string() << "\n"
         << "pullback: " << pb.to_string() << "\n"
         << "model: " << to_string(ch.model) << "\n"
         << "on a chamber wall: " << (ch.boundary_case ? "yes" : "no") << "\n";
    if (!req.alpha) {
        if (const auto alpha = hassett_keel_alpha(d)) {
            j["hassettKeelAlpha"] = to_string(*alpha);
            text << "proportional to K + alpha*delta with alpha = " << to_string(*alpha) << "\n";
        } else {
            j["hassettKeelAlpha"] = nullptr;
            text << "not proportional to any K + alpha*delta (outside the alpha slice)\n";
        }
    }
    return {mode == OutputMode::Json ? render(j) : text.str(), 0};
}

} // namespace m06
