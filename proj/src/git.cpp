#include "m06/git.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace m06 {

PointConfiguration::PointConfiguration(int d, std::vector<RationalVector> points)
    : d_(d)
{
    if (d < 1)
        throw std::invalid_argument("ambient dimension must be at least 1");
    points_.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != static_cast<std::size_t>(d + 1))
            throw std::invalid_argument("point " + std::to_string(i + 1) + " has " + std::to_string(points[i].size())
                                        + " coordinates, expected " + std::to_string(d + 1));
        if (is_zero(points[i]))
            throw std::invalid_argument("point " + std::to_string(i + 1) + " is the zero vector");
        points_.push_back(primitive_integer_vector(points[i]));
    }
}

PointConfiguration PointConfiguration::transformed(const RationalMatrix& g) const
{
    std::vector<RationalVector> out;
    out.reserve(points_.size());
    for (const auto& p : points_)
        out.push_back(g * p);
    return PointConfiguration(d_, std::move(out));
}

std::string PointConfiguration::to_text() const
{
    std::ostringstream os;
    for (const auto& p : points_) {
        for (std::size_t k = 0; k < p.size(); ++k)
            os << (k ? " " : "") << to_string(p[k]);
        os << "\n";
    }
    return os.str();
}

ConfigParseError::ConfigParseError(const std::string& what, int line)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
{
}

PointConfiguration parse_configuration(std::string_view text, std::optional<int> expected_d)
{
    std::vector<RationalVector> points;
    std::size_t width = 0;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? text.npos : nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::istringstream tokens{std::string(line)};
        RationalVector p;
        for (std::string tok; tokens >> tok;) {
            try {
                p.push_back(parse_rational(tok));
            } catch (const std::invalid_argument& e) {
                throw ConfigParseError(e.what(), line_no);
            }
        }
        if (p.empty())
            continue;
        if (width == 0)
            width = p.size();
        if (p.size() != width)
            throw ConfigParseError("expected " + std::to_string(width) + " coordinates, got " + std::to_string(p.size()),
                                   line_no);
        if (expected_d && p.size() != static_cast<std::size_t>(*expected_d + 1))
            throw ConfigParseError("dimension mismatch: --dim " + std::to_string(*expected_d) + " needs "
                                       + std::to_string(*expected_d + 1) + " coordinates per point",
                                   line_no);
        if (is_zero(p))
            throw ConfigParseError("zero vector is not a projective point", line_no);
        points.push_back(std::move(p));
    }
    if (points.empty())
        throw ConfigParseError("configuration contains no points", line_no);
    if (width < 2)
        throw ConfigParseError("points need at least two homogeneous coordinates", 1);
    return PointConfiguration(static_cast<int>(width) - 1, std::move(points));
}

WeightVector::WeightVector(int d, RationalVector weights)
    : d_(d), weights_(std::move(weights))
{
    Rational total = 0;
    for (const auto& a : weights_) {
        if (a <= 0 || a > 1)
            throw std::invalid_argument("weight " + to_string(a) + " outside (0, 1]");
        total += a;
    }
    if (total != d + 1)
        throw std::invalid_argument("weights sum to " + to_string(total) + ", expected " + std::to_string(d + 1)
                                    + " for the hypersimplex");
}

WeightVector WeightVector::symmetric(int d, std::size_t n)
{
    Rational a(d + 1, static_cast<long>(n));
    a.canonicalize();
    return WeightVector(d, RationalVector(n, a));
}

bool WeightVector::is_symmetric() const
{
    return std::adjacent_find(weights_.begin(), weights_.end(), std::not_equal_to<>()) == weights_.end();
}

const char* to_string(Stability s)
{
    switch (s) {
    case Stability::Stable: return "Stable";
    case Stability::StrictlySemistable: return "StrictlySemistable";
    case Stability::Unstable: return "Unstable";
    }
    return "?";
}

namespace {

constexpr std::size_t max_enumerated_points = 20;

std::vector<RationalVector> select(const PointConfiguration& c, unsigned long mask)
{
    std::vector<RationalVector> rows;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (mask >> i & 1UL)
            rows.push_back(c[i]);
    return rows;
}

std::vector<std::size_t> indices(unsigned long mask, std::size_t n)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1UL)
            out.push_back(i);
    return out;
}

} // namespace

StabilityVerdict stability_status(const PointConfiguration& c, const WeightVector& a)
{
    if (a.size() != c.size())
        throw std::invalid_argument("weight vector has " + std::to_string(a.size()) + " entries for "
                                    + std::to_string(c.size()) + " points");
    if (a.d() != c.d())
        throw std::invalid_argument("weights are normalized for P^" + std::to_string(a.d())
                                    + " but the configuration lives in P^" + std::to_string(c.d()));
    const std::size_t n = c.size();
    if (n > max_enumerated_points)
        throw std::invalid_argument("subset enumeration is limited to 20 points");

    // A tight or violating subspace can be shrunk to the span of the points
    // it contains, so spans of point subsets are enough.
    std::set<unsigned long> seen;
    StabilityVerdict verdict;
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        const auto rows = select(c, mask);
        const std::size_t r = rank(RationalMatrix::from_rows(rows));
        const int dim = static_cast<int>(r) - 1;
        if (dim > c.d() - 1)
            continue;
        unsigned long contained = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask >> j & 1UL) {
                contained |= 1UL << j;
                continue;
            }
            auto extended = rows;
            extended.push_back(c[j]);
            if (rank(RationalMatrix::from_rows(extended)) == r)
                contained |= 1UL << j;
        }
        if (!seen.insert(contained).second)
            continue;
        Rational weight = 0;
        for (auto j : indices(contained, n))
            weight += a.weights()[j];
        const int bound = dim + 1;
        if (weight > bound)
            verdict.witnesses.push_back({dim, indices(contained, n), weight, true});
        else if (weight == bound)
            verdict.witnesses.push_back({dim, indices(contained, n), weight, false});
    }
    std::sort(verdict.witnesses.begin(), verdict.witnesses.end(), [](const auto& x, const auto& y) {
        if (x.subspace_dimension != y.subspace_dimension)
            return x.subspace_dimension < y.subspace_dimension;
        return x.points < y.points;
    });
    const bool violated = std::any_of(verdict.witnesses.begin(), verdict.witnesses.end(),
                                      [](const auto& w) { return w.violation; });
    if (violated)
        verdict.status = Stability::Unstable;
    else if (!verdict.witnesses.empty())
        verdict.status = Stability::StrictlySemistable;
    return verdict;
}

bool is_strictly_semistable_pattern(const PointConfiguration& c)
{
    if (c.d() != 2 || c.size() != 6)
        return false;
    const auto verdict = stability_status(c, WeightVector::symmetric(2, 6));
    if (verdict.status != Stability::StrictlySemistable)
        return false;
    return std::all_of(verdict.witnesses.begin(), verdict.witnesses.end(), [](const auto& w) {
        return (w.subspace_dimension == 0 && w.points.size() == 2) || (w.subspace_dimension == 1 && w.points.size() == 4);
    });
}

int stabilizer_dimension(const PointConfiguration& c)
{
    // Unknowns are the entries of M (row-major). M x ^ x = 0 gives
    // (Mx)_a x_b - (Mx)_b x_a = 0 for a < b; plus trace(M) = 0.
    const std::size_t m = static_cast<std::size_t>(c.d() + 1);
    std::vector<RationalVector> rows;
    for (const auto& x : c.points())
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b) {
                RationalVector row(m * m);
                for (std::size_t k = 0; k < m; ++k) {
                    row[a * m + k] += x[k] * x[b];
                    row[b * m + k] -= x[k] * x[a];
                }
                rows.push_back(std::move(row));
            }
    RationalVector trace(m * m);
    for (std::size_t a = 0; a < m; ++a)
        trace[a * m + a] = 1;
    rows.push_back(std::move(trace));
    return static_cast<int>(m * m - rank(RationalMatrix::from_rows(rows)));
}

StratumSignature stratum_signature(const PointConfiguration& c)
{
    if (c.d() != 2)
        throw std::invalid_argument("stratum signatures are defined for configurations in P^2");
    StratumSignature sig;
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto it = std::find_if(sig.coincidence_classes.begin(), sig.coincidence_classes.end(),
                               [&](const auto& cls) { return c[cls.front()] == c[i]; });
        if (it == sig.coincidence_classes.end())
            sig.coincidence_classes.push_back({i});
        else
            it->push_back(i);
    }

    const auto& classes = sig.coincidence_classes;
    std::set<std::vector<std::size_t>> found;
    for (std::size_t s = 0; s < classes.size(); ++s)
        for (std::size_t t = s + 1; t < classes.size(); ++t) {
            std::vector<std::size_t> on_line;
            for (std::size_t u = 0; u < classes.size(); ++u) {
                const RationalVector rows[] = {c[classes[s].front()], c[classes[t].front()], c[classes[u].front()]};
                if (rank(RationalMatrix::from_rows(rows)) == 2)
                    on_line.push_back(u);
            }
            if (on_line.size() < 3 || !found.insert(on_line).second)
                continue;
            int count = 0;
            for (auto u : on_line)
                count += static_cast<int>(classes[u].size());
            sig.lines.push_back({on_line, count});
        }
    return sig;
}

const char* to_string(StratumLabel l)
{
    switch (l) {
    case StratumLabel::I: return "I";
    case StratumLabel::II: return "II";
    case StratumLabel::III: return "III";
    case StratumLabel::IV: return "IV";
    case StratumLabel::V: return "V";
    case StratumLabel::VI: return "VI";
    case StratumLabel::VII: return "VII";
    case StratumLabel::VIII: return "VIII";
    case StratumLabel::IX: return "IX";
    case StratumLabel::X: return "X";
    case StratumLabel::XI: return "XI";
    case StratumLabel::Stable: return "Stable";
    case StratumLabel::Unstable: return "Unstable";
    case StratumLabel::Unrecognized: return "Unrecognized";
    }
    return "?";
}

namespace {

bool contains(const std::vector<std::size_t>& v, std::size_t x)
{
    return std::find(v.begin(), v.end(), x) != v.end();
}

} // namespace

// Templates, keyed by the number of doubled points and the incidence of
// lines with doubled points and singletons:
//   three doubled                                   I
//   two doubled, both singles on a line with one     II, otherwise III
//   one doubled P:
//     two lines through P with two singles each      IV
//     one such line, three singles collinear         V
//     one such line, no three singles collinear      VI
//     no such line, four singles collinear           VII
//     no such line, three singles collinear          VIII
//     no such line, general                          IX
//   no doubled; four on a line L, two points off L:
//     the line through the off points meets L in a marked point   X
//     otherwise                                                   XI
StratumLabel match_stratum(const StratumSignature& sig, const StabilityVerdict& verdict)
{
    if (verdict.status == Stability::Stable)
        return StratumLabel::Stable;
    if (verdict.status == Stability::Unstable)
        return StratumLabel::Unstable;

    const auto& classes = sig.coincidence_classes;
    std::size_t total = 0;
    std::vector<std::size_t> doubled, singles;
    for (std::size_t k = 0; k < classes.size(); ++k) {
        total += classes[k].size();
        if (classes[k].size() == 2)
            doubled.push_back(k);
        else if (classes[k].size() == 1)
            singles.push_back(k);
        else
            return StratumLabel::Unrecognized;
    }
    if (total != 6)
        return StratumLabel::Unrecognized;

    auto count_lines = [&](auto pred) {
        return std::count_if(sig.lines.begin(), sig.lines.end(), pred);
    };

    switch (doubled.size()) {
    case 3:
        return StratumLabel::I;
    case 2: {
        const auto with_both_singles = count_lines([&](const CollinearSupport& l) {
            return contains(l.classes, singles[0]) && contains(l.classes, singles[1])
                   && (contains(l.classes, doubled[0]) || contains(l.classes, doubled[1]));
        });
        return with_both_singles > 0 ? StratumLabel::II : StratumLabel::III;
    }
    case 1: {
        const std::size_t p = doubled[0];
        const auto through_p = count_lines([&](const CollinearSupport& l) {
            return contains(l.classes, p) && l.weighted_count == 4;
        });
        auto singles_only = [&](int k) {
            return count_lines([&](const CollinearSupport& l) {
                       return !contains(l.classes, p) && l.weighted_count == k;
                   }) > 0;
        };
        if (through_p == 2)
            return StratumLabel::IV;
        if (through_p == 1)
            return singles_only(3) ? StratumLabel::V : StratumLabel::VI;
        if (through_p == 0) {
            if (singles_only(4))
                return StratumLabel::VII;
            return singles_only(3) ? StratumLabel::VIII : StratumLabel::IX;
        }
        return StratumLabel::Unrecognized;
    }
    case 0: {
        const auto four = std::find_if(sig.lines.begin(), sig.lines.end(),
                                       [](const CollinearSupport& l) { return l.weighted_count == 4; });
        if (four == sig.lines.end())
            return StratumLabel::Unrecognized;
        std::vector<std::size_t> off;
        for (auto s : singles)
            if (!contains(four->classes, s))
                off.push_back(s);
        if (off.size() != 2)
            return StratumLabel::Unrecognized;
        const auto through_marked = count_lines([&](const CollinearSupport& l) {
            return contains(l.classes, off[0]) && contains(l.classes, off[1]);
        });
        return through_marked > 0 ? StratumLabel::X : StratumLabel::XI;
    }
    default:
        return StratumLabel::Unrecognized;
    }
}

StratumLabel classify_sextuple(const PointConfiguration& c)
{
    if (c.d() != 2 || c.size() != 6)
        return StratumLabel::Unrecognized;
    return match_stratum(stratum_signature(c), stability_status(c, WeightVector::symmetric(2, 6)));
}

OneParameterSubgroup::OneParameterSubgroup(std::vector<long> weights)
    : weights_(std::move(weights))
{
    if (weights_.empty() || std::adjacent_find(weights_.begin(), weights_.end(), std::not_equal_to<>()) == weights_.end())
        throw std::invalid_argument("a one-parameter subgroup with all weights equal acts trivially");
}

PointConfiguration ops_limit(const PointConfiguration& c, const OneParameterSubgroup& lambda)
{
    const auto& w = lambda.weights();
    if (w.size() != static_cast<std::size_t>(c.d() + 1))
        throw std::invalid_argument("one-parameter subgroup has " + std::to_string(w.size()) + " weights for P^"
                                    + std::to_string(c.d()));
    std::vector<RationalVector> out;
    for (const auto& x : c.points()) {
        long lowest = 0;
        bool any = false;
        for (std::size_t k = 0; k < x.size(); ++k)
            if (x[k] != 0 && (!any || w[k] < lowest)) {
                lowest = w[k];
                any = true;
            }
        RationalVector y(x.size());
        for (std::size_t k = 0; k < x.size(); ++k)
            if (x[k] != 0 && w[k] == lowest)
                y[k] = x[k];
        out.push_back(std::move(y));
    }
    return PointConfiguration(c.d(), std::move(out));
}

namespace {

RationalVector unit(std::size_t k)
{
    RationalVector e(3);
    e[k] = 1;
    return e;
}

RationalMatrix from_columns(const RationalVector& a, const RationalVector& b, const RationalVector& c)
{
    RationalMatrix m(3, 3);
    for (std::size_t r = 0; r < 3; ++r) {
        m(r, 0) = a[r];
        m(r, 1) = b[r];
        m(r, 2) = c[r];
    }
    return m;
}

// Limit under the 1-PS adapted to a tight subspace. In a basis whose first
// vector is the doubled point, weights (2,-1,-1) project every other point
// from it onto a complementary line. In a basis whose first two vectors span
// a four-point line, weights (1,1,-2) send every point off the line to a
// complementary point. Both have Hilbert-Mumford weight zero for symmetric
// linearizations, so the limit stays semistable.
PointConfiguration adapted_limit(const PointConfiguration& c, const StabilityWitness& w)
{
    RationalMatrix basis;
    std::vector<long> weights;
    if (w.subspace_dimension == 0) {
        const RationalVector& p = c[w.points.front()];
        const std::size_t j = static_cast<std::size_t>(
            std::find_if(p.begin(), p.end(), [](const Rational& x) { return x != 0; }) - p.begin());
        std::vector<std::size_t> rest;
        for (std::size_t k = 0; k < 3; ++k)
            if (k != j)
                rest.push_back(k);
        basis = from_columns(p, unit(rest[0]), unit(rest[1]));
        weights = {2, -1, -1};
    } else {
        const RationalVector& u = c[w.points.front()];
        const auto other = std::find_if(w.points.begin(), w.points.end(), [&](std::size_t i) { return c[i] != u; });
        const RationalVector& v = c[*other];
        for (std::size_t k = 0; k < 3; ++k) {
            basis = from_columns(u, v, unit(k));
            if (determinant(basis) != 0)
                break;
        }
        weights = {1, 1, -2};
    }
    const PointConfiguration local = c.transformed(inverse(basis));
    return ops_limit(local, OneParameterSubgroup(weights)).transformed(basis);
}

} // namespace

Degeneration polystable_degeneration(const PointConfiguration& c)
{
    if (c.d() != 2 || c.size() != 6)
        throw std::invalid_argument("degeneration is implemented for six points in P^2");
    const WeightVector sym = WeightVector::symmetric(2, 6);
    StabilityVerdict verdict = stability_status(c, sym);
    if (verdict.status != Stability::StrictlySemistable)
        throw std::domain_error(std::string("configuration is ") + to_string(verdict.status)
                                + ", not strictly semistable");

    Degeneration out{c, match_stratum(stratum_signature(c), verdict), {}};
    constexpr int max_steps = 12;
    for (int step = 0; step < max_steps; ++step) {
        if (out.label == StratumLabel::I || out.label == StratumLabel::VII)
            break;
        // Point witnesses come first (the sort puts dimension 0 first), then
        // lines, each by lowest point index.
        bool advanced = false;
        for (const auto& w : verdict.witnesses) {
            PointConfiguration limit = adapted_limit(out.limit, w);
            if (limit == out.limit)
                continue;
            StabilityVerdict lv = stability_status(limit, sym);
            if (lv.status != Stability::StrictlySemistable)
                continue;
            const StratumLabel ll = match_stratum(stratum_signature(limit), lv);
            if (ll == out.label)
                continue;
            out.steps.push_back({w.subspace_dimension == 0 ? "point" : "line", w.points, ll});
            out.limit = std::move(limit);
            out.label = ll;
            verdict = std::move(lv);
            advanced = true;
            break;
        }
        if (!advanced)
            break;
    }
    return out;
}

RationalMatrix veronese_matrix(const PointConfiguration& c)
{
    if (c.d() != 2)
        throw std::invalid_argument("the conic test needs points in P^2");
    RationalMatrix m(c.size(), 6);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& p = c[i];
        m(i, 0) = p[0] * p[0];
        m(i, 1) = p[0] * p[1];
        m(i, 2) = p[0] * p[2];
        m(i, 3) = p[1] * p[1];
        m(i, 4) = p[1] * p[2];
        m(i, 5) = p[2] * p[2];
    }
    return m;
}

bool lies_on_conic(const PointConfiguration& c)
{
    if (c.d() != 2 || c.size() != 6)
        throw std::invalid_argument("the conic test needs six points in P^2");
    return rank(veronese_matrix(c)) <= 5;
}

namespace {

PointConfiguration plane(std::initializer_list<std::array<int, 3>> pts)
{
    std::vector<RationalVector> v;
    for (const auto& p : pts)
        v.push_back({p[0], p[1], p[2]});
    return PointConfiguration(2, std::move(v));
}

} // namespace

const std::vector<StratumRepresentative>& stratum_representatives()
{
    using L = StratumLabel;
    // P is the doubled vertex; Q, R the other two triangle vertices.
    static const std::vector<StratumRepresentative> reps = {
        {L::I, plane({{1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 1}}), 2, L::I, 6},
        // P, R doubled; Q and a fourth point on PQ
        {L::II, plane({{1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}}), 1, L::I, 7},
        {L::III, plane({{1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}), 0, L::I, 8},
        // one extra point on each of PQ, PR
        {L::IV, plane({{1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}}), 0, L::I, 8},
        // extra point on PQ and one on QR
        {L::V, plane({{1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {0, 1, 1}}), 0, L::I, 9},
        {L::VI, plane({{1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 2, 3}}), 0, L::I, 9},
        // four points on the line z = 0 opposite the doubled point
        {L::VII, plane({{0, 0, 1}, {0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 2, 0}}), 1, L::VII, 8},
        {L::VIII, plane({{0, 0, 1}, {0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 2, 1}}), 0, L::VII, 9},
        {L::IX, plane({{0, 0, 1}, {0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {1, 2, 3}}), 0, L::VII, 10},
        {L::X, plane({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 2, 0}, {0, 0, 1}, {1, 0, 1}}), 0, L::VII, 9},
        {L::XI, plane({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 2, 0}, {0, 0, 1}, {1, 3, 1}}), 0, L::VII, 10},
    };
    return reps;
}

} // namespace m06
