#include "m06/hypersurface.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace m06 {

const char* to_string(Hypersurface h)
{
    return h == Hypersurface::SegreCubic ? "SegreCubic" : "IgusaQuartic";
}

P5Point::P5Point(RationalVector coords)
    : coords_(std::move(coords))
{
    if (coords_.size() != 6)
        throw std::invalid_argument("a point of P^5 needs six coordinates, got " + std::to_string(coords_.size()));
    if (is_zero(coords_))
        throw std::invalid_argument("the zero vector is not a point of P^5");
}

std::string P5Point::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < 6; ++i)
        os << (i ? "," : "") << m06::to_string(coords_[i]);
    os << ")";
    return os.str();
}

namespace {

Rational power_sum(const RationalVector& x, int k)
{
    Rational s = 0;
    for (const auto& v : x) {
        Rational t = 1;
        for (int e = 0; e < k; ++e)
            t *= v;
        s += t;
    }
    return s;
}

} // namespace

FormValues evaluate(Hypersurface h, const P5Point& p)
{
    const auto& x = p.coords();
    FormValues out{power_sum(x, 1), 0};
    if (h == Hypersurface::SegreCubic) {
        out.degree_form = power_sum(x, 3);
    } else {
        const Rational s2 = power_sum(x, 2);
        out.degree_form = s2 * s2 - 4 * power_sum(x, 4);
    }
    return out;
}

RationalVector gradient(Hypersurface h, const P5Point& p)
{
    const auto& x = p.coords();
    RationalVector g(6);
    if (h == Hypersurface::SegreCubic) {
        for (std::size_t i = 0; i < 6; ++i)
            g[i] = 3 * x[i] * x[i];
    } else {
        const Rational s2 = power_sum(x, 2);
        for (std::size_t i = 0; i < 6; ++i)
            g[i] = 4 * x[i] * s2 - 16 * x[i] * x[i] * x[i];
    }
    return g;
}

double quartic_form(std::span<const double> y)
{
    double s2 = 0, s4 = 0;
    for (double v : y) {
        s2 += v * v;
        s4 += v * v * v * v;
    }
    return s2 * s2 - 4 * s4;
}

P5Point PairPartitionLine::point(const Rational& a, const Rational& b) const
{
    const Rational values[3] = {a, b, Rational(-a - b)};
    RationalVector x(6);
    for (std::size_t k = 0; k < 3; ++k)
        for (int idx : pairs[k])
            x[static_cast<std::size_t>(idx)] = values[k];
    return P5Point(std::move(x));
}

std::string PairPartitionLine::to_string() const
{
    std::ostringstream os;
    for (const auto& pr : pairs)
        os << "{" << pr[0] + 1 << pr[1] + 1 << "}";
    return os.str();
}

std::vector<PairPartitionLine> pair_partition_lines()
{
    std::vector<PairPartitionLine> out;
    // 0 is always paired first; then the smallest remaining index.
    for (int b = 1; b < 6; ++b) {
        std::vector<int> rest;
        for (int k = 1; k < 6; ++k)
            if (k != b)
                rest.push_back(k);
        for (std::size_t c = 1; c < 4; ++c) {
            std::vector<int> last;
            for (std::size_t k = 1; k < 4; ++k)
                if (k != c)
                    last.push_back(rest[k]);
            out.push_back({{{{0, b}, {rest[0], rest[c]}, {last[0], last[1]}}}});
        }
    }
    return out;
}

bool projectively_equal(const P5Point& p, const P5Point& q)
{
    const RationalVector rows[] = {p.coords(), q.coords()};
    return rank(RationalMatrix::from_rows(rows)) == 1;
}

LineIncidence line_incidence(const std::vector<PairPartitionLine>& lines)
{
    LineIncidence out;
    out.meeting_points.resize(lines.size());
    std::map<RationalVector, std::set<std::size_t>> through;

    auto key = [](const P5Point& p) { return primitive_integer_vector(p.coords()); };
    auto add_unique = [&](std::vector<P5Point>& pts, const P5Point& p) {
        if (std::none_of(pts.begin(), pts.end(), [&](const P5Point& q) { return projectively_equal(p, q); }))
            pts.push_back(p);
    };

    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const P5Point u1 = lines[i].point(1, -1), v1 = lines[i].point(1, 0);
            const P5Point u2 = lines[j].point(1, -1), v2 = lines[j].point(1, 0);
            RationalMatrix m(6, 4);
            for (std::size_t r = 0; r < 6; ++r) {
                m(r, 0) = u1[r];
                m(r, 1) = v1[r];
                m(r, 2) = -u2[r];
                m(r, 3) = -v2[r];
            }
            const auto ker = kernel_basis(m);
            if (ker.size() != 1)
                continue;
            RationalVector x(6);
            for (std::size_t r = 0; r < 6; ++r)
                x[r] = ker[0][0] * u1[r] + ker[0][1] * v1[r];
            const P5Point p(primitive_integer_vector(x));
            add_unique(out.meeting_points[i], p);
            add_unique(out.meeting_points[j], p);
            through[key(p)].insert(i);
            through[key(p)].insert(j);
        }
    for (const auto& [coords, ls] : through)
        out.point_multiplicity.emplace_back(P5Point(coords), static_cast<int>(ls.size()));
    return out;
}

bool is_singular_point(Hypersurface h, const P5Point& p)
{
    if (!evaluate(h, p).vanishes())
        throw std::domain_error(p.to_string() + " does not lie on the " + to_string(h));
    const RationalVector rows[] = {RationalVector(6, Rational(1)), gradient(h, p)};
    return rank(RationalMatrix::from_rows(rows)) < 2;
}

std::vector<P5Point> segre_nodes()
{
    std::vector<P5Point> out;
    for (int a = 1; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
            RationalVector x(6, Rational(-1));
            x[0] = x[static_cast<std::size_t>(a)] = x[static_cast<std::size_t>(b)] = 1;
            out.emplace_back(std::move(x));
        }
    return out;
}

RationalVector gauss_image(const P5Point& x)
{
    const Rational mean = power_sum(x.coords(), 2) / 6;
    RationalVector y(6);
    for (std::size_t i = 0; i < 6; ++i)
        y[i] = x[i] * x[i] - mean;
    return y;
}

namespace {

bool is_rational_square(const Rational& r, Rational& root)
{
    if (r < 0)
        return false;
    if (mpz_perfect_square_p(r.get_num_mpz_t()) == 0 || mpz_perfect_square_p(r.get_den_mpz_t()) == 0)
        return false;
    Integer num, den;
    mpz_sqrt(num.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), r.get_den_mpz_t());
    root = Rational(num, den);
    root.canonicalize();
    return true;
}

// (a, -a, b, -b, c, -c) up to a random permutation; lies on S3.
RationalVector pair_pattern(std::mt19937_64& rng, int bound)
{
    std::uniform_int_distribution<int> value(-bound, bound);
    RationalVector x(6);
    for (std::size_t k = 0; k < 3; ++k) {
        const int v = value(rng);
        x[2 * k] = v;
        x[2 * k + 1] = -v;
    }
    std::shuffle(x.begin(), x.end(), rng);
    return x;
}

} // namespace

DualityReport duality_sample_check(int sample_count, double tolerance, std::uint64_t seed, int exact_sample_count)
{
    if (sample_count < 1)
        throw std::invalid_argument("duality check needs at least one sample");
    if (!(tolerance > 0))
        throw std::invalid_argument("tolerance must be positive");

    DualityReport rep;
    rep.seed = seed;
    rep.tolerance = tolerance;
    std::mt19937_64 rng(seed);

    auto check_exact = [&](const RationalVector& x) {
        const P5Point p(x);
        if (is_singular_point(Hypersurface::SegreCubic, p)) {
            ++rep.skipped;
            return;
        }
        const RationalVector y = gauss_image(p);
        if (is_zero(y)) {
            ++rep.skipped;
            return;
        }
        ++rep.exact_samples;
        if (evaluate(Hypersurface::IgusaQuartic, P5Point(y)).degree_form != 0)
            rep.exact_all_zero = false;
    };

    for (int k = 0; k < exact_sample_count; ++k) {
        RationalVector x;
        do
            x = pair_pattern(rng, 9);
        while (is_zero(x));
        check_exact(x);
    }

    // Fix four coordinates, then X5 + X6 = p and X5^3 + X6^3 = -c force
    // X5 X6 = (p^3 + c) / (3p); solve the quadratic.
    std::uniform_int_distribution<int> numerator(-64, 64);
    const int max_attempts = 1000 * sample_count + 1000;
    for (int attempt = 0; rep.samples < sample_count && attempt < max_attempts; ++attempt) {
        RationalVector x(6);
        for (std::size_t i = 0; i < 4; ++i) {
            x[i] = Rational(numerator(rng), 64);
            x[i].canonicalize();
        }
        const Rational p = -(x[0] + x[1] + x[2] + x[3]);
        if (p == 0)
            continue;
        const Rational c = x[0] * x[0] * x[0] + x[1] * x[1] * x[1] + x[2] * x[2] * x[2] + x[3] * x[3] * x[3];
        const Rational q = (p * p * p + c) / (3 * p);
        const Rational disc = p * p - 4 * q;
        if (disc < 0)
            continue;
        Rational root;
        if (is_rational_square(disc, root)) {
            x[4] = (p + root) / 2;
            x[5] = (p - root) / 2;
            if (!is_zero(x))
                check_exact(x);
            continue;
        }
        std::array<double, 6> xf{};
        for (std::size_t i = 0; i < 4; ++i)
            xf[i] = x[i].get_d();
        const double pf = p.get_d(), rf = std::sqrt(disc.get_d());
        xf[4] = (pf + rf) / 2;
        xf[5] = (pf - rf) / 2;
        double mean = 0;
        for (double v : xf)
            mean += v * v;
        mean /= 6;
        std::array<double, 6> y{};
        double norm = 0;
        for (std::size_t i = 0; i < 6; ++i) {
            y[i] = xf[i] * xf[i] - mean;
            norm += y[i] * y[i];
        }
        norm = std::sqrt(norm);
        double xnorm = 0;
        for (double v : xf)
            xnorm += v * v;
        if (norm <= 1e-8 * xnorm) {
            ++rep.skipped;
            continue;
        }
        for (double& v : y)
            v /= norm;
        rep.max_residual = std::max(rep.max_residual, std::abs(quartic_form(y)));
        ++rep.samples;
    }
    rep.pass = rep.samples >= sample_count && rep.exact_samples >= exact_sample_count && rep.max_residual <= tolerance && rep.exact_all_zero;
    return rep;
}

namespace {

// Third intersection of the chord AB with S3. If the chord lies on S3 any
// other point of it will do.
RationalVector chord_point(const RationalVector& a, const RationalVector& b)
{
    Rational aab = 0, abb = 0;
    for (std::size_t i = 0; i < 6; ++i) {
        aab += a[i] * a[i] * b[i];
        abb += a[i] * b[i] * b[i];
    }
    RationalVector c(6);
    if (aab == 0 && abb == 0) {
        for (std::size_t i = 0; i < 6; ++i)
            c[i] = a[i] + 2 * b[i];
        return c;
    }
    for (std::size_t i = 0; i < 6; ++i)
        c[i] = abb * a[i] - aab * b[i];
    return primitive_integer_vector(c);
}

} // namespace

NodeSearchReport random_singular_search(int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const auto nodes = segre_nodes();
    NodeSearchReport rep;
    while (rep.points_checked < count) {
        RationalVector c = chord_point(pair_pattern(rng, 7), pair_pattern(rng, 7));
        if (rep.points_checked % 2 == 1 && !is_zero(c))
            c = chord_point(c, pair_pattern(rng, 7));
        if (is_zero(c))
            continue;
        const P5Point p(c);
        ++rep.points_checked;
        if (!is_singular_point(Hypersurface::SegreCubic, p))
            continue;
        ++rep.singular_found;
        if (std::none_of(nodes.begin(), nodes.end(), [&](const P5Point& n) { return projectively_equal(p, n); }))
            ++rep.additional_singular;
    }
    return rep;
}

} // namespace m06
