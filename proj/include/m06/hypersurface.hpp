#pragma once

// The Segre cubic and the Igusa quartic in symmetric P^5 coordinates:
//   S3: sum X = 0, sum X^3 = 0
//   I4: sum X = 0, (sum X^2)^2 - 4 sum X^4 = 0

#include "m06/exact.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace m06 {

enum class Hypersurface { SegreCubic, IgusaQuartic };
const char* to_string(Hypersurface h);

/// Six homogeneous coordinates, not all zero.
class P5Point {
public:
    explicit P5Point(RationalVector coords);
    const RationalVector& coords() const noexcept { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    std::string to_string() const;

private:
    RationalVector coords_;
};

struct FormValues {
    Rational linear;
    Rational degree_form;
    bool vanishes() const { return linear == 0 && degree_form == 0; }
};

FormValues evaluate(Hypersurface h, const P5Point& p);

/// Gradient of the cubic or quartic form (the linear form's gradient is the
/// all-ones vector).
RationalVector gradient(Hypersurface h, const P5Point& p);

double quartic_form(std::span<const double> y);

/// {(a,a,b,b,c,c) : a + b + c = 0} with coordinates matched by a pairing.
struct PairPartitionLine {
    std::array<std::array<int, 2>, 3> pairs;  // 0-based, each pair sorted, pairs ordered
    /// The point whose pair values are (a, b, c); requires a + b + c = 0.
    P5Point point(const Rational& a, const Rational& b) const;
    std::string to_string() const;
};

/// The 15 pairings of {1..6}, in lexicographic order.
std::vector<PairPartitionLine> pair_partition_lines();

struct LineIncidence {
    /// Distinct points where each line meets the union of the others.
    std::vector<std::vector<P5Point>> meeting_points;
    /// All distinct meeting points and how many lines pass through each.
    std::vector<std::pair<P5Point, int>> point_multiplicity;
};

LineIncidence line_incidence(const std::vector<PairPartitionLine>& lines);

/// The 2 x 6 Jacobian of (linear form, degree form) drops rank at p.
/// Throws std::domain_error if p is not on the hypersurface.
bool is_singular_point(Hypersurface h, const P5Point& p);

/// Sign classes of permutations of (1,1,1,-1,-1,-1), first coordinate +1.
std::vector<P5Point> segre_nodes();

/// True if p is a nonzero multiple of q.
bool projectively_equal(const P5Point& p, const P5Point& q);

/// Y_i = X_i^2 - (1/6) sum X^2, the Gauss map of S3 followed by projection
/// onto the hyperplane sum Y = 0.
RationalVector gauss_image(const P5Point& x);

struct DualityReport {
    std::uint64_t seed = 0;
    int samples = 0;            // floating samples that were checked
    int exact_samples = 0;      // exact pair-pattern samples that were checked
    int skipped = 0;            // samples at singular points
    double max_residual = 0.0;  // over floating samples, unit-normalized Y
    bool exact_all_zero = true;
    double tolerance = 0.0;
    bool pass = false;
};

/// Samples smooth points of S3, maps them through the Gauss map and checks
/// that the image lies on I4. Deterministic for a given seed.
DualityReport duality_sample_check(int sample_count, double tolerance, std::uint64_t seed, int exact_sample_count = 20);

struct NodeSearchReport {
    int points_checked = 0;
    int singular_found = 0;
    int additional_singular = 0;  // singular points that are not among the nodes
};

/// Generates rational points of S3 by the chord construction from
/// pair-pattern seeds and tests each for singularity.
NodeSearchReport random_singular_search(int count, std::uint64_t seed);

} // namespace m06
