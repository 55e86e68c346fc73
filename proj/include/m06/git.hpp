#pragma once

// GIT (semi)stability of weighted point configurations in P^d via the linear
// subspace criterion, Lie-algebra stabilizers, one-parameter-subgroup limits,
// and the classification of strictly semistable sextuples in P^2 under the
// symmetric linearization.

#include "m06/exact.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace m06 {

class PointConfiguration {
public:
    /// Every point must be nonzero with d + 1 coordinates. Points are stored
    /// with integer coordinates, content 1 and positive first nonzero entry,
    /// so projective equality is vector equality.
    PointConfiguration(int d, std::vector<RationalVector> points);

    int d() const noexcept { return d_; }
    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<RationalVector>& points() const noexcept { return points_; }
    const RationalVector& operator[](std::size_t i) const { return points_[i]; }

    /// Applies x -> g x to every point; g must be invertible.
    PointConfiguration transformed(const RationalMatrix& g) const;

    bool operator==(const PointConfiguration&) const = default;

    /// One point per line, coordinates separated by spaces.
    std::string to_text() const;

private:
    int d_;
    std::vector<RationalVector> points_;
};

/// Parses the configuration file format: one point per line, whitespace
/// separated rationals, '#' starts a comment, blank lines are skipped.
/// Throws ConfigParseError carrying the 1-based line number.
PointConfiguration parse_configuration(std::string_view text, std::optional<int> expected_d = std::nullopt);

class ConfigParseError : public std::runtime_error {
public:
    ConfigParseError(const std::string& what, int line);
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Linearization data a_1..a_n, normalized to sum d + 1 with 0 < a_i <= 1.
class WeightVector {
public:
    WeightVector(int d, RationalVector weights);
    static WeightVector symmetric(int d, std::size_t n);

    int d() const noexcept { return d_; }
    const RationalVector& weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return weights_.size(); }
    bool is_symmetric() const;

private:
    int d_;
    RationalVector weights_;
};

enum class Stability { Stable, StrictlySemistable, Unstable };
const char* to_string(Stability s);

struct StabilityWitness {
    int subspace_dimension;
    std::vector<std::size_t> points;   // every point lying in the subspace
    Rational weight;
    bool violation;                    // weight > dim + 1; otherwise equality
};

struct StabilityVerdict {
    Stability status = Stability::Stable;
    std::vector<StabilityWitness> witnesses;
};

StabilityVerdict stability_status(const PointConfiguration& c, const WeightVector& a);

/// d = 2, n = 6, symmetric weights: strictly semistable with every tight
/// subspace being a doubled point or a line carrying four points.
bool is_strictly_semistable_pattern(const PointConfiguration& c);

/// Dimension of the traceless Lie-algebra stabilizer of the configuration.
int stabilizer_dimension(const PointConfiguration& c);

struct CollinearSupport {
    std::vector<std::size_t> classes;  // indices into coincidence_classes
    int weighted_count;                // points counted with multiplicity
};

struct StratumSignature {
    std::vector<std::vector<std::size_t>> coincidence_classes;  // ordered by smallest member
    std::vector<CollinearSupport> lines;                        // maximal, >= 3 distinct supports
};

StratumSignature stratum_signature(const PointConfiguration& c);

enum class StratumLabel { I, II, III, IV, V, VI, VII, VIII, IX, X, XI, Stable, Unstable, Unrecognized };
const char* to_string(StratumLabel l);

StratumLabel match_stratum(const StratumSignature& sig, const StabilityVerdict& verdict);

/// Convenience: signature + verdict under symmetric weights.
StratumLabel classify_sextuple(const PointConfiguration& c);

class OneParameterSubgroup {
public:
    /// Throws std::invalid_argument when all weights are equal.
    explicit OneParameterSubgroup(std::vector<long> weights);
    const std::vector<long>& weights() const noexcept { return weights_; }

private:
    std::vector<long> weights_;
};

/// lim_{t->0} diag(t^w) x_i in the current coordinates.
PointConfiguration ops_limit(const PointConfiguration& c, const OneParameterSubgroup& lambda);

struct DegenerationStep {
    std::string flag;          // "point" or "line"
    std::vector<std::size_t> witness_points;
    StratumLabel label_after;
};

struct Degeneration {
    PointConfiguration limit;
    StratumLabel label;
    std::vector<DegenerationStep> steps;
};

/// Degenerates a strictly semistable sextuple in P^2 (symmetric weights) to
/// the closed orbit in its orbit closure. Throws std::domain_error when the
/// input is not strictly semistable.
Degeneration polystable_degeneration(const PointConfiguration& c);

/// d = 2, n = 6: some (possibly degenerate) conic contains all six points.
bool lies_on_conic(const PointConfiguration& c);

/// Rows are the six quadratic monomials x^2, xy, xz, y^2, yz, z^2 at each point.
RationalMatrix veronese_matrix(const PointConfiguration& c);

/// A transcribed representative of one strictly semistable stratum.
struct StratumRepresentative {
    StratumLabel label;
    PointConfiguration config;
    int stabilizer_dimension;     // from the stabilizer row
    StratumLabel orbit_closure;    // I or VII
    int tabulated_dimension;      // documentation only, never asserted
};

const std::vector<StratumRepresentative>& stratum_representatives();

} // namespace m06
