#pragma once

// Command implementations behind the CLI: each renders a text or JSON
// report. Input errors surface as exceptions; the exit code reports whether
// the computed checks passed.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace m06 {

enum class OutputMode { Text, Json };

struct CommandOutput {
    std::string body;
    int exit_code = 0;  // 0 success, 1 a check failed
};

/// Thrown for malformed requests (bad flags, contradictory inputs).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DivisorRequest {
    std::string action;   // eval | intersect | chamber | baselocus
    std::string expr;
    int n = 6;
    std::optional<std::string> curve;  // "F:a,b,c,d" or "C:j"
};

CommandOutput run_divisor(const DivisorRequest& req, OutputMode mode);

struct GitRequest {
    std::string action;   // stability | stratum | limit | degenerate | conic
    std::string config_text;
    std::optional<std::string> weights;  // csv
    std::optional<int> dim;
    std::optional<std::string> ops;      // csv of integer weights
};

CommandOutput run_git(const GitRequest& req, OutputMode mode);

struct HypersurfaceRequest {
    std::string action;   // eval | singular | lines | nodes | duality
    std::optional<std::string> surface;  // segre | igusa
    std::optional<std::string> point;    // csv
    int samples = 100;
    int exact_samples = 20;
    double tolerance = 1e-9;
    std::uint64_t seed = 42;
    int search = 0;                      // extra random node search size
};

CommandOutput run_hypersurface(const HypersurfaceRequest& req, OutputMode mode);

struct M2Request {
    std::optional<std::string> lambda, delta0, delta1, Delta0, Delta1, alpha;
};

CommandOutput run_m2(const M2Request& req, OutputMode mode);

struct ReportCheck {
    std::string section;
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct PaperReport {
    std::uint64_t seed = 42;
    std::vector<ReportCheck> checks;
    bool pass() const;
};

/// Runs every reproduced identity, table and chamber statement.
PaperReport build_paper_report(std::uint64_t seed = 42);
CommandOutput run_paper_report(std::uint64_t seed, OutputMode mode);

} // namespace m06
