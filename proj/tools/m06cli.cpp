// Command-line front end over the m06 C interface.

#include "m06/m06.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

const char* c_str(const std::optional<std::string>& s)
{
    return s ? s->c_str() : nullptr;
}

int finish(m06_status st, m06_string* out)
{
    if (out) {
        std::fwrite(m06_string_data(out), 1, m06_string_size(out), stdout);
        m06_string_free(out);
    }
    if (st == M06_OK)
        return 0;
    if (st == M06_ERR_CHECK_FAILED)
        return 1;
    std::cerr << "error: " << m06_last_error() << "\n";
    return 2;
}

bool read_file(const std::string& path, std::string& text)
{
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return false;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    return true;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Symmetric divisors, GIT quotients and hypersurfaces for six-pointed rational curves"};
    app.require_subcommand(1);
    bool json = false;
    std::uint64_t seed = 42;
    app.add_flag("--json", json, "Emit JSON");

    auto* div = app.add_subcommand("divisor", "Divisor classes: eval, intersect, chamber, baselocus");
    std::string div_action, expr;
    int n = 6;
    std::optional<std::string> curve;
    div->add_option("action", div_action)->required()->check(CLI::IsMember({"eval", "intersect", "chamber", "baselocus"}));
    div->add_option("--expr", expr, "Divisor expression, e.g. \"K + 1/3*psi\"")->required();
    div->add_option("--n", n, "Number of marked points")->check(CLI::Range(4, 64));
    div->add_option("--curve", curve, "F:a,b,c,d or C:j");
    div->add_flag("--json", json);

    auto* git = app.add_subcommand("git", "Point configurations: stability, stratum, limit, degenerate, conic");
    std::string git_action, config_path;
    std::optional<std::string> weights, ops;
    int dim = 0;
    git->add_option("action", git_action)
        ->required()
        ->check(CLI::IsMember({"stability", "stratum", "limit", "degenerate", "conic"}));
    git->add_option("--config", config_path, "Configuration file")->required();
    git->add_option("--weights", weights, "Comma-separated weights");
    git->add_option("--dim", dim, "Expected ambient dimension")->check(CLI::PositiveNumber);
    git->add_option("--ops", ops, "Weights of a diagonal one-parameter subgroup");
    git->add_flag("--json", json);

    auto* hyp = app.add_subcommand("hypersurface", "Segre cubic and Igusa quartic: eval, singular, lines, nodes, duality");
    std::string hyp_action;
    std::optional<std::string> surface, point;
    int samples = 100, exact_samples = 20, search = 0;
    double tol = 1e-9;
    hyp->add_option("action", hyp_action)
        ->required()
        ->check(CLI::IsMember({"eval", "singular", "lines", "nodes", "duality"}));
    hyp->add_option("--surface", surface)->check(CLI::IsMember({"segre", "igusa"}));
    hyp->add_option("--point", point, "Six comma-separated rationals");
    hyp->add_option("--samples", samples, "Floating duality samples")->check(CLI::PositiveNumber);
    hyp->add_option("--exact-samples", exact_samples, "Exact duality samples")->check(CLI::NonNegativeNumber);
    hyp->add_option("--search", search, "Random points for the node search")->check(CLI::NonNegativeNumber);
    hyp->add_option("--tol", tol, "Residual tolerance")->check(CLI::PositiveNumber);
    hyp->add_option("--seed", seed);
    hyp->add_flag("--json", json);

    auto* m2 = app.add_subcommand("m2", "Genus-two divisor classes and their chambers");
    std::optional<std::string> lambda, delta0, delta1, Delta0, Delta1, alpha;
    m2->add_option("--lambda", lambda);
    m2->add_option("--delta0", delta0);
    m2->add_option("--delta1", delta1);
    m2->add_option("--Delta0", Delta0);
    m2->add_option("--Delta1", Delta1);
    m2->add_option("--alpha", alpha);
    m2->add_flag("--json", json);

    auto* paper = app.add_subcommand("paper-report", "Run every reproduced identity and table");
    paper->add_option("--seed", seed);
    paper->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    m06_string* out = nullptr;
    m06_status st = M06_OK;
    if (div->parsed()) {
        st = m06_report_divisor(div_action.c_str(), expr.c_str(), n, c_str(curve), json, &out);
    } else if (git->parsed()) {
        std::string text;
        if (!read_file(config_path, text))
            return 2;
        st = m06_report_git(git_action.c_str(), text.c_str(), c_str(weights), dim, c_str(ops), json, &out);
    } else if (hyp->parsed()) {
        st = m06_report_hypersurface(hyp_action.c_str(), c_str(surface), c_str(point), samples, exact_samples, tol,
                                     seed, search, json, &out);
    } else if (m2->parsed()) {
        st = m06_report_m2(c_str(lambda), c_str(delta0), c_str(delta1), c_str(Delta0), c_str(Delta1), c_str(alpha),
                           json, &out);
    } else {
        st = m06_report_paper(seed, json, &out);
    }
    return finish(st, out);
}
