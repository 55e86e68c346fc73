#include "m06/m06.h"

#include "m06/divisor.hpp"
#include "m06/expr.hpp"
#include "m06/git.hpp"
#include "m06/report.hpp"

#include <optional>
#include <string>

struct m06_string {
    std::string text;
};

struct m06_divisor {
    m06::SymmetricDivisor value;
};

struct m06_config {
    m06::PointConfiguration value;
};

namespace {

thread_local std::string last_error;

template <class F>
m06_status guarded(F&& body)
{
    try {
        last_error.clear();
        return body();
    } catch (const m06::ExpressionError& e) {
        last_error = std::string("parse error: ") + e.what();
        return M06_ERR_PARSE;
    } catch (const m06::ConfigParseError& e) {
        last_error = std::string("configuration error: ") + e.what();
        return M06_ERR_PARSE;
    } catch (const m06::UsageError& e) {
        last_error = e.what();
        return M06_ERR_USAGE;
    } catch (const std::invalid_argument& e) {
        last_error = e.what();
        return M06_ERR_USAGE;
    } catch (const std::domain_error& e) {
        last_error = e.what();
        return M06_ERR_DOMAIN;
    } catch (const std::exception& e) {
        last_error = std::string("internal error: ") + e.what();
        return M06_ERR_INTERNAL;
    } catch (...) {
        last_error = "internal error";
        return M06_ERR_INTERNAL;
    }
}

m06_status null_argument(const char* name)
{
    last_error = std::string(name) + " must not be NULL";
    return M06_ERR_USAGE;
}

std::optional<std::string> opt(const char* s)
{
    return s ? std::optional<std::string>(s) : std::nullopt;
}

m06::OutputMode mode(int json)
{
    return json ? m06::OutputMode::Json : m06::OutputMode::Text;
}

m06_status emit(const m06::CommandOutput& r, m06_string** out)
{
    *out = new m06_string{r.body};
    if (r.exit_code != 0) {
        last_error = "one or more checks failed";
        return M06_ERR_CHECK_FAILED;
    }
    return M06_OK;
}

m06_status emit_string(std::string s, m06_string** out)
{
    *out = new m06_string{std::move(s)};
    return M06_OK;
}

} // namespace

extern "C" {

const char* m06_last_error(void)
{
    return last_error.c_str();
}

const char* m06_status_name(m06_status s)
{
    switch (s) {
    case M06_OK: return "ok";
    case M06_ERR_PARSE: return "parse error";
    case M06_ERR_USAGE: return "usage error";
    case M06_ERR_DOMAIN: return "domain error";
    case M06_ERR_CHECK_FAILED: return "check failed";
    case M06_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* m06_string_data(const m06_string* s)
{
    return s ? s->text.c_str() : "";
}

size_t m06_string_size(const m06_string* s)
{
    return s ? s->text.size() : 0;
}

void m06_string_free(m06_string* s)
{
    delete s;
}

m06_status m06_divisor_parse(const char* expr, int n, m06_divisor** out)
{
    if (!expr || !out)
        return null_argument("expr and out");
    return guarded([&] {
        *out = new m06_divisor{m06::parse_divisor_expression(expr, n)};
        return M06_OK;
    });
}

void m06_divisor_free(m06_divisor* d)
{
    delete d;
}

int m06_divisor_n(const m06_divisor* d)
{
    return d ? d->value.n() : 0;
}

m06_status m06_divisor_coefficient(const m06_divisor* d, int i, m06_string** out)
{
    if (!d || !out)
        return null_argument("divisor and out");
    return guarded([&] {
        if (i < 2 || i > d->value.n() - 2)
            throw m06::UsageError("boundary index out of range");
        return emit_string(m06::to_string(d->value.coeff(i)), out);
    });
}

m06_status m06_divisor_intersect_f(const m06_divisor* d, int a, int b, int c, int e, m06_string** out)
{
    if (!d || !out)
        return null_argument("divisor and out");
    return guarded([&] {
        const auto f = m06::FCurveClass::from_parts({a, b, c, e});
        if (f.n() != d->value.n())
            throw m06::UsageError("F-curve does not partition n");
        return emit_string(m06::to_string(m06::intersect_f_curve(d->value, f)), out);
    });
}

m06_status m06_divisor_intersect_c(const m06_divisor* d, int j, m06_string** out)
{
    if (!d || !out)
        return null_argument("divisor and out");
    return guarded([&] {
        if (j < 2 || j > d->value.n() - 2)
            throw m06::UsageError("C_j needs 2 <= j <= n - 2");
        return emit_string(m06::to_string(m06::intersect_cj(d->value, m06::SpecialCurveCj{j})), out);
    });
}

m06_status m06_divisor_chamber(const m06_divisor* d, m06_model* model, m06_base_locus* base, int* wall)
{
    if (!d || !model || !base || !wall)
        return null_argument("arguments");
    return guarded([&] {
        if (d->value.n() != 6)
            throw m06::UsageError("chambers are available for n = 6 only");
        const m06::ChamberReport r = m06::mori_model(d->value);
        *model = static_cast<m06_model>(static_cast<int>(r.model));
        *base = static_cast<m06_base_locus>(static_cast<int>(r.stable_base_locus));
        *wall = r.boundary_case ? 1 : 0;
        return M06_OK;
    });
}

m06_status m06_config_parse(const char* text, int dim, m06_config** out)
{
    if (!text || !out)
        return null_argument("text and out");
    return guarded([&] {
        const std::optional<int> d = dim > 0 ? std::optional<int>(dim) : std::nullopt;
        *out = new m06_config{m06::parse_configuration(text, d)};
        return M06_OK;
    });
}

void m06_config_free(m06_config* c)
{
    delete c;
}

size_t m06_config_size(const m06_config* c)
{
    return c ? c->value.size() : 0;
}

int m06_config_dim(const m06_config* c)
{
    return c ? c->value.d() : 0;
}

m06_status m06_config_stability(const m06_config* c, const char* weights_csv, m06_stability* out)
{
    if (!c || !out)
        return null_argument("config and out");
    return guarded([&] {
        const auto& cfg = c->value;
        const m06::WeightVector a = weights_csv
                                        ? m06::WeightVector(cfg.d(), m06::parse_rational_list(weights_csv))
                                        : m06::WeightVector::symmetric(cfg.d(), cfg.size());
        *out = static_cast<m06_stability>(static_cast<int>(m06::stability_status(cfg, a).status));
        return M06_OK;
    });
}

m06_status m06_config_stabilizer_dimension(const m06_config* c, int* out)
{
    if (!c || !out)
        return null_argument("config and out");
    return guarded([&] {
        *out = m06::stabilizer_dimension(c->value);
        return M06_OK;
    });
}

m06_status m06_config_stratum(const m06_config* c, m06_string** out)
{
    if (!c || !out)
        return null_argument("config and out");
    return guarded([&] { return emit_string(m06::to_string(m06::classify_sextuple(c->value)), out); });
}

m06_status m06_config_closed_orbit(const m06_config* c, m06_string** out)
{
    if (!c || !out)
        return null_argument("config and out");
    return guarded([&] { return emit_string(m06::to_string(m06::polystable_degeneration(c->value).label), out); });
}

m06_status m06_report_divisor(const char* action, const char* expr, int n, const char* curve, int json,
                              m06_string** out)
{
    if (!action || !expr || !out)
        return null_argument("action, expr and out");
    return guarded([&] { return emit(m06::run_divisor({action, expr, n, opt(curve)}, mode(json)), out); });
}

m06_status m06_report_git(const char* action, const char* config_text, const char* weights_csv, int dim,
                          const char* ops_csv, int json, m06_string** out)
{
    if (!action || !config_text || !out)
        return null_argument("action, config_text and out");
    return guarded([&] {
        m06::GitRequest req{action, config_text, opt(weights_csv),
                            dim > 0 ? std::optional<int>(dim) : std::nullopt, opt(ops_csv)};
        return emit(m06::run_git(req, mode(json)), out);
    });
}

m06_status m06_report_hypersurface(const char* action, const char* surface, const char* point_csv, int samples,
                                   int exact_samples, double tolerance, uint64_t seed, int search, int json,
                                   m06_string** out)
{
    if (!action || !out)
        return null_argument("action and out");
    return guarded([&] {
        if (samples < 1 || exact_samples < 0 || search < 0)
            throw m06::UsageError("sample counts must be positive");
        if (!(tolerance > 0))
            throw m06::UsageError("tolerance must be positive");
        m06::HypersurfaceRequest req;
        req.action = action;
        req.surface = opt(surface);
        req.point = opt(point_csv);
        req.samples = samples;
        req.exact_samples = exact_samples;
        req.tolerance = tolerance;
        req.seed = seed;
        req.search = search;
        return emit(m06::run_hypersurface(req, mode(json)), out);
    });
}

m06_status m06_report_m2(const char* lambda, const char* delta0, const char* delta1, const char* Delta0,
                         const char* Delta1, const char* alpha, int json, m06_string** out)
{
    if (!out)
        return null_argument("out");
    return guarded([&] {
        m06::M2Request req{opt(lambda), opt(delta0), opt(delta1), opt(Delta0), opt(Delta1), opt(alpha)};
        return emit(m06::run_m2(req, mode(json)), out);
    });
}

m06_status m06_report_paper(uint64_t seed, int json, m06_string** out)
{
    if (!out)
        return null_argument("out");
    return guarded([&] { return emit(m06::run_paper_report(seed, mode(json)), out); });
}

} // extern "C"
