#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "m06/m06.h"

#include <string>

namespace {

std::string take(m06_string* s)
{
    std::string out(m06_string_data(s), m06_string_size(s));
    m06_string_free(s);
    return out;
}

} // namespace

TEST_CASE("divisor handles")
{
    m06_divisor* d = nullptr;
    REQUIRE(m06_divisor_parse("K + 1/3*psi", 6, &d) == M06_OK);
    CHECK(m06_divisor_n(d) == 6);
    m06_string* s = nullptr;
    REQUIRE(m06_divisor_coefficient(d, 2, &s) == M06_OK);
    CHECK(take(s) == "2/15");
    REQUIRE(m06_divisor_coefficient(d, 4, &s) == M06_OK);
    CHECK(take(s) == "2/15");
    CHECK(m06_divisor_coefficient(d, 5, &s) == M06_ERR_USAGE);

    m06_model model;
    m06_base_locus base;
    int wall = 0;
    REQUIRE(m06_divisor_chamber(d, &model, &base, &wall) == M06_OK);
    CHECK(model == M06_MODEL_SEGRE_CUBIC);
    CHECK(base == M06_BASE_EMPTY);
    CHECK(wall == 1);
    m06_divisor_free(d);

    REQUIRE(m06_divisor_parse("DA", 6, &d) == M06_OK);
    REQUIRE(m06_divisor_intersect_f(d, 1, 1, 1, 3, &s) == M06_OK);
    CHECK(take(s) == "1/2");
    REQUIRE(m06_divisor_intersect_f(d, 2, 1, 2, 1, &s) == M06_OK);
    CHECK(take(s) == "0");
    REQUIRE(m06_divisor_intersect_c(d, 4, &s) == M06_OK);
    CHECK(take(s) == "0");
    CHECK(m06_divisor_intersect_f(d, 1, 1, 1, 1, &s) == M06_ERR_USAGE);
    m06_divisor_free(d);
}

TEST_CASE("error reporting")
{
    m06_divisor* d = nullptr;
    CHECK(m06_divisor_parse("2 + K", 6, &d) == M06_ERR_PARSE);
    CHECK(d == nullptr);
    CHECK(std::string(m06_last_error()).find("position 2") != std::string::npos);
    CHECK(m06_divisor_parse(nullptr, 6, &d) == M06_ERR_USAGE);
    CHECK(m06_divisor_parse("K", 3, &d) == M06_ERR_USAGE);
    CHECK(std::string(m06_status_name(M06_ERR_DOMAIN)) == "domain error");
    REQUIRE(m06_divisor_parse("K", 6, &d) == M06_OK);
    CHECK(std::string(m06_last_error()).empty());
    m06_divisor_free(d);
    m06_divisor_free(nullptr);
    m06_string_free(nullptr);
}

TEST_CASE("configuration handles")
{
    m06_config* c = nullptr;
    REQUIRE(m06_config_parse("1 0 0\n1 0 0\n0 1 0\n0 1 0\n0 0 1\n0 0 1\n", 2, &c) == M06_OK);
    CHECK(m06_config_size(c) == 6);
    CHECK(m06_config_dim(c) == 2);
    m06_stability st;
    REQUIRE(m06_config_stability(c, nullptr, &st) == M06_OK);
    CHECK(st == M06_STRICTLY_SEMISTABLE);
    REQUIRE(m06_config_stability(c, "1/2,1/2,1/2,1/2,1/2,1/2", &st) == M06_OK);
    CHECK(st == M06_STRICTLY_SEMISTABLE);
    CHECK(m06_config_stability(c, "1,1,1,0,0,0", &st) == M06_ERR_USAGE);
    int dim = -1;
    REQUIRE(m06_config_stabilizer_dimension(c, &dim) == M06_OK);
    CHECK(dim == 2);
    m06_string* s = nullptr;
    REQUIRE(m06_config_stratum(c, &s) == M06_OK);
    CHECK(take(s) == "I");
    REQUIRE(m06_config_closed_orbit(c, &s) == M06_OK);
    CHECK(take(s) == "I");
    m06_config_free(c);

    CHECK(m06_config_parse("1 0 0\n1 0\n", 0, &c) == M06_ERR_PARSE);
    CHECK(std::string(m06_last_error()).find("line 2") != std::string::npos);
    CHECK(m06_config_parse("1 0 0\n", 3, &c) == M06_ERR_PARSE);

    REQUIRE(m06_config_parse("1 0 0\n0 1 0\n0 0 1\n1 1 1\n1 2 3\n2 -1 5\n", 0, &c) == M06_OK);
    CHECK(m06_config_closed_orbit(c, &s) == M06_ERR_DOMAIN);
    m06_config_free(c);
}

TEST_CASE("reports")
{
    m06_string* s = nullptr;
    REQUIRE(m06_report_divisor("eval", "-9/2*K - 1/2*psi", 6, nullptr, 0, &s) == M06_OK);
    CHECK(take(s).find("divisor: B2") != std::string::npos);
    REQUIRE(m06_report_divisor("chamber", "K", 6, nullptr, 1, &s) == M06_OK);
    CHECK(take(s).find("\"model\": \"OutsideEffectiveCone\"") != std::string::npos);
    REQUIRE(m06_report_divisor("baselocus", "K", 6, nullptr, 0, &s) == M06_ERR_CHECK_FAILED);
    CHECK(take(s).find("not effective") != std::string::npos);
    CHECK(m06_report_divisor("frobnicate", "K", 6, nullptr, 0, &s) == M06_ERR_USAGE);
    CHECK(m06_report_divisor("intersect", "K", 6, "F:1,1,1", 0, &s) == M06_ERR_USAGE);

    REQUIRE(m06_report_m2(nullptr, nullptr, nullptr, nullptr, nullptr, "9/11", 0, &s) == M06_OK);
    const std::string m2 = take(s);
    CHECK(m2.find("P6QuotientSL2") != std::string::npos);
    CHECK(m2.find("on a chamber wall: yes") != std::string::npos);
    CHECK(m06_report_m2("1", nullptr, nullptr, nullptr, nullptr, "1", 0, &s) == M06_ERR_USAGE);
    CHECK(m06_report_m2(nullptr, "1", nullptr, "1", nullptr, nullptr, 0, &s) == M06_ERR_USAGE);
    CHECK(m06_report_m2(nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, 0, &s) == M06_ERR_USAGE);

    REQUIRE(m06_report_hypersurface("lines", nullptr, nullptr, 100, 20, 1e-9, 42, 0, 0, &s) == M06_OK);
    CHECK(take(s).find("each meets others at 3 points: yes") != std::string::npos);
    CHECK(m06_report_hypersurface("singular", "segre", "1,2,3,4,5,6", 100, 20, 1e-9, 42, 0, 0, &s) == M06_ERR_USAGE);
    CHECK(m06_report_hypersurface("duality", nullptr, nullptr, 100, 20, -1.0, 42, 0, 0, &s) == M06_ERR_USAGE);

    REQUIRE(m06_report_git("conic", "1 0 0\n1 1 1\n1 2 4\n1 3 9\n1 4 16\n1 5 25\n", nullptr, 2, nullptr, 1, &s)
            == M06_OK);
    CHECK(take(s).find("\"liesOnConic\": true") != std::string::npos);
    CHECK(m06_report_git("limit", "1 0\n0 1\n1 1\n1 2\n", nullptr, 1, nullptr, 0, &s) == M06_ERR_USAGE);
}
