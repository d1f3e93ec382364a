// Exercises the shared-library surface exactly as an external client would:
// only qmforms.h, no internal headers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "qmforms.h"

namespace {

std::string take(char* raw) {
    REQUIRE(raw != nullptr);
    std::string s(raw);
    qmf_string_free(raw);
    return s;
}

std::string coeff_at(qmf_series* s, int64_t e) {
    char* raw = nullptr;
    REQUIRE(qmf_series_coeff(s, e, &raw) == QMF_OK);
    return take(raw);
}

}  // namespace

TEST_CASE("catalog series through the C API") {
    qmf_series* s = nullptr;
    REQUIRE(qmf_series_catalog("Q2", 8, &s) == QMF_OK);
    CHECK(qmf_series_valuation(s) == 0);
    CHECK(qmf_series_precision(s) == 8);
    CHECK(coeff_at(s, 0) == "1");
    CHECK(coeff_at(s, 1) == "24");
    CHECK(coeff_at(s, 3) == "96");
    char* raw = nullptr;
    CHECK(qmf_series_coeff(s, 8, &raw) == QMF_ERR_PRECISION);
    qmf_series_release(s);

    REQUIRE(qmf_series_catalog("j3", 5, &s) == QMF_OK);
    CHECK(qmf_series_valuation(s) == -1);
    CHECK(coeff_at(s, -1) == "1");
    CHECK(coeff_at(s, 0) == "42");
    CHECK(coeff_at(s, 4) == "371520");
    qmf_series_release(s);

    CHECK(qmf_series_catalog("nonsense", 8, &s) == QMF_ERR_UNKNOWN_NAME);
    CHECK(qmf_series_catalog("Q2", 0, &s) == QMF_ERR_DOMAIN);
}

TEST_CASE("series JSON matches the documented schema") {
    qmf_series* s = nullptr;
    REQUIRE(qmf_series_catalog("Delta", 3, &s) == QMF_OK);
    char* raw = nullptr;
    REQUIRE(qmf_series_to_json(s, &raw) == QMF_OK);
    CHECK(take(raw) == R"({"coeffs":["1","-24"],"precision":3,"valuation":1})");
    qmf_series_release(s);
}

TEST_CASE("catalog name list") {
    char* raw = nullptr;
    REQUIRE(qmf_catalog_names(&raw) == QMF_OK);
    std::string names = take(raw);
    CHECK(names.find("Delta2") != std::string::npos);
    CHECK(names.find("P3orig") != std::string::npos);
}

TEST_CASE("verification suites over the C API") {
    char* raw = nullptr;
    int32_t failed = -1;
    REQUIRE(qmf_verify_suite("sl2", 0, 0, &raw, &failed) == QMF_OK);
    std::string report = take(raw);
    CHECK(failed == 0);
    CHECK(report.find("PASS") != std::string::npos);
    CHECK(report.find("9/9 checks passed") != std::string::npos);
    CHECK(qmf_verify_suite("nonsense", 16, 0, &raw, &failed) == QMF_ERR_UNKNOWN_NAME);
}

TEST_CASE("tau values and crosscheck") {
    char* raw = nullptr;
    REQUIRE(qmf_tau_value("tau2", 5, "eta", &raw) == QMF_OK);
    CHECK(take(raw) == "-210");
    REQUIRE(qmf_tau_value("tau3", 7, "recursion", &raw) == QMF_OK);
    CHECK(take(raw) == "-40");
    REQUIRE(qmf_tau_crosscheck("tau", 5, &raw) == QMF_OK);
    CHECK(take(raw) == "4830");
    CHECK(qmf_tau_value("tau4", 1, "eta", &raw) == QMF_ERR_UNKNOWN_NAME);
    CHECK(qmf_tau_value("tau", 0, "eta", &raw) == QMF_ERR_DOMAIN);
}

TEST_CASE("congruence scans") {
    int32_t violation = -1;
    int64_t at = -1;
    REQUIRE(qmf_scan_rule("tau2-mod24", 300, &violation, &at) == QMF_OK);
    CHECK(violation == 0);
    CHECK(qmf_scan_rule("no-such-rule", 10, &violation, &at) == QMF_ERR_UNKNOWN_RULE);
    char* raw = nullptr;
    REQUIRE(qmf_scan_rules(&raw) == QMF_OK);
    std::string rules = take(raw);
    CHECK(rules.find("tau3-mod3") != std::string::npos);
}

TEST_CASE("structure queries") {
    qmf_x0p_info info;
    REQUIRE(qmf_x0p_invariants(2, &info) == QMF_OK);
    CHECK(info.index == 3);
    CHECK(info.eps2 == 1);
    CHECK(info.genus == 0);
    CHECK(info.width_zero == 2);
    CHECK(qmf_x0p_invariants(4, &info) == QMF_ERR_NOT_PRIME);

    int64_t value = 0;
    REQUIRE(qmf_dim_modular(2, 8, &value) == QMF_OK);
    CHECK(value == 3);
    REQUIRE(qmf_dim_cusp(3, 6, &value) == QMF_OK);
    CHECK(value == 1);
    CHECK(qmf_dim_modular(2, 7, &value) == QMF_ERR_DOMAIN);

    REQUIRE(qmf_sturm_bound("gamma0_2", 8, &value) == QMF_OK);
    CHECK(value == 2);
    CHECK(qmf_sturm_bound("dihedral", 8, &value) == QMF_ERR_UNKNOWN_NAME);

    char* raw = nullptr;
    REQUIRE(qmf_monomial_basis("gamma0_2", 8, &raw) == QMF_OK);
    CHECK(take(raw) == "Q2^4\nQ2^2*R2\nR2^2\n");
    REQUIRE(qmf_monomial_basis("gamma0_3", 6, &raw) == QMF_OK);
    CHECK(take(raw) == "Q3^3\nQ3*R3\nS3\n");
    REQUIRE(qmf_monomial_basis("sl2z", 0, &raw) == QMF_OK);
    CHECK(take(raw) == "1\n");

    int64_t rank = 0, dim = 0;
    REQUIRE(qmf_verify_independence("gamma0_3", 4, &rank, &dim) == QMF_OK);
    CHECK(rank == 2);
    CHECK(dim == 2);
}

TEST_CASE("status messages exist for every code") {
    for (int code = 0; code <= 14; ++code)
        CHECK(std::strlen(qmf_status_message(code)) > 0);
    CHECK(std::string(qmf_version()).find('.') != std::string::npos);
}
