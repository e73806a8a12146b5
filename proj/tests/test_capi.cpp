#include <cmath>
#include <string>

#include "doctest.h"
#include "twspeed/twspeed.h"

TEST_CASE("fucik point and status codes") {
    double a = 0, b = 0;
    CHECK(tws_fucik_point(1.0, 0.09, 1.0, &a, &b) == TWS_OK);
    CHECK(a == doctest::Approx(4.0));
    CHECK(b == doctest::Approx(0.36));
    CHECK(std::string(tws_last_error()).empty());

    CHECK(tws_fucik_point(1.0, 0.09, 0.0, &a, &b) == TWS_ERR_INVALID_INPUT);
    CHECK_FALSE(std::string(tws_last_error()).empty());
    CHECK(tws_fucik_point(1.0, 0.09, 1.0, nullptr, &b) == TWS_ERR_INVALID_INPUT);
    CHECK(std::string(tws_status_name(TWS_ERR_NO_CONVERGENCE)).size() > 0);
}

TEST_CASE("intervals through the C API") {
    tws_interval nec{}, poly{}, pade{}, opt{};
    REQUIRE(tws_necessary_interval(1.0, 0.09, &nec) == TWS_OK);
    CHECK_FALSE(nec.empty);
    CHECK(nec.lo == doctest::Approx(std::pow(0.36, 0.25)));
    CHECK(nec.hi == doctest::Approx(std::sqrt(2.0)));
    CHECK(nec.kind == TWS_NECESSARY);

    REQUIRE(tws_poly_interval(1.0, 0.09, 1.2, 20.0 / 6.0 - 1.2, &poly) == TWS_OK);
    REQUIRE(tws_pade_interval(1.0, 0.09, 1.2, 20.0 / 6.0 - 1.2, 0.1, 0.15, &pade) == TWS_OK);
    tws_estimate est{};
    REQUIRE(tws_optimal_interval(1.0, 0.09, TWS_SOURCE_PERIODIC, &opt, &est) == TWS_OK);
    CHECK(est.q == doctest::Approx(1.0 / 0.09));
    CHECK(est.source == TWS_SOURCE_PERIODIC);
    CHECK(nec.lo <= pade.lo);
    CHECK(pade.lo <= poly.lo);
    CHECK(opt.lo <= poly.lo);

    tws_interval none{};
    REQUIRE(tws_necessary_interval(1.0, 2.0, &none) == TWS_OK);
    CHECK(none.empty);
    CHECK(std::string(none.reason).size() > 0);
}

TEST_CASE("best bounds") {
    tws_bound_choice p{}, q{};
    REQUIRE(tws_best_poly(4.0, &p) == TWS_OK);
    REQUIRE(tws_best_pade(4.0, &q) == TWS_OK);
    CHECK(q.bound >= p.bound);
    double b = 0;
    REQUIRE(tws_bound_poly(p.x1, p.x2, 4.0, &b) == TWS_OK);
    CHECK(b == doctest::Approx(p.bound));
    CHECK(tws_bound_poly(-1.0, 1.0, 4.0, &b) == TWS_ERR_INVALID_INPUT);
    REQUIRE(tws_P_curve(5.0 / 6.0, &b) == TWS_OK);
    CHECK(b == doctest::Approx(5.0 / 6.0));
}

TEST_CASE("curves through the C API") {
    tws_curve_request req;
    tws_curve_request_init(&req, TWS_CURVE_P);
    req.samples = 11;
    req.lo = 1.0;
    req.hi = 6.0;
    tws_curve* c = nullptr;
    REQUIRE(tws_curve_compute(&req, &c) == TWS_OK);
    CHECK(tws_curve_rows(c) == 11);
    CHECK(tws_curve_columns(c) == 2);
    CHECK(std::string(tws_curve_column_name(c, 1)) == "beta");
    CHECK(std::string(tws_curve_row_status(c, 0)) == "ok");
    CHECK(std::isnan(tws_curve_value(c, 99, 0)));
    CHECK(tws_curve_column_name(c, 5) == nullptr);
    tws_curve_destroy(c);

    tws_curve_request_init(&req, TWS_CURVE_DIRICHLET_FUCIK);
    req.k = 2;
    req.stop = 4.0;
    REQUIRE(tws_curve_compute(&req, &c) == TWS_OK);
    bool hit = false;
    for (size_t i = 0; i < tws_curve_rows(c); ++i)
        if (std::abs(tws_curve_value(c, i, 0) - 4.0) < 1e-12)
            hit = std::abs(tws_curve_value(c, i, 1) - 0.42278) < 1e-3;
    CHECK(hit);
    CHECK(std::string(tws_curve_termination(c)).size() > 0);
    tws_curve_destroy(c);

    tws_curve_request_init(&req, TWS_CURVE_MU);
    req.samples = 0;
    CHECK(tws_curve_compute(&req, &c) == TWS_ERR_INVALID_INPUT);
    CHECK(c == nullptr);
    tws_curve_destroy(nullptr);
}

TEST_CASE("verification suites through the C API") {
    REQUIRE(tws_suite_count() == 5);
    tws_report* r = nullptr;
    REQUIRE(tws_verify_run("eigen", &r) == TWS_OK);
    CHECK(tws_report_passed(r) == 1);
    CHECK(tws_report_size(r) > 3);
    CHECK(tws_report_check_name(r, 0) != nullptr);
    CHECK(tws_report_check_name(r, 1000) == nullptr);
    tws_report_destroy(r);
    CHECK(tws_verify_run("nope", &r) == TWS_ERR_INVALID_INPUT);
}

TEST_CASE("region verdicts through the C API") {
    tws_verdict v{};
    REQUIRE(tws_region_verdict(TWS_VERDICT_P, 1.0, 1.0, 0.02, nullptr, &v) == TWS_OK);
    CHECK(v.verdict == TWS_IN_OMEGA_MINUS);
    CHECK(v.alpha == doctest::Approx(4.0));
    tws_verdict_params params{1.2, 20.0 / 6.0 - 1.2, 0.1, 0.15, 20.0 / 3.0};
    REQUIRE(tws_region_verdict(TWS_VERDICT_PADE, 1.0, 1.0, 0.02, &params, &v) == TWS_OK);
    CHECK(v.verdict == TWS_IN_OMEGA_MINUS);
    CHECK(tws_region_verdict(TWS_VERDICT_POLY, 1.0, 1.0, 0.09, nullptr, &v) == TWS_ERR_INVALID_INPUT);
}
