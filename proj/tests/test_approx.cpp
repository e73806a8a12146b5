#include <cmath>

#include "doctest.h"
#include "twspeed/approx.hpp"
#include "twspeed/error.hpp"

using namespace twspeed;

TEST_CASE("semi-wave integrals at p = 0") {
    for (double x : {0.5, 1.2, 3.0}) {
        auto g = gmn(0.0, x);
        CHECK(g.g == doctest::Approx(4.0 * x * x * x / 15.0));
        CHECK(g.m == doctest::Approx(2.0 * x / 3.0));
        CHECK(g.n == doctest::Approx(2.0 / x));
    }
}

TEST_CASE("semi-wave integrals are continuous across the series switch") {
    // w = p x^2 crosses 0.25 here
    double x = 1.0;
    auto lo = gmn(0.25 - 1e-9, x), hi = gmn(0.25 + 1e-9, x);
    CHECK(lo.g == doctest::Approx(hi.g).epsilon(1e-8));
    CHECK(lo.m == doctest::Approx(hi.m).epsilon(1e-8));
    CHECK(lo.n == doctest::Approx(hi.n).epsilon(1e-8));
}

TEST_CASE("semi-wave integral derivatives") {
    for (double p : {0.0, 0.05, 0.3, 2.0})
        for (double x : {0.8, 1.7}) {
            const double h = 1e-6;
            auto dx = gmn_dx(p, x);
            auto a = gmn(p, x + h), b = gmn(p, x - h);
            CHECK(dx.g == doctest::Approx((a.g - b.g) / (2 * h)).epsilon(1e-6));
            CHECK(dx.m == doctest::Approx((a.m - b.m) / (2 * h)).epsilon(1e-6));
            CHECK(dx.n == doctest::Approx((a.n - b.n) / (2 * h)).epsilon(1e-6));
            if (p > 0.0) {
                auto dp = gmn_dp(p, x);
                auto c = gmn(p + h, x), d = gmn(p - h, x);
                CHECK(dp.g == doctest::Approx((c.g - d.g) / (2 * h)).epsilon(1e-5));
                CHECK(dp.m == doctest::Approx((c.m - d.m) / (2 * h)).epsilon(1e-5));
                CHECK(dp.n == doctest::Approx((c.n - d.n) / (2 * h)).epsilon(1e-5));
            }
        }
}

TEST_CASE("envelope identities") {
    CHECK(P_curve(5.0 / 6.0) == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
    for (double s : {0.5, 1.0, 2.0, 3.7}) CHECK(P_curve(Q_ray(s) * Bstar(s)) == doctest::Approx(Bstar(s)).epsilon(1e-13));
    for (double q : {1.2, 2.0, 9.0}) CHECK(Q_ray(Q_ray_inverse(q)) == doctest::Approx(q).epsilon(1e-10));
    auto m = mu(std::sqrt(3.0));
    CHECK(m.alpha == doctest::Approx(5.0 / 6.0));
    CHECK(m.beta == doctest::Approx(5.0 / 6.0));
}

TEST_CASE("bounds lie below one and above 1/q") {
    for (double q : {1.5, 2.0, 4.0, 8.0}) {
        auto bp = best_poly(q);
        CHECK(bp.bound < 1.0);
        CHECK(bp.bound * q > 1.0);
        CHECK(bp.bound == doctest::Approx(bound_poly(bp.x1, bp.x2, q)));
        auto bq = best_pade(q);
        CHECK(bq.bound >= bp.bound);
        CHECK(bq.bound < 1.0);
        CHECK(bq.p1 >= 0.0);
        CHECK(bq.p2 >= 0.0);
    }
}

TEST_CASE("rational bound dominates on the plotted configurations") {
    const double T = 20.0 / 3.0;
    for (double x1 : {6.0 / 5.0, 3.0 / 2.0})
        for (int i = 0; i <= 85; ++i) {
            double q = 1.5 + 0.1 * i;
            CHECK(bound_pade(x1, T / 2 - x1, 0.1, 0.15, q) >= bound_poly(x1, T / 2 - x1, q));
        }
}

TEST_CASE("rational family lies above the polynomial one") {
    const double T = 20.0 / 3.0;
    // compare beta at matched alpha by interpolating the polynomial curve
    std::vector<EnvelopeSample> poly;
    for (int i = 0; i <= 2000; ++i) poly.push_back(mu_T(T, 0.3 + (T / 2 - 0.6) * i / 2000.0));
    int compared = 0;
    for (int i = 0; i <= 100; ++i) {
        auto e = eta_T(T, 0.1, 0.15, 0.8 + 1.7 * i / 100.0);
        if (!e.in_omega) continue;
        for (std::size_t j = 1; j < poly.size(); ++j) {
            double a0 = poly[j - 1].alpha, a1 = poly[j].alpha;
            if ((a0 - e.alpha) * (a1 - e.alpha) > 0.0) continue;
            double t = (e.alpha - a0) / (a1 - a0);
            double b = poly[j - 1].beta + t * (poly[j].beta - poly[j - 1].beta);
            CHECK(e.beta >= b - 1e-9);
            ++compared;
            break;
        }
    }
    CHECK(compared > 10);
}

TEST_CASE("R reduces to Q") {
    CHECK(R_pade(1e-9, 1e-9, 1.2, 2.0) == doctest::Approx(Q_pair(1.2, 2.0)).epsilon(1e-6));
    CHECK(bound_pade(1.2, 2.0, 0.0, 0.0, 3.0) == doctest::Approx(bound_poly(1.2, 2.0, 3.0)).epsilon(1e-14));
}

TEST_CASE("numeric eta solutions") {
    for (double x1 : {1.0, 1.2, 1.5}) {
        auto s = eta_numeric(x1);
        CHECK(s.residual < 1e-9);
        auto r = eta_residuals(x1, s.state);
        for (double v : r) CHECK(std::abs(v) < 1e-9);
        CHECK(s.state.p1 > 0.0);
        CHECK(s.state.p2 > 0.0);
    }
    // the optimized family sits above the fixed-parameter one
    auto fixed = eta_T(20.0 / 3.0, 0.1, 0.15, 1.2);
    auto opt = eta_numeric(1.2);
    CHECK(line_residual(opt.state.alpha, opt.state.beta, 1.2, opt.state.T / 2 - 1.2, opt.state.p1, opt.state.p2) ==
          doctest::Approx(0.0).epsilon(1e-9));
    CHECK(fixed.alpha > 0.0);
}

TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(gmn(-0.1, 1.0), Error);
    CHECK_THROWS_AS(gmn(0.1, 0.0), Error);
    CHECK_THROWS_AS(Q_ray_inverse(-1.0), Error);
}
