#include <cmath>
#include <random>

#include "doctest.h"
#include "twspeed/approx.hpp"
#include "twspeed/error.hpp"
#include "twspeed/wavespeed.hpp"

using namespace twspeed;

TEST_CASE("interval from a bound") {
    PhysicalParams p{1.0, 0.09};
    auto iv = interval_from_bound(p, 0.5, IntervalKind::sufficient_poly);
    REQUIRE_FALSE(iv.empty());
    // beta < bound and alpha > 1 at every inner speed
    for (double t : {0.01, 0.5, 0.99}) {
        double c = iv.lo() + t * iv.length();
        auto f = to_fucik_point(p, {c});
        CHECK(f.alpha > 1.0);
        CHECK(f.beta < 0.5);
    }
    CHECK(iv.within(necessary_interval(p)));
    CHECK(interval_from_bound(p, 0.08, IntervalKind::sufficient_poly).empty());
    CHECK(interval_from_bound({0.09, 1.0}, 0.9, IntervalKind::sufficient_poly).empty());
}

TEST_CASE("poly and pade intervals") {
    PhysicalParams p{1.0, 0.09};
    const double x1 = 1.2, x2 = 20.0 / 6.0 - 1.2;
    auto poly = sufficient_interval_poly(p, x1, x2);
    auto pade = sufficient_interval_pade(p, x1, x2, 0.1, 0.15);
    REQUIRE_FALSE(poly.empty());
    CHECK(poly.within(pade));
    CHECK(pade.within(necessary_interval(p)));
    // the lower endpoint sits where beta equals the bound on the ray
    double q = 1.0 / 0.09;
    auto f = to_fucik_point(p, {poly.lo()});
    CHECK(f.beta == doctest::Approx(bound_poly(x1, x2, q)).epsilon(1e-10));
}

TEST_CASE("nesting on random parameters") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ua(0.2, 5.0), ur(0.05, 0.95);
    for (int i = 0; i < 10; ++i) {
        PhysicalParams p{ua(rng), 0.0};
        p.b = p.a * ur(rng);
        double q = p.a / p.b;
        auto bp = best_poly(q);
        auto bq = best_pade(q);
        auto nec = necessary_interval(p);
        auto poly = sufficient_interval_poly(p, bp.x1, bp.x2);
        auto pade = sufficient_interval_pade(p, bq.x1, bq.x2, bq.p1, bq.p2);
        auto opt = optimal_interval_estimate(p, estimate_beta_star(q, BetaStarSource::periodic_sup));
        CHECK(poly.within(nec));
        CHECK(pade.within(nec));
        CHECK(opt.within(nec));
        CHECK(poly.within(pade));
        CHECK(pade.within(opt));
    }
}

TEST_CASE("optimal interval needs a matching estimate") {
    auto est = estimate_beta_star(2.0, BetaStarSource::periodic_sup);
    CHECK_THROWS_AS(optimal_interval_estimate({1.0, 0.3}, est), Error);
    auto iv = optimal_interval_estimate({1.0, 0.5}, est);
    CHECK_FALSE(iv.empty());
}

TEST_CASE("region verdicts") {
    PhysicalParams p{1.0, 0.02};
    // (4, 0.08) lies below P, (4, 0.36) above it
    auto v = region_verdict_P({1.0}, p);
    CHECK(v.verdict == Verdict::in_omega_minus);
    CHECK(v.margin > 0.0);
    // alpha <= 1 is outside the region the bounds speak about
    auto out = region_verdict_P({2.0}, p);
    CHECK(out.verdict == Verdict::undecided);
    auto above = region_verdict_P({1.0}, {1.0, 0.09});
    CHECK(above.verdict == Verdict::undecided);
    CHECK(above.margin < 0.0);
    // a lower bound alone never yields plus
    auto hi = region_verdict_poly({0.8}, {1.0, 0.2}, 1.2, 20.0 / 6.0 - 1.2);
    CHECK(hi.verdict != Verdict::in_omega_plus);

    auto s = region_verdict_spectra({1.0}, p);
    CHECK(s.verdict == Verdict::in_omega_minus);
    // far above the periodic envelope
    auto plus = region_verdict_spectra({1.0}, {0.5, 0.24});
    CHECK(plus.verdict == Verdict::in_omega_plus);
    CHECK(plus.estimate_based);
}

TEST_CASE("eta verdict accepts everything P accepts on a grid") {
    int more = 0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            PhysicalParams p{0.3 + 0.15 * i, 0.02 + 0.03 * j};
            auto vp = region_verdict_P({1.0}, p);
            auto ve = region_verdict_eta({1.0}, p, 20.0 / 3.0, 0.1, 0.15);
            if (vp.verdict == Verdict::in_omega_minus) CHECK(ve.verdict == Verdict::in_omega_minus);
            if (ve.verdict == Verdict::in_omega_minus && vp.verdict != Verdict::in_omega_minus) ++more;
        }
    MESSAGE("points only eta accepts: " << more);
}
