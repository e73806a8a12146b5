#include <cmath>

#include "doctest.h"
#include "twspeed/core.hpp"
#include "twspeed/error.hpp"

using namespace twspeed;

TEST_CASE("speed maps to a Fucik point") {
    auto p = to_fucik_point({1.0, 0.09}, {1.0});
    CHECK(p.alpha == doctest::Approx(4.0));
    CHECK(p.beta == doctest::Approx(0.36));
    CHECK(p.in_omega());

    auto q = to_fucik_point({1.0, 0.09}, {std::sqrt(2.0)});
    CHECK(q.alpha == doctest::Approx(1.0));
    CHECK(ray_of(q) == doctest::Approx(1.0 / 0.09));

    CHECK_THROWS_AS(to_fucik_point({1.0, 0.09}, {0.0}), Error);
    try {
        to_fucik_point({1.0, 0.09}, {0.0});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_input);
    }
}

TEST_CASE("necessary interval") {
    auto iv = necessary_interval({1.0, 0.09});
    REQUIRE_FALSE(iv.empty());
    CHECK(iv.lo() == doctest::Approx(std::pow(0.36, 0.25)).epsilon(1e-14));
    CHECK(iv.hi() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(iv.kind() == IntervalKind::necessary);

    // endpoints land on alpha = 1 and beta = 1
    auto lo = to_fucik_point({1.0, 0.09}, {iv.lo()});
    auto hi = to_fucik_point({1.0, 0.09}, {iv.hi()});
    CHECK(lo.beta == doctest::Approx(1.0));
    CHECK(hi.alpha == doctest::Approx(1.0));

    CHECK(necessary_interval({1.0, 1.0}).empty());
    CHECK(necessary_interval({0.5, 1.0}).empty());
    CHECK_FALSE(necessary_interval({0.5, 1.0}).reason().empty());
}

TEST_CASE("interval containment") {
    auto outer = SpeedInterval::make(1.0, 2.0, IntervalKind::necessary);
    auto inner = SpeedInterval::make(1.2, 1.8, IntervalKind::sufficient_poly);
    auto none = SpeedInterval::none(IntervalKind::sufficient_pade, "nothing");
    CHECK(inner.within(outer));
    CHECK_FALSE(outer.within(inner));
    CHECK(none.within(outer));
    CHECK(outer.contains(1.5));
    CHECK_FALSE(outer.contains(2.5));
    CHECK(inner.length() == doctest::Approx(0.6));
    CHECK(none.length() == 0.0);
    CHECK(std::string(kind_name(IntervalKind::sufficient_pade)).size() > 0);
    CHECK(SpeedInterval::make(2.0, 1.0, IntervalKind::necessary).empty());
}
