#include <cmath>
#include <numbers>

#include "doctest.h"
#include "twspeed/error.hpp"
#include "twspeed/spectra.hpp"

using namespace twspeed;
using std::numbers::pi;

TEST_CASE("closed-form Dirichlet eigenvalues") {
    for (int k = 1; k <= 4; ++k) {
        double r = dirichlet_rk(k);
        CHECK(r == doctest::Approx(pi * std::sqrt(4.0 * k * k + 1.0) / 2.0));
        double expect = std::pow((4.0 * k * k - 1.0) / (4.0 * k * k + 1.0), 2);
        CHECK(dirichlet_rk_eigenvalue(k) == doctest::Approx(expect).epsilon(1e-14));
        CHECK(std::abs(dirichlet_eigenvalue(1, r) - expect) < 1e-8);
    }
}

TEST_CASE("eigenvalue bracket and branch") {
    auto b = dirichlet_bracket(1, 7.0);
    double l = dirichlet_eigenvalue(1, 7.0);
    CHECK(b.lower <= l);
    CHECK(l <= b.upper);
    CHECK(std::abs(dirichlet_char(7.0, l)) < 1e-8);
    auto br = dirichlet_branch(1, 3.0, 20.0, 0.5);
    REQUIRE(br.samples.size() > 10);
    for (std::size_t i = 1; i < br.samples.size(); ++i)
        if (br.samples[i].found && br.samples[i - 1].found) CHECK(br.samples[i].lambda > br.samples[i - 1].lambda);
    // later branches are shifted to larger half-lengths
    CHECK(dirichlet_eigenvalue(2, 10.0) < dirichlet_eigenvalue(1, 10.0));
}

TEST_CASE("eigenfunctions at r_k") {
    for (int k = 1; k <= 3; ++k) {
        double r = dirichlet_rk(k);
        CHECK(dirichlet_eigenfunction_rk(k, 0.0) == doctest::Approx(1.0));
        CHECK(std::abs(dirichlet_eigenfunction_rk(k, r)) < 1e-12);
        CHECK(std::abs(dirichlet_eigenfunction_rk(k, r, 1)) < 1e-12);
        // v'''' + 2 v'' + lambda v = 0
        double lam = dirichlet_rk_eigenvalue(k);
        for (double x : {0.3, 1.9}) {
            double res = dirichlet_eigenfunction_rk(k, x, 4) + 2.0 * dirichlet_eigenfunction_rk(k, x, 2) +
                         lam * dirichlet_eigenfunction_rk(k, x);
            CHECK(std::abs(res) < 1e-10);
        }
    }
}

TEST_CASE("periodic eigenvalues") {
    CHECK(periodic_eigenvalue(1, 2 * pi) == doctest::Approx(1.0));
    CHECK(periodic_eigenvalue(0, 5.0) == doctest::Approx(0.0));
    CHECK(periodic_first_eigenvalue(2 * pi) == doctest::Approx(1.0));
    CHECK(periodic_first_eigenvalue(7.0) < 1.0);
}

TEST_CASE("Dirichlet Fucik curves through alpha = 4") {
    // continuation oracle values
    struct Case {
        int k, sign;
        double beta;
    };
    for (Case c : {Case{1, -1, 0.36}, Case{2, 1, 0.4227824459}, Case{3, -1, 0.4559673334}, Case{6, 1, 0.4820416143}}) {
        CurveOptions opt;
        opt.alpha_max = 4.0;
        auto curve = dirichlet_fucik_curve(c.k, c.sign, opt);
        REQUIRE_FALSE(curve.samples.empty());
        CHECK(curve.samples.back().alpha == doctest::Approx(4.0));
        CHECK(std::abs(curve.samples.back().beta - c.beta) < 1e-7);
        CHECK(curve.samples.front().alpha == doctest::Approx(curve.samples.front().beta));
    }
}

TEST_CASE("shooting hits the boundary conditions") {
    CurveOptions opt;
    opt.alpha_max = 3.0;
    auto curve = dirichlet_fucik_curve(2, 1, opt);
    const auto& s = curve.samples.back();
    auto end = dirichlet_shoot_end(s.length, s.alpha, s.beta, s.aux, 1);
    CHECK(std::abs(end[0]) < 1e-8);
    CHECK(std::abs(end[1]) < 1e-8);
}

TEST_CASE("periodic Fucik curve") {
    double T = std::sqrt(4.6) * pi;
    auto curve = periodic_fucik_curve(T);
    REQUIRE(curve.samples.size() > 10);
    CHECK_FALSE(curve.termination.empty());
    for (const auto& s : curve.samples) {
        auto r = periodic_matching_residual(s.alpha, s.beta, s.aux, T);
        CHECK(std::abs(r[0]) < 1e-9);
        CHECK(std::abs(r[1]) < 1e-9);
        CHECK(s.beta > 0.0);
        CHECK(s.beta <= 1.0 + 1e-9);
    }
    // beta decreases as alpha grows along the curve
    for (std::size_t i = 1; i < curve.samples.size(); ++i)
        CHECK(curve.samples[i].beta <= curve.samples[i - 1].beta + 1e-12);
}

TEST_CASE("periodic envelope") {
    // golden-section oracle values
    const double expect[][2] = {{1.05, 0.97609}, {1.5, 0.82764}, {2.0, 0.73552}, {4.0, 0.58321}, {8.0, 0.49368}};
    for (const auto& e : expect) {
        auto est = periodic_envelope(e[0]);
        CHECK(std::abs(est.beta_star - e[1]) < 5e-5);
        CHECK(est.beta_star * e[0] > 1.0);
        CHECK(est.beta_star < 1.0);
        CHECK(est.source == BetaStarSource::periodic_sup);
        CHECK(std::abs(periodic_envelope_G(e[0] * est.beta_star, est.beta_star, est.aux)) < 1e-8);
    }
    CHECK(periodic_envelope(2.0).witness == doctest::Approx(6.293).epsilon(1e-3));
}

TEST_CASE("Dirichlet envelope estimate") {
    auto d = beta_star_dirichlet(2.0, default_dirichlet_grid());
    CHECK(std::abs(d.beta_star - 0.73508) < 5e-5);
    CHECK(d.beta_star <= periodic_envelope(2.0).beta_star + 1e-6);
    CHECK(d.source == BetaStarSource::dirichlet_sup);
}

TEST_CASE("invalid spectra inputs") {
    CHECK_THROWS_AS(dirichlet_eigenvalue(0, 5.0), Error);
    CHECK_THROWS_AS(dirichlet_char(5.0, 1.5), Error);
    CHECK_THROWS_AS(periodic_envelope(0.9), Error);
}
