#include "twspeed/verify.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "twspeed/approx.hpp"
#include "twspeed/error.hpp"
#include "twspeed/functional.hpp"
#include "twspeed/spectra.hpp"

namespace twspeed {

using std::numbers::pi;

bool SuiteReport::passed() const {
    for (const auto& c : checks)
        if (c.hard && !c.pass) return false;
    return true;
}

namespace {

Check near(std::string name, double value, double reference, double tol) {
    Check c;
    c.name = std::move(name);
    c.value = value;
    c.reference = reference;
    c.tolerance = tol;
    c.pass = std::isfinite(value) && std::abs(value - reference) <= tol;
    return c;
}

Check near_rel(std::string name, double value, double reference, double rel) {
    Check c = near(std::move(name), value, reference, rel * std::abs(reference));
    return c;
}

Check holds(std::string name, bool ok, std::string detail = {}) {
    Check c;
    c.name = std::move(name);
    c.pass = ok;
    c.value = ok ? 1.0 : 0.0;
    c.reference = 1.0;
    c.detail = std::move(detail);
    return c;
}

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

// Runs `body`, turning a thrown library error into a failed check.
template <class Body>
void guarded(SuiteReport& rep, const std::string& name, Body&& body) {
    try {
        body();
    } catch (const Error& e) {
        rep.checks.push_back(holds(name, false, e.what()));
    }
}

SuiteReport expansion_suite() {
    SuiteReport rep{"expansion", {}};
    const SemiWaveProfile poly{1.0, 7.0 / 3.0, 0.0, 0.0};
    const SemiWaveProfile pade{1.0, 7.0 / 3.0, 1.0 / 20.0, 1.0 / 10.0};
    const double settings[][2] = {{0.0, 0.0}, {4.0, 0.36}};
    for (const auto* prof : {&poly, &pade}) {
        const char* tag = prof->p1 == 0.0 ? "poly" : "pade";
        for (const auto& ab : settings) {
            std::string name = std::string("slope ") + tag + fmt(" alpha=%g beta=%g", ab[0], ab[1]);
            guarded(rep, name, [&] {
                auto fit = verify_expansion(*prof, ab[0], ab[1], 10, 40);
                rep.checks.push_back(near_rel(name, fit.slope, expansion_slope(*prof, ab[0], ab[1]), 0.01));
            });
        }
    }
    guarded(rep, "balanced slope", [&] {
        const SemiWaveProfile bal{std::sqrt(3.0), std::sqrt(3.0), 0.0, 0.0};
        auto fit = verify_expansion(bal, 5.0 / 6.0, 5.0 / 6.0, 10, 40);
        double scale = 0.0;
        for (double J : fit.J_values) scale = std::max(scale, std::abs(J));
        rep.checks.push_back(near("balanced slope", fit.slope, 0.0, 0.02 * scale / 40.0));
    });
    for (int n : {1, 2, 5}) {
        std::string name = fmt("closed form vs quadrature n=%g", n);
        guarded(rep, name, [&] {
            auto q = split_integrals(TestFunction(poly, n));
            auto c = closed_form_split(poly, n);
            double worst = 0.0;
            const double pairs[][2] = {{q.vpos_sq, c.vpos_sq},     {q.vneg_sq, c.vneg_sq},
                                       {q.dv_sq_pos, c.dv_sq_pos}, {q.dv_sq_neg, c.dv_sq_neg},
                                       {q.ddv_sq_pos, c.ddv_sq_pos}, {q.ddv_sq_neg, c.ddv_sq_neg}};
            for (const auto& p : pairs) worst = std::max(worst, std::abs(p[0] - p[1]) / std::abs(p[1]));
            rep.checks.push_back(near(name, worst, 0.0, 1e-9));
        });
    }
    return rep;
}

SuiteReport eigen_suite() {
    SuiteReport rep{"eigen", {}};
    for (int k = 1; k <= 3; ++k) {
        std::string name = fmt("branch 1 at r_%g", k);
        guarded(rep, name, [&] {
            rep.checks.push_back(near(name, dirichlet_eigenvalue(1, dirichlet_rk(k)), dirichlet_rk_eigenvalue(k), 1e-8));
        });
    }
    guarded(rep, "branch 1 increasing", [&] {
        double l5 = dirichlet_eigenvalue(1, 5.0), l10 = dirichlet_eigenvalue(1, 10.0),
               l20 = dirichlet_eigenvalue(1, 20.0);
        rep.checks.push_back(holds("branch 1 increasing", l5 < l10 && l10 < l20 && l20 < 1.0));
    });
    guarded(rep, "branch 1 crosses zero", [&] {
        double r0 = std::numbers::sqrt2 * pi / 2.0;
        rep.checks.push_back(holds("branch 1 crosses zero",
                                   dirichlet_eigenvalue(1, r0 * 0.99) < 0.0 && dirichlet_eigenvalue(1, r0 * 1.01) > 0.0));
    });
    for (int k = 1; k <= 3; ++k) {
        std::string name = fmt("eigenfunction boundary r_%g", k);
        double r = dirichlet_rk(k);
        double worst = std::max(std::abs(dirichlet_eigenfunction_rk(k, r)), std::abs(dirichlet_eigenfunction_rk(k, r, 1)));
        rep.checks.push_back(near(name, worst, 0.0, 1e-10));
    }
    rep.checks.push_back(near("periodic eigenvalue (1, 2pi)", periodic_eigenvalue(1, 2.0 * pi), 1.0, 1e-14));
    return rep;
}

SuiteReport fucik_suite() {
    SuiteReport rep{"fucik-paper-values", {}};
    struct Case {
        int k, sign;
        double beta, tol;
    };
    for (Case c : {Case{1, -1, 9.0 / 25.0, 1e-6}, Case{2, 1, 0.42278, 1e-3}, Case{3, -1, 0.45597, 1e-3},
                   Case{6, 1, 0.48204, 1e-3}}) {
        std::string name = fmt("shooting beta at alpha=4, r_%g sign %+g", c.k, c.sign);
        guarded(rep, name, [&] {
            CurveOptions opt;
            opt.alpha_max = 4.0;
            auto curve = dirichlet_fucik_curve(c.k, c.sign, opt);
            const auto& s = curve.samples.back();
            if (std::abs(s.alpha - 4.0) > 1e-12) throw Error(Errc::no_convergence, curve.termination);
            rep.checks.push_back(near(name, s.beta, c.beta, c.tol));
        });
    }
    for (double q : {2.0, 4.0}) {
        std::string name = fmt("periodic envelope system at q=%g", q);
        guarded(rep, name, [&] {
            auto e = periodic_envelope(q);
            double a = q * e.beta_star;
            double g = periodic_envelope_G(a, e.beta_star, e.aux);
            double gt = periodic_envelope_G_tau(a, e.beta_star, e.aux);
            Check ch = near(name, std::max(std::abs(g), std::abs(gt)), 0.0, 1e-6);
            ch.detail = fmt("G=%.3e dG/dtau=%.3e", g, gt);
            rep.checks.push_back(ch);
        });
    }
    return rep;
}

SuiteReport envelope_suite() {
    SuiteReport rep{"envelope-identities", {}};
    for (double s : {0.5, 1.0, 2.0})
        rep.checks.push_back(near(fmt("P(Q(s) B*(s)) = B*(s), s=%g", s), P_curve(Q_ray(s) * Bstar(s)), Bstar(s), 1e-12));
    rep.checks.push_back(near("P(5/6) = 5/6", P_curve(5.0 / 6.0), 5.0 / 6.0, 1e-12));
    auto m = mu(std::sqrt(3.0));
    rep.checks.push_back(near("mu(sqrt3) alpha", m.alpha, 5.0 / 6.0, 1e-12));
    rep.checks.push_back(near("mu(sqrt3) beta", m.beta, 5.0 / 6.0, 1e-12));
    double worst = 0.0;
    for (int i = 1; i <= 400; ++i) {
        auto sm = mu(0.05 + 4.0 * i / 400.0);
        if (sm.alpha > 0.0) worst = std::max(worst, std::abs(sm.beta - P_curve(sm.alpha)) / std::max(1.0, sm.beta));
    }
    rep.checks.push_back(near("mu lies on P", worst, 0.0, 1e-10));
    const double ab[][2] = {{0.3, 0.2}, {2.0, 0.5}, {7.5, 0.9}};
    CubedCosine v0;
    for (const auto& p : ab)
        rep.checks.push_back(near(fmt("cubed cosine J at (%g, %g)", p[0], p[1]), eval_J(p[0], p[1], v0),
                                  p[1] - 9.0 / 25.0, 1e-8));
    const double pz = 1e-8;
    for (double x : {0.7, 2.0}) {
        auto g = gmn(pz, x);
        rep.checks.push_back(near_rel(fmt("G limit x=%g", x), g.g, 4.0 * x * x * x / 15.0, 1e-5));
        rep.checks.push_back(near_rel(fmt("M limit x=%g", x), g.m, 2.0 * x / 3.0, 1e-5));
        rep.checks.push_back(near_rel(fmt("N limit x=%g", x), g.n, 2.0 / x, 1e-5));
    }
    rep.checks.push_back(near_rel("pade to poly", bound_pade(1.2, 32.0 / 15.0, pz, pz, 3.0),
                                  bound_poly(1.2, 32.0 / 15.0, 3.0), 1e-5));
    rep.checks.push_back(near_rel("R to Q", R_pade(pz, pz, 1.2, 32.0 / 15.0), Q_pair(1.2, 32.0 / 15.0), 1e-5));
    return rep;
}

SuiteReport conjecture_suite() {
    SuiteReport rep{"conjecture-compare", {}};
    for (double q : {2.0, 4.0}) {
        std::string name = fmt("dirichlet vs periodic at q=%g", q);
        guarded(rep, name, [&] {
            auto d = beta_star_dirichlet(q, default_dirichlet_grid());
            auto p = periodic_envelope(q);
            Check c = near(name, d.beta_star, p.beta_star, 5e-3);
            c.hard = false;
            c.detail = fmt("dirichlet witness r=%.6g, periodic witness T=%.6g", d.witness, p.witness);
            rep.checks.push_back(c);
        });
        if (!rep.checks.empty()) rep.checks.back().hard = false;
    }
    return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"expansion", "eigen", "fucik-paper-values", "envelope-identities",
                                                "conjecture-compare"};
    return names;
}

SuiteReport run_suite(const std::string& name) {
    if (name == "expansion") return expansion_suite();
    if (name == "eigen") return eigen_suite();
    if (name == "fucik-paper-values") return fucik_suite();
    if (name == "envelope-identities") return envelope_suite();
    if (name == "conjecture-compare") return conjecture_suite();
    throw Error(Errc::invalid_input, "unknown suite: " + name);
}

}  // namespace twspeed
