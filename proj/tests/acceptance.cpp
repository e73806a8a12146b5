// Acceptance run: one line per criterion, nonzero exit if any hard one fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "twspeed/approx.hpp"
#include "twspeed/error.hpp"
#include "twspeed/functional.hpp"
#include "twspeed/spectra.hpp"
#include "twspeed/wavespeed.hpp"

using namespace twspeed;

namespace {

// pinned tolerances
constexpr double kEigenTol = 1e-8;
constexpr double kExactBetaTol = 1e-6;
constexpr double kPrintedBetaTol = 1e-3;
constexpr double kLemmaTol = 1e-8;
constexpr double kEnvelopeTol = 1e-12;
constexpr double kSlopeRelTol = 0.01;
constexpr double kLimitRelTol = 1e-5;
constexpr double kLimitP = 1e-8;
constexpr double kSandwichSlack = 1e-3;

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body,
               bool hard = true) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("threw: ") + e.what()};
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0.0 && dt > budget_s) {
        out.pass = false;
        out.detail += " (over time budget)";
    }
    if (hard && !out.pass) ++failures;
    std::printf("[%s] %2d %s  %.2fs  %s\n", out.pass ? "PASS" : "FAIL", id, title, dt, out.detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, double a = 0, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

Outcome c1() {
    double worst = 0.0;
    for (int k = 1; k <= 3; ++k) {
        double expect = std::pow((4.0 * k * k - 1) / (4.0 * k * k + 1), 2);
        worst = std::max(worst, std::abs(dirichlet_eigenvalue(1, dirichlet_rk(k)) - expect));
    }
    return {worst <= kEigenTol, fmt("max |err| = %.2e", worst)};
}

Outcome c2() {
    struct Case {
        int k, sign;
        double beta, tol;
    };
    bool ok = true;
    std::string detail;
    for (Case c : {Case{1, -1, 9.0 / 25.0, kExactBetaTol}, Case{2, 1, 0.42278, kPrintedBetaTol},
                   Case{3, -1, 0.45597, kPrintedBetaTol}, Case{6, 1, 0.48204, kPrintedBetaTol}}) {
        CurveOptions opt;
        opt.alpha_max = 4.0;
        auto curve = dirichlet_fucik_curve(c.k, c.sign, opt);
        const auto& s = curve.samples.back();
        bool hit = std::abs(s.alpha - 4.0) < 1e-12 && std::abs(s.beta - c.beta) <= c.tol;
        ok = ok && hit;
        detail += fmt("r_%g: %.8f  ", c.k, s.beta);
    }
    return {ok, detail};
}

Outcome c3() {
    std::mt19937 rng(20261015);
    std::uniform_real_distribution<double> ua(0.0, 8.0), ub(0.0, 1.0);
    CubedCosine v0;
    auto q = split_integrals(v0);
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        double a = ua(rng), b = ub(rng);
        worst = std::max(worst, std::abs(eval_J(a, b, q) - (b - 9.0 / 25.0)));
    }
    return {worst <= kLemmaTol, fmt("max |J - (beta - 9/25)| = %.2e", worst)};
}

Outcome c4() {
    double worst = std::abs(P_curve(5.0 / 6.0) - 5.0 / 6.0);
    for (double s : {0.5, 1.0, 2.0}) worst = std::max(worst, std::abs(P_curve(Q_ray(s) * Bstar(s)) - Bstar(s)));
    return {worst <= kEnvelopeTol, fmt("max |err| = %.2e", worst)};
}

Outcome c5() {
    const SemiWaveProfile poly{1.0, 7.0 / 3.0, 0.0, 0.0};
    const SemiWaveProfile pade{1.0, 7.0 / 3.0, 1.0 / 20.0, 1.0 / 10.0};
    const double settings[][2] = {{0.0, 0.0}, {4.0, 0.36}};
    double worst = 0.0;
    for (const auto* prof : {&poly, &pade})
        for (const auto& ab : settings) {
            auto fit = verify_expansion(*prof, ab[0], ab[1], 10, 40);
            worst = std::max(worst, rel(fit.slope, expansion_slope(*prof, ab[0], ab[1])));
        }
    return {worst <= kSlopeRelTol, fmt("max relative slope error = %.2e", worst)};
}

Outcome c6() {
    double worst = 0.0;
    for (double x : {0.7, 1.2, 2.0}) {
        auto g = gmn(kLimitP, x);
        worst = std::max({worst, rel(g.g, 4 * x * x * x / 15), rel(g.m, 2 * x / 3), rel(g.n, 2 / x)});
    }
    for (double q : {1.5, 4.0})
        worst = std::max(worst, rel(bound_pade(1.2, 32.0 / 15.0, kLimitP, kLimitP, q), bound_poly(1.2, 32.0 / 15.0, q)));
    worst = std::max(worst, rel(R_pade(kLimitP, kLimitP, 1.2, 32.0 / 15.0), Q_pair(1.2, 32.0 / 15.0)));
    return {worst <= kLimitRelTol, fmt("max relative error = %.2e", worst)};
}

Outcome c7() {
    bool ok = true, slack_ok = true;
    std::string detail;
    for (double q : {1.5, 2.0, 4.0, 8.0}) {
        double hat = periodic_envelope(q).beta_star;
        double star = beta_star_dirichlet(q, default_dirichlet_grid()).beta_star;
        double bp = best_poly(q).bound, bq = best_pade(q).bound;
        ok = ok && std::max(9.0 / 25.0, 1.0 / q) < hat && hat <= 1.0 && bp <= bq;
        slack_ok = slack_ok && bq <= star + kSandwichSlack;
        detail += fmt("q=%g: %.4f<=%.4f", q, bp, bq) + fmt("<=%.5f, hat %.5f  ", star, hat);
    }
    if (!slack_ok) detail += "(estimate ordering violated beyond slack)";
    return {ok && slack_ok, detail};
}

Outcome c8() {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> ua(0.1, 10.0), ur(0.02, 0.98);
    int nonempty = 0;
    for (int i = 0; i < 20; ++i) {
        PhysicalParams p{ua(rng), 0.0};
        p.b = p.a * ur(rng);
        double q = p.a / p.b;
        auto bp = best_poly(q);
        auto bq = best_pade(q);
        auto nec = necessary_interval(p);
        auto poly = sufficient_interval_poly(p, bp.x1, bp.x2);
        auto pade = sufficient_interval_pade(p, bq.x1, bq.x2, bq.p1, bq.p2);
        auto opt = optimal_interval_estimate(p, estimate_beta_star(q, BetaStarSource::periodic_sup));
        bool ok = poly.within(nec) && pade.within(nec) && opt.within(nec) && poly.within(pade) && pade.within(opt);
        if (!ok) return {false, fmt("violated at a=%.6g b=%.6g", p.a, p.b)};
        nonempty += !poly.empty();
    }
    return {true, fmt("20 draws, %g with nonempty poly interval", nonempty)};
}

Outcome c9() {
    std::string detail;
    for (double q : {2.0, 4.0}) {
        double d = beta_star_dirichlet(q, default_dirichlet_grid()).beta_star;
        double p = periodic_envelope(q).beta_star;
        detail += fmt("q=%g |dirichlet - periodic| = %.3e  ", q, std::abs(d - p));
    }
    return {true, detail + "(report only)"};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

Outcome c10() {
#ifdef TWSPEED_CLI_PATH
    const std::string cli = TWSPEED_CLI_PATH;
    const char* cmds[] = {"verify --suite eigen", "verify --suite fucik-paper-values --format json",
                          "curve --kind P --samples 200", "curve --kind periodic-fucik --T 'sqrt(4.6)*pi' --alpha-max 6",
                          "curve --kind dirichlet-fucik --k 2 --sign + --alpha 4 --format json"};
    int idx = 0;
    for (const char* cmd : cmds) {
        std::string out[2];
        for (int run = 0; run < 2; ++run) {
            std::string path = "acceptance_det_" + std::to_string(idx) + "_" + std::to_string(run) + ".out";
            std::string line = "'" + cli + "' " + cmd + " > " + path + " 2>/dev/null";
            if (std::system(line.c_str()) != 0) return {false, std::string("command failed: ") + cmd};
            out[run] = slurp(path);
            std::remove(path.c_str());
        }
        if (out[0] != out[1] || out[0].empty()) return {false, std::string("outputs differ: ") + cmd};
        ++idx;
    }
    return {true, fmt("%g commands byte-identical across two runs", idx)};
#else
    return {false, "CLI path not configured"};
#endif
}

}  // namespace

int main() {
    criterion(1, "Dirichlet eigenvalue closed form", 1.0, c1);
    criterion(2, "Fucik beta values at alpha = 4", 30.0, c2);
    criterion(3, "J(v0) = beta - 9/25", 1.0, c3);
    criterion(4, "envelope identity on P", 1.0, c4);
    criterion(5, "expansion slopes", 60.0, c5);
    criterion(6, "limit reductions at p = 1e-8", 0.0, c6);
    criterion(7, "bound sandwich", 0.0, c7);
    criterion(8, "interval nesting", 0.0, c8);
    criterion(9, "Dirichlet vs periodic envelope", 0.0, c9, false);
    criterion(10, "CLI determinism", 0.0, c10);
    std::printf("%s\n", failures ? "acceptance: FAILED" : "acceptance: all criteria passed");
    return failures ? 1 : 0;
}
