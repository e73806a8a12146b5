#include "twspeed/wavespeed.hpp"

#include <algorithm>
#include <cmath>

#include "roots.hpp"
#include "twspeed/approx.hpp"
#include "twspeed/error.hpp"

namespace twspeed {

const char* verdict_name(Verdict v) noexcept {
    switch (v) {
    case Verdict::in_omega_minus: return "in-omega-minus";
    case Verdict::in_omega_plus: return "in-omega-plus";
    case Verdict::undecided: return "undecided";
    }
    return "unknown";
}

const char* source_name(VerdictSource s) noexcept {
    switch (s) {
    case VerdictSource::poly_bound: return "poly-bound";
    case VerdictSource::pade_bound: return "pade-bound";
    case VerdictSource::P_curve: return "P-curve";
    case VerdictSource::eta_curve: return "eta-curve";
    case VerdictSource::spectra_estimate: return "spectra-estimate";
    }
    return "unknown";
}

namespace {

void require_ordered(PhysicalParams p) {
    if (!std::isfinite(p.a) || !std::isfinite(p.b) || !(p.b >= 0.0))
        throw Error(Errc::invalid_input, "stiffnesses must be finite with b >= 0");
}

}  // namespace

SpeedInterval interval_from_bound(PhysicalParams params, double bound, IntervalKind kind) {
    require_ordered(params);
    if (!(params.a > params.b && params.b > 0.0))
        return SpeedInterval::none(kind, "sufficient conditions need a > b > 0");
    if (!(bound > params.b / params.a))
        return SpeedInterval::none(kind, "bound does not exceed b/a");
    return SpeedInterval::make(std::pow(4.0 * params.b / bound, 0.25), std::pow(4.0 * params.a, 0.25), kind);
}

SpeedInterval sufficient_interval_poly(PhysicalParams params, double x1, double x2) {
    if (!(x1 > 0.0) || !(x2 > 0.0)) throw Error(Errc::invalid_input, "half-widths must be positive");
    if (!(params.a > params.b && params.b > 0.0))
        return SpeedInterval::none(IntervalKind::sufficient_poly, "sufficient conditions need a > b > 0");
    return interval_from_bound(params, bound_poly(x1, x2, params.a / params.b), IntervalKind::sufficient_poly);
}

SpeedInterval sufficient_interval_pade(PhysicalParams params, double x1, double x2, double p1, double p2) {
    if (!(x1 > 0.0) || !(x2 > 0.0)) throw Error(Errc::invalid_input, "half-widths must be positive");
    if (!(p1 >= 0.0) || !(p2 >= 0.0)) throw Error(Errc::invalid_input, "shape parameters must be >= 0");
    if (!(params.a > params.b && params.b > 0.0))
        return SpeedInterval::none(IntervalKind::sufficient_pade, "sufficient conditions need a > b > 0");
    return interval_from_bound(params, bound_pade(x1, x2, p1, p2, params.a / params.b),
                               IntervalKind::sufficient_pade);
}

BetaStarEstimate estimate_beta_star(double q, BetaStarSource source) {
    if (source == BetaStarSource::periodic_sup) return periodic_envelope(q);
    return beta_star_dirichlet(q, default_dirichlet_grid());
}

SpeedInterval optimal_interval_estimate(PhysicalParams params, const BetaStarEstimate& estimate) {
    if (params.b > 0.0 && std::abs(estimate.q - params.a / params.b) > 1e-9 * estimate.q)
        throw Error(Errc::invalid_input, "estimate was computed for a different ratio a/b");
    return interval_from_bound(params, estimate.beta_star, IntervalKind::sufficient_optimal);
}

namespace {

RegionVerdict base_verdict(WaveSpeed speed, PhysicalParams params, VerdictSource source) {
    require_ordered(params);
    RegionVerdict v;
    v.point = to_fucik_point(params, speed);
    v.source = source;
    return v;
}

// Common tail: the point is in the negative region when it lies strictly
// below `bound` inside Omega.
RegionVerdict decide(RegionVerdict v, double bound) {
    v.margin = bound - v.point.beta;
    if (!(v.point.alpha > 1.0)) {
        v.reason = "alpha <= 1: outside Omega";
        return v;
    }
    if (!(v.point.beta > 0.0)) {
        v.reason = "beta <= 0: outside Omega";
        return v;
    }
    if (v.point.beta >= 1.0) {
        v.reason = "beta >= 1: outside Omega, the functional has no negative values there";
        return v;
    }
    if (v.point.beta < bound) {
        v.verdict = Verdict::in_omega_minus;
        v.reason = "strictly below the bound";
    } else {
        v.reason = "not below the bound";
    }
    return v;
}

}  // namespace

RegionVerdict region_verdict_poly(WaveSpeed speed, PhysicalParams params, double x1, double x2) {
    auto v = base_verdict(speed, params, VerdictSource::poly_bound);
    // A ray bound at q0 = alpha/beta certifies everything below (q0 B, B).
    if (!(v.point.beta > 0.0)) return decide(v, 0.0);
    return decide(v, bound_poly(x1, x2, v.point.alpha / v.point.beta));
}

RegionVerdict region_verdict_pade(WaveSpeed speed, PhysicalParams params, double x1, double x2, double p1,
                                  double p2) {
    auto v = base_verdict(speed, params, VerdictSource::pade_bound);
    if (!(v.point.beta > 0.0)) return decide(v, 0.0);
    return decide(v, bound_pade(x1, x2, p1, p2, v.point.alpha / v.point.beta));
}

RegionVerdict region_verdict_P(WaveSpeed speed, PhysicalParams params) {
    auto v = base_verdict(speed, params, VerdictSource::P_curve);
    if (!(v.point.alpha > 0.0)) return decide(v, 0.0);
    return decide(v, P_curve(v.point.alpha));
}

RegionVerdict region_verdict_eta(WaveSpeed speed, PhysicalParams params, double T, double p1, double p2) {
    if (!(T > 0.0) || !(p1 >= 0.0) || !(p2 >= 0.0))
        throw Error(Errc::invalid_input, "eta verdict needs T > 0 and p1, p2 >= 0");
    auto v = base_verdict(speed, params, VerdictSource::eta_curve);
    double alpha = v.point.alpha;
    double half = T / 2.0;
    auto excess = [&](double x1) { return R_pade(p1, p2, x1, half - x1) - alpha; };
    auto beta_at = [&](double x1) { return R_pade(p2, p1, half - x1, x1); };

    // Rectangle semantics: the bound at alpha is the largest curve beta among
    // curve points with alpha-coordinate >= alpha.
    constexpr int kScan = 400;
    double best = -INFINITY, best_x1 = 0.0;
    double prev_x = 0.0, prev_f = 0.0;
    for (int i = 0; i <= kScan; ++i) {
        double x1 = half * (1e-3 + (1.0 - 2e-3) * i / kScan);
        double f = excess(x1);
        if (f >= 0.0 && beta_at(x1) > best) {
            best = beta_at(x1);
            best_x1 = x1;
        }
        if (i > 0 && std::isfinite(f) && std::isfinite(prev_f) && (f > 0) != (prev_f > 0)) {
            double root = detail::solve_bracketed(excess, prev_x, x1);
            double b = beta_at(root);
            if (b > best) {
                best = b;
                best_x1 = root;
            }
        }
        prev_x = x1;
        prev_f = f;
    }
    if (!std::isfinite(best)) {
        v.reason = "no curve parameter reaches this alpha";
        v.margin = -INFINITY;
        return v;
    }
    v.matched_x1 = best_x1;
    return decide(v, best);
}

RegionVerdict region_verdict_spectra(WaveSpeed speed, PhysicalParams params, double plus_margin) {
    auto v = base_verdict(speed, params, VerdictSource::spectra_estimate);
    v.estimate_based = true;
    if (!(v.point.alpha > 1.0) || !(v.point.beta > 0.0) || v.point.beta >= 1.0) return decide(v, 0.0);
    double q = v.point.alpha / v.point.beta;
    auto lower = beta_star_dirichlet(q, default_dirichlet_grid());
    v = decide(v, lower.beta_star);
    if (v.verdict == Verdict::in_omega_minus) return v;
    auto upper = periodic_envelope(q);
    if (v.point.beta > upper.beta_star + plus_margin) {
        v.verdict = Verdict::in_omega_plus;
        v.margin = upper.beta_star - v.point.beta;
        v.reason = "above the periodic envelope estimate";
    } else {
        v.reason = "between the Dirichlet and periodic estimates";
    }
    return v;
}

}  // namespace twspeed
