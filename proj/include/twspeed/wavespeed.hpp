#pragma once

#include <string>

#include "twspeed/core.hpp"
#include "twspeed/spectra.hpp"

namespace twspeed {

enum class Verdict { in_omega_minus, in_omega_plus, undecided };
enum class VerdictSource { poly_bound, pade_bound, P_curve, eta_curve, spectra_estimate };

const char* verdict_name(Verdict v) noexcept;
const char* source_name(VerdictSource s) noexcept;

struct RegionVerdict {
    FucikPoint point;
    Verdict verdict = Verdict::undecided;
    VerdictSource source = VerdictSource::P_curve;
    double margin = 0.0;         // bound minus beta; positive inside
    double matched_x1 = 0.0;     // eta verdicts: curve parameter of the bound
    bool estimate_based = false;
    std::string reason;
};

// (root4(4b/bound), root4(4a)) when bound > b/a, otherwise empty.
SpeedInterval interval_from_bound(PhysicalParams params, double bound, IntervalKind kind);
SpeedInterval sufficient_interval_poly(PhysicalParams params, double x1, double x2);
SpeedInterval sufficient_interval_pade(PhysicalParams params, double x1, double x2, double p1, double p2);

BetaStarEstimate estimate_beta_star(double q, BetaStarSource source);
SpeedInterval optimal_interval_estimate(PhysicalParams params, const BetaStarEstimate& estimate);

RegionVerdict region_verdict_poly(WaveSpeed speed, PhysicalParams params, double x1, double x2);
RegionVerdict region_verdict_pade(WaveSpeed speed, PhysicalParams params, double x1, double x2, double p1,
                                  double p2);
RegionVerdict region_verdict_P(WaveSpeed speed, PhysicalParams params);
RegionVerdict region_verdict_eta(WaveSpeed speed, PhysicalParams params, double T, double p1, double p2);

// Minus below the Dirichlet estimate; plus (estimate-based) above the
// periodic envelope by more than `plus_margin`.
RegionVerdict region_verdict_spectra(WaveSpeed speed, PhysicalParams params, double plus_margin = 1e-3);

}  // namespace twspeed
