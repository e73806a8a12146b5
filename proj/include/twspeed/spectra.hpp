#pragma once

#include <array>
#include <string>
#include <vector>

namespace twspeed {

// ---- eigenvalues -----------------------------------------------------------

double periodic_eigenvalue(int n, double T);
// First periodic eigenvalue maximized over n, i.e. the one nearest 1.
double periodic_first_eigenvalue(double T);

// Characteristic function of the even Dirichlet problem on (-r, r); zeros are
// the eigenvalues. Throws out_of_domain for lambda >= 1.
double dirichlet_char(double r, double lambda);

struct Bracket {
    double lower = 0.0;
    double upper = 0.0;
};
// Interval that holds branch n at half-length r, built from the separating curves.
Bracket dirichlet_bracket(int n, double r);
double dirichlet_eigenvalue(int n, double r);

struct BranchSample {
    double r = 0.0;
    double lambda = 0.0;
    bool found = false;
    std::string status;
};

struct EigenBranch {
    int index = 0;
    std::vector<BranchSample> samples;
};

EigenBranch dirichlet_branch(int n, double r_lo, double r_hi, double step);

// Half-lengths where the first eigenvalue has a closed form.
double dirichlet_rk(int k);
double dirichlet_rk_eigenvalue(int k);
// Closed-form eigenfunction at r_k, normalized to value 1 at the origin.
double dirichlet_eigenfunction_rk(int k, double x, int order = 0);
// v''(0)/v(0) of the first eigenfunction at half-length r.
double dirichlet_curvature_ratio(double r, double lambda);

// ---- Fucik curves ----------------------------------------------------------

struct FucikCurveSample {
    double alpha = 0.0;
    double beta = 0.0;
    double aux = 0.0;     // junction tau (periodic) or v''(0) (Dirichlet)
    double length = 0.0;  // period T or half-length r
};

struct FucikCurve {
    std::vector<FucikCurveSample> samples;
    std::string termination;
};

struct CurveOptions {
    double alpha_max = 6.0;
    double step = 0.05;
    double min_step = 1e-4;
    double beta_floor = 0.01;
    std::vector<double> stops;  // alpha values the continuation must land on

    double next_alpha(double alpha, double step) const;
};

struct PeriodicFactors {
    double mu1, mu2, nu1, nu2;
};
PeriodicFactors periodic_factors(double alpha, double beta);

// ij is 12 or 21.
double periodic_fucik_F(double alpha, double beta, double tau, double T, int ij);
// C^3 matching residual of the one-node even periodic solution; valid for any
// alpha > 0 and beta in (0, 1].
std::array<double, 2> periodic_matching_residual(double alpha, double beta, double tau, double T);
double periodic_envelope_G(double alpha, double beta, double tau);
double periodic_envelope_G_tau(double alpha, double beta, double tau);

FucikCurve periodic_fucik_curve(double T, const CurveOptions& opt = {});
// Intersection of the first periodic curve with alpha = q beta.
FucikCurveSample periodic_ray(double T, double q);

enum class BetaStarSource { dirichlet_sup, periodic_sup };

struct BetaStarEstimate {
    double q = 0.0;
    double beta_star = 0.0;
    BetaStarSource source = BetaStarSource::periodic_sup;
    double witness = 0.0;  // T or r of the maximizer
    int witness_sign = 0;  // Dirichlet: sign of v(0)
    double aux = 0.0;      // tau or v''(0) at the maximizer
};

BetaStarEstimate periodic_envelope(double q);

// ---- Dirichlet shooting ----------------------------------------------------

struct ShootOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
};

// (v(r), v'(r)) for the initial data v(0) = sign, v''(0) = delta.
std::array<double, 2> dirichlet_shoot_end(double r, double alpha, double beta, double delta, int sign,
                                          const ShootOptions& opt = {});

FucikCurveSample dirichlet_fucik_shoot(double r, double alpha, int sign, double beta_guess,
                                       double delta_guess, const ShootOptions& opt = {});
FucikCurve dirichlet_fucik_curve(int k, int sign, const CurveOptions& opt = {});
FucikCurve dirichlet_fucik_curve_r(double r, int sign, const CurveOptions& opt = {});
// Intersection of the first Dirichlet curve with alpha = q beta.
FucikCurveSample dirichlet_ray(double r, int sign, double q, const ShootOptions& opt = {});

std::vector<double> default_dirichlet_grid();
BetaStarEstimate beta_star_dirichlet(double q, const std::vector<double>& r_grid);

}  // namespace twspeed
