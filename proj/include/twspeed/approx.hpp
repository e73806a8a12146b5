#pragma once

#include <optional>
#include <string>
#include <vector>

namespace twspeed {

// Integrals of a single rational semi-wave of half-width x and shape
// parameter p: g = int u^2, m = int u'^2, n = int u''^2.
struct SemiWaveIntegrals {
    double g = 0.0;
    double m = 0.0;
    double n = 0.0;
};

// Values at p = 0 are the polynomial-wave limits.
SemiWaveIntegrals gmn(double p, double x);
SemiWaveIntegrals gmn_dx(double p, double x);
SemiWaveIntegrals gmn_dp(double p, double x);

double bound_poly(double x1, double x2, double q);
double bound_pade(double x1, double x2, double p1, double p2, double q);

struct EnvelopeSample {
    double parameter = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    bool in_omega = false;
};

EnvelopeSample make_sample(double parameter, double alpha, double beta);

double Q_pair(double x1, double x2);
EnvelopeSample mu_T(double T, double x1);
EnvelopeSample mu(double x1);
double P_curve(double alpha);
double Q_ray(double s);
double Bstar(double s);
// Inverse of Q_ray on (0, inf); Q_ray is strictly decreasing.
double Q_ray_inverse(double q);

double R_pade(double p1, double p2, double x1, double x2);
EnvelopeSample eta_T(double T, double p1, double p2, double x1);

// Left-hand side of the line family alpha*G1 + beta*G2 = 2M1 + 2M2 - N1 - N2.
double line_residual(double alpha, double beta, double x1, double x2, double p1, double p2);

struct EtaState {
    double alpha = 0.0;
    double beta = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
    double T = 0.0;
};

struct EtaSolution {
    double x1 = 0.0;
    EtaState state;
    double residual = 0.0;  // max-norm of the five equations
    int iterations = 0;
};

// The five residuals F, dF/dx1, dF/dp1, dF/dp2, dF/dT at fixed x1.
std::vector<double> eta_residuals(double x1, const EtaState& s);

// Seeds from (p1, p2, T) = (1/10, 3/20, 20/3) at x1 = 6/5 and continues in x1.
EtaSolution eta_numeric(double x1);
// Newton from an explicit starting state; throws no_convergence on failure.
EtaSolution eta_solve(double x1, const EtaState& guess);

struct EtaCurvePoint {
    double x1 = 0.0;
    std::optional<EtaSolution> solution;
    std::string status;
};
std::vector<EtaCurvePoint> eta_curve(const std::vector<double>& x1_values);

struct PadeChoice {
    double x1 = 0.0;
    double x2 = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
    double bound = 0.0;
};

// Maximizer of bound_poly over (x1, x2) for slope q, in closed form.
PadeChoice best_poly(double q);
// Starts from best_poly and improves (p1, p2) >= 0 by a bounded search, so
// the result is never below best_poly(q).bound.
PadeChoice best_pade(double q);

}  // namespace twspeed
