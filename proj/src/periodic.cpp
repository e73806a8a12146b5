#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <unsupported/Eigen/MatrixFunctions>

#include "newton.hpp"
#include "twspeed/error.hpp"
#include "twspeed/spectra.hpp"

namespace twspeed {

using std::numbers::pi;

PeriodicFactors periodic_factors(double alpha, double beta) {
    if (!(alpha > 1.0) || !(beta > 0.0 && beta < 1.0))
        throw Error(Errc::out_of_domain, "periodic factors need alpha > 1 and 0 < beta < 1");
    double phi = 0.5 * std::atan(std::sqrt(alpha - 1.0));
    double a4 = std::pow(alpha, 0.25);
    double root = std::sqrt(1.0 - beta);
    return {a4 * std::sin(phi), a4 * std::cos(phi), std::sqrt(1.0 - root), std::sqrt(1.0 + root)};
}

double periodic_fucik_F(double alpha, double beta, double tau, double T, int ij) {
    if (ij != 12 && ij != 21) throw Error(Errc::invalid_input, "index must be 12 or 21");
    auto f = periodic_factors(alpha, beta);
    double nui = ij == 12 ? f.nu1 : f.nu2;
    double nuj = ij == 12 ? f.nu2 : f.nu1;
    double m1 = f.mu1, m2 = f.mu2;
    double shift = nui * (tau - T / 2.0);
    return -2.0 * m1 * m2 * (std::cosh(2.0 * m1 * tau) + std::cos(2.0 * m2 * tau)) * nui * std::sin(shift) +
           (-m1 * (m1 * m1 - 3.0 * m2 * m2 + nuj * nuj) * std::sin(2.0 * m2 * tau) +
            m2 * (m2 * m2 - 3.0 * m1 * m1 - nuj * nuj) * std::sinh(2.0 * m1 * tau)) *
               std::cos(shift);
}

namespace {

Eigen::Matrix4d companion(double c) {
    Eigen::Matrix4d A = Eigen::Matrix4d::Zero();
    A(0, 1) = 1.0;
    A(1, 2) = 1.0;
    A(2, 3) = 1.0;
    A(3, 0) = -c;
    A(3, 2) = -2.0;
    return A;
}

double G_ij(const PeriodicFactors& f, double tau, int ij) {
    double nui = ij == 12 ? f.nu1 : f.nu2;
    double nuj = ij == 12 ? f.nu2 : f.nu1;
    double m1 = f.mu1, m2 = f.mu2;
    double num = m2 * (m2 * m2 - 3.0 * m1 * m1 - nuj * nuj) * std::sinh(2.0 * m1 * tau) -
                 m1 * (m1 * m1 - 3.0 * m2 * m2 + nuj * nuj) * std::sin(2.0 * m2 * tau);
    return num / (2.0 * m1 * m2 * nui * (std::cosh(2.0 * m1 * tau) + std::cos(2.0 * m2 * tau)));
}

}  // namespace

std::array<double, 2> periodic_matching_residual(double alpha, double beta, double tau, double T) {
    // Even solutions on each side of the node: columns 0 and 2 of the
    // fundamental matrix span them. P and Q are the combinations vanishing at
    // tau; a C^3 match needs (P', P'', P''') parallel to (Q', Q'', Q''').
    Eigen::Matrix4d Ea = (companion(alpha) * tau).exp();
    Eigen::Matrix4d Eb = (companion(beta) * (tau - T / 2.0)).exp();
    Eigen::Vector4d P = Ea(0, 2) * Ea.col(0) - Ea(0, 0) * Ea.col(2);
    Eigen::Vector4d Q = Eb(0, 2) * Eb.col(0) - Eb(0, 0) * Eb.col(2);
    return {P[1] * Q[2] - P[2] * Q[1], P[1] * Q[3] - P[3] * Q[1]};
}

double periodic_envelope_G(double alpha, double beta, double tau) {
    auto f = periodic_factors(alpha, beta);
    return f.nu2 * std::atan(G_ij(f, tau, 12)) - f.nu1 * (std::atan(G_ij(f, tau, 21)) - pi);
}

double periodic_envelope_G_tau(double alpha, double beta, double tau) {
    double h = 1e-6 * std::max(1.0, std::abs(tau));
    return (periodic_envelope_G(alpha, beta, tau + h) - periodic_envelope_G(alpha, beta, tau - h)) / (2.0 * h);
}

namespace {

constexpr double kPeriodicTol = 1e-12;

// Solves for (beta, tau) at fixed alpha = alpha_of(beta).
template <class AlphaOf>
std::optional<Eigen::Vector2d> periodic_solve(AlphaOf alpha_of, double T, Eigen::Vector2d z) {
    auto f = [&](const Eigen::Vector2d& v) -> std::optional<Eigen::Vector2d> {
        double beta = v[0], tau = v[1];
        if (!(beta > 0.0 && beta <= 1.0 + 1e-9) || !(tau > 0.0 && tau < T / 2.0)) return std::nullopt;
        auto r = periodic_matching_residual(alpha_of(beta), beta, tau, T);
        return Eigen::Vector2d(r[0], r[1]);
    };
    auto res = detail::newton2(f, z, kPeriodicTol);
    if (!res.converged) return std::nullopt;
    return res.z;
}

void check_period(double T) {
    if (!(T > 0.0) || !std::isfinite(T)) throw Error(Errc::invalid_input, "period must be positive");
    if (!(periodic_first_eigenvalue(T) > 0.0))
        throw Error(Errc::out_of_domain, "first periodic eigenvalue is not positive for this period");
}

}  // namespace

FucikCurve periodic_fucik_curve(double T, const CurveOptions& opt) {
    check_period(T);
    double lam = periodic_first_eigenvalue(T);
    FucikCurve out;
    Eigen::Vector2d z(lam, T / 4.0);
    double alpha = lam, h = opt.step;
    out.samples.push_back({alpha, lam, T / 4.0, T});
    while (true) {
        if (alpha >= opt.alpha_max - 1e-12) {
            out.termination = "alpha cap reached";
            break;
        }
        if (z[0] <= opt.beta_floor) {
            out.termination = "beta floor reached";
            break;
        }
        double next = opt.next_alpha(alpha, h);
        auto sol = periodic_solve([next](double) { return next; }, T, z);
        if (!sol) {
            h *= 0.5;
            if (h < opt.min_step) {
                out.termination = "continuation stalled at alpha = " + std::to_string(alpha);
                break;
            }
            continue;
        }
        alpha = next;
        z = *sol;
        out.samples.push_back({alpha, z[0], z[1], T});
        h = std::min(opt.step, 2.0 * h);
    }
    return out;
}

FucikCurveSample periodic_ray(double T, double q) {
    check_period(T);
    if (!(q >= 1.0)) throw Error(Errc::invalid_input, "ray slope must be >= 1");
    double lam = periodic_first_eigenvalue(T);
    Eigen::Vector2d z(lam, T / 4.0);
    double target = std::log(q), s = 0.0, h = 0.05;
    while (s < target) {
        double next = std::min(s + h, target);
        double qn = std::exp(next);
        auto sol = periodic_solve([qn](double b) { return qn * b; }, T, z);
        if (!sol) {
            h *= 0.5;
            if (h < 1e-6) throw Error(Errc::estimation_failure, "periodic ray continuation stalled");
            continue;
        }
        s = next;
        z = *sol;
        h = std::min(0.05, 2.0 * h);
    }
    return {q * z[0], z[0], z[1], T};
}

BetaStarEstimate periodic_envelope(double q) {
    if (!(q > 1.0)) throw Error(Errc::invalid_input, "ray slope must be > 1");
    auto beta_at = [q](double T) {
        try {
            return periodic_ray(T, q).beta;
        } catch (const Error&) {
            return -1.0;
        }
    };
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 2.0 * pi, b = std::sqrt(5.0) * pi;
    double c = b - invphi * (b - a), d = a + invphi * (b - a);
    double fc = beta_at(c), fd = beta_at(d);
    while (b - a > 1e-8) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = beta_at(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = beta_at(d);
        }
    }
    double Tbest = 0.5 * (a + b);
    // The maximum may sit on the bracket end.
    for (double Tc : {2.0 * pi, std::sqrt(5.0) * pi})
        if (beta_at(Tc) > beta_at(Tbest)) Tbest = Tc;
    FucikCurveSample s;
    try {
        s = periodic_ray(Tbest, q);
    } catch (const Error&) {
        throw Error(Errc::estimation_failure, "no ray intersection for any period in the search range");
    }
    BetaStarEstimate e;
    e.q = q;
    e.beta_star = s.beta;
    e.source = BetaStarSource::periodic_sup;
    e.witness = Tbest;
    e.aux = s.aux;
    return e;
}

}  // namespace twspeed
