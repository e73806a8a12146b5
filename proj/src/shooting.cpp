#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "newton.hpp"
#include "twspeed/error.hpp"
#include "twspeed/spectra.hpp"

namespace twspeed {

using std::numbers::pi;

namespace {

using State = std::array<double, 4>;

// v'''' = -2 v'' - c v, where c is alpha on {v > 0} and beta on {v < 0}.
State rhs(const State& y, double c) { return {y[1], y[2], y[3], -2.0 * y[2] - c * y[0]}; }

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

struct Step {
    State y;
    double err;  // scaled error norm, accept when <= 1
};

Step dp_step(const State& y, double h, double c, const ShootOptions& opt) {
    (void)c2, (void)c3, (void)c4, (void)c5;  // autonomous system: stage times unused
    auto axpy = [](const State& base, std::initializer_list<std::pair<double, const State*>> terms, double h) {
        State out = base;
        for (auto [a, k] : terms)
            for (int i = 0; i < 4; ++i) out[i] += h * a * (*k)[i];
        return out;
    };
    State k1 = rhs(y, c);
    State k2 = rhs(axpy(y, {{a21, &k1}}, h), c);
    State k3 = rhs(axpy(y, {{a31, &k1}, {a32, &k2}}, h), c);
    State k4 = rhs(axpy(y, {{a41, &k1}, {a42, &k2}, {a43, &k3}}, h), c);
    State k5 = rhs(axpy(y, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}, h), c);
    State k6 = rhs(axpy(y, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}, h), c);
    State yn = axpy(y, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}}, h);
    State k7 = rhs(yn, c);
    double err = 0.0;
    for (int i = 0; i < 4; ++i) {
        double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(yn[i]));
        err = std::max(err, std::abs(ei) / sc);
    }
    return {yn, err};
}

// Integrates from 0 to r. The coefficient switches exactly where v changes
// sign: a step that crosses zero is shortened to land on the crossing.
State integrate(double r, double alpha, double beta, const State& y0, const ShootOptions& opt) {
    State y = y0;
    int mode = y[0] >= 0.0 ? 1 : -1;
    double t = 0.0, h = 1e-2;
    long guard = 0;
    while (t < r) {
        if (++guard > 5'000'000) throw Error(Errc::numerical_failure, "integrator step budget exhausted");
        h = std::min(h, r - t);
        double c = mode > 0 ? alpha : beta;
        Step s = dp_step(y, h, c, opt);
        if (!std::isfinite(s.err)) throw Error(Errc::numerical_failure, "integrator produced non-finite state");
        if (s.err > 1.0) {
            h *= std::max(0.2, 0.9 * std::pow(s.err, -0.2));
            if (h < 1e-14 * std::max(1.0, r)) throw Error(Errc::numerical_failure, "integrator step underflow");
            continue;
        }
        double grow = s.err == 0.0 ? 5.0 : std::min(5.0, 0.9 * std::pow(s.err, -0.2));
        if (mode * s.y[0] < 0.0) {
            // Illinois regula falsi on the step length.
            double lo = 0.0, hi = h, flo = y[0], fhi = s.y[0];
            State ylo = y, yhi = s.y;
            int side = 0;
            for (int it = 0; it < 100 && hi - lo > 1e-15 * std::max(1.0, t); ++it) {
                double m = (lo * fhi - hi * flo) / (fhi - flo);
                if (!(m > lo && m < hi)) m = 0.5 * (lo + hi);
                State ym = dp_step(y, m, c, opt).y;
                if (ym[0] == 0.0) {
                    lo = hi = m;
                    ylo = yhi = ym;
                    break;
                }
                if ((ym[0] > 0) == (flo > 0)) {
                    lo = m;
                    flo = ym[0];
                    ylo = ym;
                    if (side == -1) fhi *= 0.5;
                    side = -1;
                } else {
                    hi = m;
                    fhi = ym[0];
                    yhi = ym;
                    if (side == 1) flo *= 0.5;
                    side = 1;
                }
                if (std::abs(ym[0]) < 1e-300) break;
            }
            y = yhi;
            y[0] = 0.0;
            t += hi;
            mode = -mode;
            h = std::max(h, 1e-6);
            continue;
        }
        y = s.y;
        t += h;
        h *= grow;
    }
    return y;
}

}  // namespace

std::array<double, 2> dirichlet_shoot_end(double r, double alpha, double beta, double delta, int sign,
                                          const ShootOptions& opt) {
    if (!(r > 0.0)) throw Error(Errc::invalid_input, "half-length must be positive");
    if (sign != 1 && sign != -1) throw Error(Errc::invalid_input, "sign must be +1 or -1");
    State y = integrate(r, alpha, beta, {double(sign), 0.0, delta, 0.0}, opt);
    return {y[0], y[1]};
}

namespace {

constexpr double kShootTol = 1e-10;
constexpr double kShootAccept = 1e-8;

template <class AlphaOf>
std::optional<Eigen::Vector2d> shoot_solve(double r, int sign, AlphaOf alpha_of, Eigen::Vector2d z,
                                           const ShootOptions& opt, double* residual = nullptr) {
    auto f = [&](const Eigen::Vector2d& v) -> std::optional<Eigen::Vector2d> {
        if (!(v[0] > 0.0)) return std::nullopt;
        try {
            auto e = dirichlet_shoot_end(r, alpha_of(v[0]), v[0], v[1], sign, opt);
            return Eigen::Vector2d(e[0], e[1]);
        } catch (const Error&) {
            return std::nullopt;
        }
    };
    auto res = detail::newton2(f, z, kShootTol);
    if (residual) *residual = res.residual;
    if (res.residual < kShootAccept) return res.z;
    return std::nullopt;
}

struct Diagonal {
    double lambda;
    double delta;
};

Diagonal diagonal_start(double r, int sign) {
    double lam = dirichlet_eigenvalue(1, r);
    return {lam, sign * dirichlet_curvature_ratio(r, lam)};
}

FucikCurve curve_from(double r, int sign, Diagonal start, const CurveOptions& opt) {
    FucikCurve out;
    Eigen::Vector2d z(start.lambda, start.delta);
    double alpha = start.lambda, h = opt.step;
    out.samples.push_back({alpha, z[0], z[1], r});
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
        auto sol = shoot_solve(r, sign, [next](double) { return next; }, z, {});
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
        out.samples.push_back({alpha, z[0], z[1], r});
        h = std::min(opt.step, 2.0 * h);
    }
    return out;
}

}  // namespace

FucikCurveSample dirichlet_fucik_shoot(double r, double alpha, int sign, double beta_guess, double delta_guess,
                                       const ShootOptions& opt) {
    double res = 0.0;
    auto sol = shoot_solve(r, sign, [alpha](double) { return alpha; }, Eigen::Vector2d(beta_guess, delta_guess),
                           opt, &res);
    if (!sol) throw Error(Errc::no_convergence, "shooting did not converge, boundary residual " + std::to_string(res));
    return {alpha, (*sol)[0], (*sol)[1], r};
}

FucikCurve dirichlet_fucik_curve(int k, int sign, const CurveOptions& opt) {
    if (sign != 1 && sign != -1) throw Error(Errc::invalid_input, "sign must be +1 or -1");
    double lam = dirichlet_rk_eigenvalue(k);
    double ratio = -(4.0 * k * k - 1.0) / (4.0 * k * k + 1.0);
    return curve_from(dirichlet_rk(k), sign, {lam, sign * ratio}, opt);
}

FucikCurve dirichlet_fucik_curve_r(double r, int sign, const CurveOptions& opt) {
    if (sign != 1 && sign != -1) throw Error(Errc::invalid_input, "sign must be +1 or -1");
    return curve_from(r, sign, diagonal_start(r, sign), opt);
}

FucikCurveSample dirichlet_ray(double r, int sign, double q, const ShootOptions& opt) {
    if (!(q >= 1.0)) throw Error(Errc::invalid_input, "ray slope must be >= 1");
    if (sign != 1 && sign != -1) throw Error(Errc::invalid_input, "sign must be +1 or -1");
    auto d = diagonal_start(r, sign);
    Eigen::Vector2d z(d.lambda, d.delta);
    double target = std::log(q), s = 0.0, h = 0.05;
    while (s < target) {
        double next = std::min(s + h, target);
        double qn = std::exp(next);
        auto sol = shoot_solve(r, sign, [qn](double b) { return qn * b; }, z, opt);
        if (!sol) {
            h *= 0.5;
            if (h < 1e-5) throw Error(Errc::estimation_failure, "Dirichlet ray continuation stalled");
            continue;
        }
        s = next;
        z = *sol;
        h = std::min(0.05, 2.0 * h);
    }
    return {q * z[0], z[0], z[1], r};
}

std::vector<double> default_dirichlet_grid() {
    std::vector<double> g;
    for (double m : {5.0, 10.0, 20.0, 40.0, 80.0}) g.push_back(m * pi / 2.0);
    return g;
}

BetaStarEstimate beta_star_dirichlet(double q, const std::vector<double>& r_grid) {
    if (!(q > 1.0)) throw Error(Errc::invalid_input, "ray slope must be > 1");
    BetaStarEstimate best;
    best.q = q;
    best.source = BetaStarSource::dirichlet_sup;
    best.beta_star = -1.0;
    for (double r : r_grid) {
        if (!(r > std::numbers::sqrt2 * pi / 2.0))
            throw Error(Errc::invalid_input, "grid half-lengths must exceed sqrt(2) pi / 2");
        for (int sign : {1, -1}) {
            try {
                auto s = dirichlet_ray(r, sign, q);
                if (s.beta > best.beta_star) {
                    best.beta_star = s.beta;
                    best.witness = r;
                    best.witness_sign = sign;
                    best.aux = s.aux;
                }
            } catch (const Error&) {
            }
        }
    }
    if (best.beta_star < 0.0) throw Error(Errc::estimation_failure, "no ray intersection on the grid");
    return best;
}

}  // namespace twspeed
