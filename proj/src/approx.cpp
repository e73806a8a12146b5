#include "twspeed/approx.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "dual.hpp"
#include "twspeed/error.hpp"

namespace twspeed {

using detail::Dual;

namespace {

// Each semi-wave integral has the form prefactor * (P(w) + Q(w) A(w)) / w^k
// with w = p x^2 and A(w) = arctan(sqrt w)/sqrt w. The bracket vanishes to
// order k at w = 0, so small w goes through a power series instead.
constexpr int kSeriesTerms = 40;
constexpr double kSeriesCutoff = 0.25;

struct Bracket {
    std::vector<double> P;
    std::vector<double> Q;
    int order;  // power of w divided out
    std::array<double, kSeriesTerms> series{};

    Bracket(std::vector<double> p, std::vector<double> q, int k)
        : P(std::move(p)), Q(std::move(q)), order(k) {
        std::array<double, kSeriesTerms + 8> full{};
        for (std::size_t i = 0; i < P.size(); ++i) full[i] += P[i];
        for (int j = 0; j < kSeriesTerms + 2; ++j) {
            double a = (j % 2 == 0 ? 1.0 : -1.0) / (2.0 * j + 1.0);
            for (std::size_t i = 0; i < Q.size(); ++i)
                if (i + j < full.size()) full[i + j] += Q[i] * a;
        }
        // full[0..order-1] vanish analytically; dropping them avoids
        // dividing rounding noise by w^order.
        for (int i = 0; i < kSeriesTerms; ++i) series[i] = full[i + order];
    }

    Dual eval(Dual w) const {
        if (w.v < kSeriesCutoff) {
            Dual acc(series[kSeriesTerms - 1]);
            for (int i = kSeriesTerms - 2; i >= 0; --i) acc = acc * w + Dual(series[i]);
            return acc;
        }
        Dual u = sqrt(w);
        Dual A = atan(u) / u;
        Dual acc = poly(P, w) + poly(Q, w) * A;
        Dual wk(1.0);
        for (int i = 0; i < order; ++i) wk = wk * w;
        return acc / wk;
    }

    static Dual poly(const std::vector<double>& c, Dual w) {
        Dual acc(c.back());
        for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) acc = acc * w + Dual(c[i]);
        return acc;
    }
};

const Bracket& g_bracket() {
    static const Bracket b({3.0, 1.0}, {-3.0, -2.0, 1.0}, 2);
    return b;
}
const Bracket& m_bracket() {
    static const Bracket b({-3.0, 8.0, 3.0}, {3.0, 9.0, 9.0, 3.0}, 1);
    return b;
}
const Bracket& n_bracket() {
    static const Bracket b({65.0, 10.0, 128.0, 70.0, 15.0}, {15.0, 75.0, 150.0, 150.0, 75.0, 15.0}, 0);
    return b;
}

struct DualGMN {
    Dual g, m, n;
};

DualGMN gmn_dual(Dual p, Dual x) {
    Dual w = p * x * x;
    Dual one(1.0);
    Dual g = x * x * x * (one + w) * (one + w) * g_bracket().eval(w) / Dual(4.0);
    Dual m = x * (one + w) * m_bracket().eval(w) / Dual(24.0);
    Dual n = n_bracket().eval(w) / (Dual(40.0) * (one + w) * x);
    return {g, m, n};
}

void check_gmn_args(double p, double x) {
    if (!(p >= 0.0) || !(x > 0.0) || !std::isfinite(p) || !std::isfinite(x))
        throw Error(Errc::invalid_input, "semi-wave integrals need p >= 0 and x > 0");
}

}  // namespace

SemiWaveIntegrals gmn(double p, double x) {
    check_gmn_args(p, x);
    auto r = gmn_dual(Dual(p), Dual(x));
    return {r.g.v, r.m.v, r.n.v};
}

SemiWaveIntegrals gmn_dx(double p, double x) {
    check_gmn_args(p, x);
    auto r = gmn_dual(Dual(p), Dual(x, 1.0));
    return {r.g.d, r.m.d, r.n.d};
}

SemiWaveIntegrals gmn_dp(double p, double x) {
    check_gmn_args(p, x);
    auto r = gmn_dual(Dual(p, 1.0), Dual(x));
    return {r.g.d, r.m.d, r.n.d};
}

double bound_poly(double x1, double x2, double q) {
    return (10.0 * (x1 + x2) - 15.0 * (1.0 / x1 + 1.0 / x2)) /
           (2.0 * x1 * x1 * x1 * q + 2.0 * x2 * x2 * x2);
}

double bound_pade(double x1, double x2, double p1, double p2, double q) {
    auto a = gmn(p1, x1);
    auto b = gmn(p2, x2);
    return (2.0 * a.m + 2.0 * b.m - a.n - b.n) / (a.g * q + b.g);
}

EnvelopeSample make_sample(double parameter, double alpha, double beta) {
    return {parameter, alpha, beta, alpha > 1.0 && beta > 0.0 && beta < 1.0};
}

double Q_pair(double x1, double x2) {
    return (10.0 * x1 * x1 * x2 - 20.0 * x1 + 5.0 * x2) / (2.0 * std::pow(x1, 4) * x2);
}

EnvelopeSample mu_T(double T, double x1) {
    if (!(x1 > 0.0 && x1 < T / 2.0)) throw Error(Errc::invalid_input, "mu_T needs 0 < x1 < T/2");
    double x2 = T / 2.0 - x1;
    return make_sample(x1, Q_pair(x1, x2), Q_pair(x2, x1));
}

EnvelopeSample mu(double x1) {
    if (!(x1 > 0.0)) throw Error(Errc::invalid_input, "mu needs x1 > 0");
    double x2 = 3.0 / x1;
    return make_sample(x1, Q_pair(x1, x2), Q_pair(x2, x1));
}

double P_curve(double alpha) {
    if (!(alpha > 0.0)) throw Error(Errc::invalid_input, "P needs alpha > 0");
    double t = 18.0 * alpha + 5.0;
    return (675.0 * alpha + 125.0 + std::sqrt(125.0 * t * t * t)) / (2916.0 * alpha * alpha);
}

double Q_ray(double s) {
    if (!(s > 0.0)) throw Error(Errc::invalid_input, "ray map needs s > 0");
    return (2.0 * s + 1.0) / (s * s * s * (s + 2.0));
}

double Bstar(double s) {
    if (!(s > 0.0)) throw Error(Errc::invalid_input, "B* needs s > 0");
    return 5.0 / 18.0 * s * (s + 2.0);
}

double Q_ray_inverse(double q) {
    if (!(q > 0.0)) throw Error(Errc::invalid_input, "ray map inverse needs q > 0");
    double lo = 1e-6, hi = 1e6;
    for (int i = 0; i < 200; ++i) {
        double mid = std::sqrt(lo * hi);
        if (Q_ray(mid) > q)
            lo = mid;
        else
            hi = mid;
        if (hi / lo - 1.0 < 1e-15) break;
    }
    return std::sqrt(lo * hi);
}

double R_pade(double p1, double p2, double x1, double x2) {
    auto a = gmn(p1, x1);
    auto b = gmn(p2, x2);
    auto ax = gmn_dx(p1, x1);
    auto bx = gmn_dx(p2, x2);
    double den = a.g * bx.g + ax.g * b.g;
    if (den == 0.0 || !std::isfinite(den))
        throw Error(Errc::singular, "vanishing denominator in the tangency ratio");
    double sum = 2.0 * a.m + 2.0 * b.m - a.n - b.n;
    double diff = 2.0 * ax.m - 2.0 * bx.m - ax.n + bx.n;
    return (bx.g * sum + b.g * diff) / den;
}

EnvelopeSample eta_T(double T, double p1, double p2, double x1) {
    if (!(x1 > 0.0 && x1 < T / 2.0)) throw Error(Errc::invalid_input, "eta_T needs 0 < x1 < T/2");
    double x2 = T / 2.0 - x1;
    return make_sample(x1, R_pade(p1, p2, x1, x2), R_pade(p2, p1, x2, x1));
}

double line_residual(double alpha, double beta, double x1, double x2, double p1, double p2) {
    auto a = gmn(p1, x1);
    auto b = gmn(p2, x2);
    return alpha * a.g + beta * b.g - 2.0 * a.m - 2.0 * b.m + a.n + b.n;
}

std::vector<double> eta_residuals(double x1, const EtaState& s) {
    double x2 = s.T / 2.0 - x1;
    if (!(x2 > 0.0) || !(s.p1 >= 0.0) || !(s.p2 >= 0.0))
        throw Error(Errc::out_of_domain, "eta system left its domain");
    auto a = gmn(s.p1, x1);
    auto b = gmn(s.p2, x2);
    auto ax = gmn_dx(s.p1, x1);
    auto bx = gmn_dx(s.p2, x2);
    auto ap = gmn_dp(s.p1, x1);
    auto bp = gmn_dp(s.p2, x2);
    double pos_x = s.alpha * ax.g - 2.0 * ax.m + ax.n;
    double neg_x = s.beta * bx.g - 2.0 * bx.m + bx.n;
    return {
        s.alpha * a.g + s.beta * b.g - 2.0 * a.m - 2.0 * b.m + a.n + b.n,
        pos_x - neg_x,
        s.alpha * ap.g - 2.0 * ap.m + ap.n,
        s.beta * bp.g - 2.0 * bp.m + bp.n,
        0.5 * neg_x,
    };
}

namespace {

constexpr double kEtaTol = 1e-10;
constexpr int kEtaMaxIter = 50;

Eigen::Matrix<double, 5, 1> pack(const EtaState& s) {
    Eigen::Matrix<double, 5, 1> z;
    z << s.alpha, s.beta, s.p1, s.p2, s.T;
    return z;
}

EtaState unpack(const Eigen::Matrix<double, 5, 1>& z) { return {z[0], z[1], z[2], z[3], z[4]}; }

std::optional<Eigen::Matrix<double, 5, 1>> try_residual(double x1, const Eigen::Matrix<double, 5, 1>& z) {
    try {
        auto r = eta_residuals(x1, unpack(z));
        Eigen::Matrix<double, 5, 1> out;
        for (int i = 0; i < 5; ++i) out[i] = r[i];
        if (!out.allFinite()) return std::nullopt;
        return out;
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace

EtaSolution eta_solve(double x1, const EtaState& guess) {
    if (!(x1 > 0.0)) throw Error(Errc::invalid_input, "eta needs x1 > 0");
    auto z = pack(guess);
    auto f = try_residual(x1, z);
    if (!f) throw Error(Errc::out_of_domain, "eta starting point outside the domain");
    for (int it = 0; it < kEtaMaxIter; ++it) {
        double norm = f->lpNorm<Eigen::Infinity>();
        if (norm < kEtaTol) return {x1, unpack(z), norm, it};
        Eigen::Matrix<double, 5, 5> J;
        for (int k = 0; k < 5; ++k) {
            auto zk = z;
            double h = 1e-7 * std::max(1.0, std::abs(z[k]));
            zk[k] += h;
            auto fk = try_residual(x1, zk);
            if (!fk) {
                zk[k] = z[k] - h;
                fk = try_residual(x1, zk);
                if (!fk) throw Error(Errc::no_convergence, "eta Jacobian left the domain");
                h = -h;
            }
            J.col(k) = (*fk - *f) / h;
        }
        Eigen::Matrix<double, 5, 1> step = J.fullPivLu().solve(-*f);
        double lambda = 1.0;
        bool accepted = false;
        for (int half = 0; half < 30; ++half, lambda *= 0.5) {
            auto zn = z + lambda * step;
            auto fn = try_residual(x1, zn);
            if (fn && fn->lpNorm<Eigen::Infinity>() < norm) {
                z = zn;
                f = fn;
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            throw Error(Errc::no_convergence,
                        "eta Newton stalled, residual " + std::to_string(norm));
        }
    }
    double norm = f->lpNorm<Eigen::Infinity>();
    if (norm < kEtaTol) return {x1, unpack(z), norm, kEtaMaxIter};
    throw Error(Errc::no_convergence, "eta Newton hit the iteration cap, residual " + std::to_string(norm));
}

namespace {

constexpr double kEtaSeedX1 = 1.2;
constexpr double kEtaStep = 0.01;

EtaSolution eta_seed() {
    constexpr double T = 20.0 / 3.0, p1 = 0.1, p2 = 0.15;
    auto start = eta_T(T, p1, p2, kEtaSeedX1);
    return eta_solve(kEtaSeedX1, {start.alpha, start.beta, p1, p2, T});
}

// Natural-parameter continuation from `from` to x1 with step halving.
EtaSolution continue_to(EtaSolution from, double x1) {
    double h = kEtaStep;
    while (std::abs(x1 - from.x1) > 1e-15) {
        double dir = x1 > from.x1 ? 1.0 : -1.0;
        double next = std::abs(x1 - from.x1) <= h ? x1 : from.x1 + dir * h;
        try {
            from = eta_solve(next, from.state);
            h = std::min(kEtaStep, 2.0 * h);
        } catch (const Error& e) {
            h *= 0.5;
            if (h < 1e-5)
                throw Error(Errc::no_convergence,
                            "eta continuation failed near x1 = " + std::to_string(next) + ": " + e.what());
        }
    }
    return from;
}

}  // namespace

EtaSolution eta_numeric(double x1) {
    if (!(x1 > 0.0)) throw Error(Errc::invalid_input, "eta needs x1 > 0");
    return continue_to(eta_seed(), x1);
}

std::vector<EtaCurvePoint> eta_curve(const std::vector<double>& x1_values) {
    std::vector<EtaCurvePoint> out(x1_values.size());
    std::vector<std::size_t> up, down;
    for (std::size_t i = 0; i < x1_values.size(); ++i) {
        out[i].x1 = x1_values[i];
        (x1_values[i] >= kEtaSeedX1 ? up : down).push_back(i);
    }
    std::sort(up.begin(), up.end(), [&](auto a, auto b) { return x1_values[a] < x1_values[b]; });
    std::sort(down.begin(), down.end(), [&](auto a, auto b) { return x1_values[a] > x1_values[b]; });
    auto seed = eta_seed();
    for (const auto* branch : {&up, &down}) {
        std::optional<EtaSolution> cur = seed;
        for (auto i : *branch) {
            if (!cur) {
                out[i].status = "skipped after earlier failure";
                continue;
            }
            try {
                cur = continue_to(*cur, x1_values[i]);
                out[i].solution = cur;
                out[i].status = "ok";
            } catch (const Error& e) {
                out[i].status = e.what();
                cur.reset();
            }
        }
    }
    return out;
}

PadeChoice best_poly(double q) {
    if (!(q > 0.0)) throw Error(Errc::invalid_input, "best_poly needs q > 0");
    double s = Q_ray_inverse(q);
    double x1 = std::sqrt(3.0 * s);
    double x2 = 3.0 / x1;
    return {x1, x2, 0.0, 0.0, bound_poly(x1, x2, q)};
}

PadeChoice best_pade(double q) {
    PadeChoice best = best_poly(q);
    auto value = [q](const std::array<double, 4>& v) {
        if (v[0] <= 0.0 || v[1] <= 0.0 || v[2] < 0.0 || v[3] < 0.0) return -1e300;
        double b = bound_pade(v[0], v[1], v[2], v[3], q);
        return std::isfinite(b) ? b : -1e300;
    };
    std::array<double, 4> v{best.x1, best.x2, 0.0, 0.0};
    double fv = value(v);
    // Compass search; every accepted move strictly improves the bound.
    int sweeps = 0;
    for (double step = 0.1; step > 1e-7; step *= 0.5) {
        bool moved = true;
        while (moved && ++sweeps < 20000) {
            moved = false;
            for (int k = 0; k < 4; ++k) {
                for (double sgn : {1.0, -1.0}) {
                    auto w = v;
                    w[k] += sgn * step;
                    double fw = value(w);
                    if (fw > fv + 1e-15) {
                        v = w;
                        fv = fw;
                        moved = true;
                    }
                }
            }
        }
    }
    return {v[0], v[1], v[2], v[3], fv};
}

}  // namespace twspeed
