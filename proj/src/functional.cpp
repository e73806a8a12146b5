#include "twspeed/functional.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>

#include "twspeed/approx.hpp"
#include "twspeed/error.hpp"

namespace twspeed {

using std::numbers::pi;

void SemiWaveProfile::validate() const {
    if (!(x1 > 0.0) || !(x2 > 0.0) || !std::isfinite(x1) || !std::isfinite(x2))
        throw Error(Errc::invalid_input, "semi-wave half-widths must be positive");
    if (!(p1 >= 0.0) || !(p2 >= 0.0) || !std::isfinite(p1) || !std::isfinite(p2))
        throw Error(Errc::invalid_input, "semi-wave shape parameters must be nonnegative");
}

namespace {

// Semi-wave of half-width h: (h/2)(1 - y^2/h^2)(1 + p h^2)/(1 + p y^2) and
// its first two derivatives.
void semi_wave(double y, double h, double p, double out[3]) {
    double A = 0.5 * h * (1.0 + p * h * h);
    double f0 = 1.0 - y * y / (h * h);
    double f1 = -2.0 * y / (h * h);
    double f2 = -2.0 / (h * h);
    double g0 = 1.0 / (1.0 + p * y * y);
    double g1 = -2.0 * p * y * g0 * g0;
    double g2 = (6.0 * p * p * y * y - 2.0 * p) * g0 * g0 * g0;
    out[0] = A * f0 * g0;
    out[1] = A * (f1 * g0 + f0 * g1);
    out[2] = A * (f2 * g0 + 2.0 * f1 * g1 + f0 * g2);
}

}  // namespace

TestFunction::TestFunction(SemiWaveProfile profile, int n) : profile_(profile), n_(n) {
    profile_.validate();
    if (n < 1) throw Error(Errc::invalid_input, "replication index must be >= 1");
    double T = profile_.period();
    s_ = n * T - profile_.x1;
    for (int k = 1 - n; k <= n - 1; ++k)
        pieces_.push_back({k * T - profile_.x1, k * T + profile_.x1, +1});
    for (int k = -n; k <= n - 1; ++k) {
        double c = (k + 0.5) * T;
        pieces_.push_back({c - profile_.x2, c + profile_.x2, -1});
    }
    std::sort(pieces_.begin(), pieces_.end(), [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
}

std::vector<double> TestFunction::junctions() const {
    std::vector<double> out;
    for (std::size_t i = 1; i < pieces_.size(); ++i) out.push_back(pieces_[i].lo);
    return out;
}

double TestFunction::eval(double x, int order) const {
    if (std::abs(x) >= s_) return 0.0;
    double T = profile_.period();
    double xr = x - T * std::floor((x + profile_.x1) / T);
    double u[3];
    double sign = 1.0;
    if (xr <= profile_.x1) {
        semi_wave(xr, profile_.x1, profile_.p1, u);
    } else {
        semi_wave(xr - 0.5 * T, profile_.x2, profile_.p2, u);
        sign = -1.0;
    }
    double s2 = s_ * s_;
    double w0 = 1.0 - x * x / s2, w1 = -2.0 * x / s2, w2 = -2.0 / s2;
    switch (order) {
    case 0: return sign * u[0] * w0;
    case 1: return sign * (u[1] * w0 + u[0] * w1);
    default: return sign * (u[2] * w0 + 2.0 * u[1] * w1 + u[0] * w2);
    }
}

double TestFunction::value(double x) const { return eval(x, 0); }
double TestFunction::d1(double x) const { return eval(x, 1); }
double TestFunction::d2(double x) const { return eval(x, 2); }

namespace {
const double kSqrt5 = std::sqrt(5.0);
const double kCubedCosScale = 4.0 / std::sqrt(5.0 * std::sqrt(5.0) * pi);
}  // namespace

CubedCosine::CubedCosine() { pieces_.push_back({-half_width(), half_width(), -1}); }

double CubedCosine::half_width() const { return kSqrt5 * pi / 2.0; }

double CubedCosine::value(double x) const {
    if (std::abs(x) >= half_width()) return 0.0;
    double c = std::cos(x / kSqrt5);
    return -kCubedCosScale * c * c * c;
}

double CubedCosine::d1(double x) const {
    if (std::abs(x) >= half_width()) return 0.0;
    double c = std::cos(x / kSqrt5), s = std::sin(x / kSqrt5);
    return 3.0 * kCubedCosScale * c * c * s / kSqrt5;
}

double CubedCosine::d2(double x) const {
    if (std::abs(x) >= half_width()) return 0.0;
    double c = std::cos(x / kSqrt5), s = std::sin(x / kSqrt5);
    return 3.0 * kCubedCosScale / 5.0 * (c * c * c - 2.0 * c * s * s);
}

QuadratureResult split_integrals(const CompactFunction& f) {
    using GL = boost::math::quadrature::gauss<double, 32>;
    QuadratureResult r;
    for (const auto& pc : f.pieces()) {
        double v2 = GL::integrate([&](double x) { double v = f.value(x); return v * v; }, pc.lo, pc.hi);
        double d2 = GL::integrate([&](double x) { double v = f.d1(x); return v * v; }, pc.lo, pc.hi);
        double dd2 = GL::integrate([&](double x) { double v = f.d2(x); return v * v; }, pc.lo, pc.hi);
        if (pc.sign > 0) {
            r.vpos_sq += v2;
            r.dv_sq_pos += d2;
            r.ddv_sq_pos += dd2;
        } else {
            r.vneg_sq += v2;
            r.dv_sq_neg += d2;
            r.ddv_sq_neg += dd2;
        }
    }
    return r;
}

double eval_J(double alpha, double beta, const QuadratureResult& q) {
    double J = q.ddv_sq_pos + q.ddv_sq_neg - 2.0 * (q.dv_sq_pos + q.dv_sq_neg) + alpha * q.vpos_sq +
               beta * q.vneg_sq;
    if (!std::isfinite(J)) throw Error(Errc::numerical_failure, "non-finite functional value");
    return J;
}

double eval_J(double alpha, double beta, const CompactFunction& f) {
    return eval_J(alpha, beta, split_integrals(f));
}

ClosedFormCoefficients closed_form_coefficients(double x, double s) {
    if (!(x > 0.0) || !(s > 0.0)) throw Error(Errc::invalid_input, "closed forms need x, s > 0");
    double x2 = x * x, x3 = x2 * x, x5 = x3 * x2, x7 = x5 * x2;
    double s2 = s * s, s4 = s2 * s2;
    return {
        4.0 * x3 / 15.0,
        8.0 * x5 / 35.0,
        (4.0 * x7 - 24.0 * s2 * x5) / (315.0 * s4),
        2.0 * x / 3.0,
        28.0 * x3 / 15.0,
        (22.0 * x5 - 28.0 * s2 * x3) / (105.0 * s4),
        2.0 / x,
        28.0 * x,
        (42.0 * x3 - 20.0 * s2 * x) / (5.0 * s4),
    };
}

WaveIntegrals closed_form_wave(double x, double s, double centre) {
    auto c = closed_form_coefficients(x, s);
    double s2 = s * s;
    double a = centre * centre / s2 - 1.0;
    double a2 = a * a;
    double b = centre * centre / (s2 * s2);
    return {c.G0 * a2 + c.G1 * b + c.G2, c.M0 * a2 + c.M1 * b + c.M2, c.N0 * a2 + c.N1 * b + c.N2};
}

QuadratureResult closed_form_split(const SemiWaveProfile& profile, int n) {
    profile.validate();
    if (profile.p1 != 0.0 || profile.p2 != 0.0)
        throw Error(Errc::invalid_input, "closed forms cover the polynomial profile only");
    if (n < 1) throw Error(Errc::invalid_input, "replication index must be >= 1");
    double T = profile.period();
    double s = n * T - profile.x1;
    QuadratureResult r;
    for (int k = 1 - n; k <= n - 1; ++k) {
        auto w = closed_form_wave(profile.x1, s, k * T);
        r.vpos_sq += w.v_sq;
        r.dv_sq_pos += w.dv_sq;
        r.ddv_sq_pos += w.ddv_sq;
    }
    for (int k = -n; k <= n - 1; ++k) {
        auto w = closed_form_wave(profile.x2, s, (k + 0.5) * T);
        r.vneg_sq += w.v_sq;
        r.dv_sq_neg += w.dv_sq;
        r.ddv_sq_neg += w.ddv_sq;
    }
    return r;
}

double bernoulli_power_sum(int n, double offset, int r) {
    if (n < 1) throw Error(Errc::invalid_input, "power sums need n >= 1");
    double m = n;
    if (offset == 0.0 && r == 2) return m * m * m / 3.0 - m * m / 2.0 + m / 6.0;
    if (offset == 0.0 && r == 4) return std::pow(m, 5) / 5.0 - std::pow(m, 4) / 2.0 + m * m * m / 3.0 - m / 30.0;
    if (offset == 0.5 && r == 2) return m * m * m / 3.0 - m / 12.0;
    if (offset == 0.5 && r == 4) return std::pow(m, 5) / 5.0 - m * m * m / 6.0 + 7.0 * m / 240.0;
    throw Error(Errc::invalid_input, "power sums support offset 0 or 1/2 and r = 2 or 4");
}

double expansion_slope(const SemiWaveProfile& profile, double alpha, double beta) {
    profile.validate();
    double x1 = profile.x1, x2 = profile.x2;
    if (profile.p1 == 0.0 && profile.p2 == 0.0) {
        return 32.0 / 225.0 *
               (15.0 * (1.0 / x1 + 1.0 / x2) - 10.0 * (x1 + x2) + alpha * 2.0 * x1 * x1 * x1 +
                beta * 2.0 * x2 * x2 * x2);
    }
    auto a = gmn(profile.p1, x1);
    auto b = gmn(profile.p2, x2);
    return 16.0 / 15.0 * (a.n + b.n - 2.0 * a.m - 2.0 * b.m + alpha * a.g + beta * b.g);
}

ExpansionFit verify_expansion(const SemiWaveProfile& profile, double alpha, double beta, int n_lo,
                              int n_hi) {
    if (n_lo < 1 || n_hi - n_lo + 1 < 4) throw Error(Errc::invalid_input, "need at least 4 values of n");
    ExpansionFit fit;
    for (int n = n_lo; n <= n_hi; ++n) {
        fit.n_values.push_back(n);
        fit.J_values.push_back(eval_J(alpha, beta, TestFunction(profile, n)));
    }
    std::size_t total = fit.n_values.size();
    std::size_t first = total / 2;
    double cnt = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = first; i < total; ++i) {
        double x = fit.n_values[i], y = fit.J_values[i];
        cnt += 1;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    fit.slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / cnt;
    for (std::size_t i = first; i < total; ++i) {
        double r = fit.J_values[i] - (fit.slope * fit.n_values[i] + fit.intercept);
        fit.max_residual = std::max(fit.max_residual, std::abs(r));
    }
    return fit;
}

}  // namespace twspeed
