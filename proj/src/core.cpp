#include "twspeed/core.hpp"

#include <cmath>

#include "twspeed/error.hpp"

namespace twspeed {

const char* errc_name(Errc e) noexcept {
    switch (e) {
    case Errc::ok: return "ok";
    case Errc::invalid_input: return "invalid input";
    case Errc::out_of_domain: return "out of domain";
    case Errc::numerical_failure: return "numerical failure";
    case Errc::no_convergence: return "no convergence";
    case Errc::estimation_failure: return "estimation failure";
    case Errc::singular: return "singular configuration";
    }
    return "unknown";
}

const char* kind_name(IntervalKind k) noexcept {
    switch (k) {
    case IntervalKind::necessary: return "necessary";
    case IntervalKind::sufficient_optimal: return "sufficient-optimal";
    case IntervalKind::sufficient_poly: return "sufficient-poly";
    case IntervalKind::sufficient_pade: return "sufficient-pade";
    }
    return "unknown";
}

SpeedInterval SpeedInterval::make(double lo, double hi, IntervalKind kind) {
    if (!(lo < hi)) return none(kind, "lower endpoint is not below upper endpoint");
    return SpeedInterval(lo, hi, kind, false, {});
}

SpeedInterval SpeedInterval::none(IntervalKind kind, std::string reason) {
    return SpeedInterval(0.0, 0.0, kind, true, std::move(reason));
}

bool SpeedInterval::within(const SpeedInterval& outer) const {
    if (empty_) return true;
    if (outer.empty_) return false;
    return lo_ >= outer.lo_ - kEndpointTol && hi_ <= outer.hi_ + kEndpointTol;
}

bool SpeedInterval::contains(double speed) const {
    double s = std::abs(speed);
    return !empty_ && s > lo_ && s < hi_;
}

FucikPoint to_fucik_point(PhysicalParams params, WaveSpeed speed) {
    if (speed.c == 0.0 || !std::isfinite(speed.c))
        throw Error(Errc::invalid_input, "wave speed must be finite and nonzero");
    double c4 = std::pow(speed.c, 4);
    return {4.0 * params.a / c4, 4.0 * params.b / c4};
}

SpeedInterval necessary_interval(PhysicalParams params) {
    if (!(params.b >= 0.0) || !std::isfinite(params.a) || !std::isfinite(params.b))
        throw Error(Errc::invalid_input, "stiffness b must be finite and nonnegative");
    if (params.a <= params.b)
        return SpeedInterval::none(IntervalKind::necessary, "a <= b: no admissible speed");
    return SpeedInterval::make(std::pow(4.0 * params.b, 0.25), std::pow(4.0 * params.a, 0.25),
                               IntervalKind::necessary);
}

double ray_of(FucikPoint point) {
    if (!(point.beta > 0.0)) throw Error(Errc::invalid_input, "ray slope needs beta > 0");
    return point.alpha / point.beta;
}

}  // namespace twspeed
