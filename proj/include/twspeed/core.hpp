#pragma once

#include <string>

namespace twspeed {

// Absolute tolerance for comparisons against interval endpoints.
inline constexpr double kEndpointTol = 1e-12;

struct PhysicalParams {
    double a = 0.0;  // stiffness for positive displacement
    double b = 0.0;  // stiffness for negative displacement
};

struct WaveSpeed {
    double c = 0.0;
};

// Point of the (alpha, beta) plane.
struct FucikPoint {
    double alpha = 0.0;
    double beta = 0.0;

    bool in_omega() const { return alpha > 1.0 && beta > 0.0 && beta < 1.0; }
};

enum class IntervalKind { necessary, sufficient_optimal, sufficient_poly, sufficient_pade };

const char* kind_name(IntervalKind k) noexcept;

// Admissible range of |c|. An empty interval carries a reason instead of
// silently having lo >= hi.
class SpeedInterval {
public:
    static SpeedInterval make(double lo, double hi, IntervalKind kind);
    static SpeedInterval none(IntervalKind kind, std::string reason);

    bool empty() const { return empty_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double length() const { return empty_ ? 0.0 : hi_ - lo_; }
    IntervalKind kind() const { return kind_; }
    const std::string& reason() const { return reason_; }

    // True when this interval is a subset of `outer` (up to kEndpointTol).
    // The empty interval is a subset of anything.
    bool within(const SpeedInterval& outer) const;
    bool contains(double speed) const;

private:
    SpeedInterval(double lo, double hi, IntervalKind kind, bool empty, std::string reason)
        : lo_(lo), hi_(hi), kind_(kind), empty_(empty), reason_(std::move(reason)) {}

    double lo_;
    double hi_;
    IntervalKind kind_;
    bool empty_;
    std::string reason_;
};

FucikPoint to_fucik_point(PhysicalParams params, WaveSpeed speed);
SpeedInterval necessary_interval(PhysicalParams params);
double ray_of(FucikPoint point);

}  // namespace twspeed
