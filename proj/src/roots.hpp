#pragma once

#include <cmath>
#include <utility>

#include "twspeed/error.hpp"

namespace twspeed::detail {

// Bisection down to a 1e-6 bracket, then secant steps kept inside the
// bracket until the update drops below 1e-12.
template <class F>
double solve_bracketed(F&& f, double a, double b) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0) == (fb > 0)) throw Error(Errc::estimation_failure, "root is not bracketed");
    while (std::abs(b - a) > 1e-6) {
        double m = 0.5 * (a + b);
        double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0) == (fa > 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }
    double x0 = a, f0 = fa, x1 = b, f1 = fb;
    for (int it = 0; it < 100; ++it) {
        double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        double lo = std::min(a, b), hi = std::max(a, b);
        if (!(x2 > lo && x2 < hi)) x2 = 0.5 * (a + b);
        double f2 = f(x2);
        if (f2 == 0.0) return x2;
        if ((f2 > 0) == (fa > 0)) {
            a = x2;
            fa = f2;
        } else {
            b = x2;
            fb = f2;
        }
        double step = std::abs(x2 - x1);
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f2;
        if (step < 1e-12 * std::max(1.0, std::abs(x2)) || std::abs(b - a) < 1e-15 * std::max(1.0, std::abs(a)))
            return x2;
    }
    return x1;
}

}  // namespace twspeed::detail
