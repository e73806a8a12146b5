#include <algorithm>
#include <cmath>
#include <numbers>

#include "roots.hpp"
#include "twspeed/error.hpp"
#include "twspeed/spectra.hpp"

namespace twspeed {

using std::numbers::pi;
using std::numbers::sqrt2;

double CurveOptions::next_alpha(double alpha, double h) const {
    double next = std::min(alpha + h, alpha_max);
    for (double s : stops)
        if (s > alpha + 1e-12 && s < next) next = s;
    return next;
}

double periodic_eigenvalue(int n, double T) {
    if (n < 0) throw Error(Errc::invalid_input, "eigenvalue index must be >= 0");
    if (!(T > 0.0)) throw Error(Errc::invalid_input, "period must be positive");
    double w = 2.0 * pi * n / T;
    double t = w * w - 1.0;
    return 1.0 - t * t;
}

double periodic_first_eigenvalue(double T) {
    int n0 = static_cast<int>(std::floor(T / (2.0 * pi)));
    double best = periodic_eigenvalue(0, T);
    for (int n : {n0, n0 + 1})
        if (n >= 1) best = std::max(best, periodic_eigenvalue(n, T));
    return best;
}

double dirichlet_char(double r, double lambda) {
    if (!(r > 0.0)) throw Error(Errc::invalid_input, "half-length must be positive");
    if (!(lambda < 1.0)) throw Error(Errc::out_of_domain, "no eigenvalues at or above 1");
    double root = std::sqrt(1.0 - lambda);
    double nu2 = std::sqrt(1.0 + root);
    if (lambda > 0.0) {
        double nu1 = std::sqrt(1.0 - root);
        return nu2 * std::sin(nu2 * r) * std::cos(nu1 * r) - nu1 * std::cos(nu2 * r) * std::sin(nu1 * r);
    }
    if (lambda == 0.0) return sqrt2 * std::sin(sqrt2 * r);
    double nu1 = std::sqrt(root - 1.0);
    return nu2 * std::sin(nu2 * r) * std::cosh(nu1 * r) + nu1 * std::cos(nu2 * r) * std::sinh(nu1 * r);
}

Bracket dirichlet_bracket(int n, double r) {
    if (n < 1) throw Error(Errc::invalid_input, "branch index must be >= 1");
    if (!(r > 0.0)) throw Error(Errc::invalid_input, "half-length must be positive");
    double m = 2.0 * n - 1.0;
    if (r > sqrt2 * n * pi / 2.0) {
        double t = 1.0 - pi * pi * m * m / (8.0 * r * r);
        Bracket b{0.0, t * t};
        double m2 = m + 2.0;
        if (r > sqrt2 * pi * m2 / 4.0) {
            double t2 = 1.0 - pi * pi * m2 * m2 / (8.0 * r * r);
            b.lower = t2 * t2;
        }
        return b;
    }
    double low = n * pi / r;
    double tl = low * low - 1.0;
    Bracket b{1.0 - tl * tl, 0.0};
    if (r <= sqrt2 * pi * m / 4.0) {
        double tu = pi * pi * m * m / (4.0 * r * r) - 1.0;
        b.upper = 1.0 - tu * tu;
    }
    return b;
}

double dirichlet_eigenvalue(int n, double r) {
    auto br = dirichlet_bracket(n, r);
    if (std::abs(r - sqrt2 * n * pi / 2.0) < 1e-14 * r) return 0.0;
    auto f = [r](double l) { return dirichlet_char(r, l); };
    try {
        return detail::solve_bracketed(f, br.lower, br.upper);
    } catch (const Error&) {
        throw Error(Errc::estimation_failure, "branch not found: no sign change inside the bracket");
    }
}

EigenBranch dirichlet_branch(int n, double r_lo, double r_hi, double step) {
    if (!(r_lo > 0.0) || !(r_hi >= r_lo) || !(step > 0.0))
        throw Error(Errc::invalid_input, "branch range needs 0 < r_lo <= r_hi and step > 0");
    EigenBranch out{n, {}};
    int count = static_cast<int>(std::floor((r_hi - r_lo) / step + 1e-9)) + 1;
    for (int i = 0; i < count; ++i) {
        double r = r_lo + i * step;
        BranchSample s{r, 0.0, false, "ok"};
        try {
            s.lambda = dirichlet_eigenvalue(n, r);
            s.found = true;
        } catch (const Error& e) {
            s.status = e.what();
        }
        out.samples.push_back(s);
    }
    return out;
}

double dirichlet_rk(int k) {
    if (k < 1) throw Error(Errc::invalid_input, "k must be >= 1");
    return pi * std::sqrt(4.0 * k * k + 1.0) / 2.0;
}

double dirichlet_rk_eigenvalue(int k) {
    if (k < 1) throw Error(Errc::invalid_input, "k must be >= 1");
    double a = 4.0 * k * k - 1.0, b = 4.0 * k * k + 1.0;
    return a * a / (b * b);
}

double dirichlet_eigenfunction_rk(int k, double x, int order) {
    if (k < 1) throw Error(Errc::invalid_input, "k must be >= 1");
    if (order < 0) throw Error(Errc::invalid_input, "derivative order must be >= 0");
    double root = std::sqrt(4.0 * k * k + 1.0);
    double w1 = (2.0 * k - 1.0) / root, w2 = (2.0 * k + 1.0) / root;
    double c1 = (2.0 * k + 1.0) / (4.0 * k), c2 = (2.0 * k - 1.0) / (4.0 * k);
    double shift = order * pi / 2.0;
    return c1 * std::pow(w1, order) * std::cos(w1 * x + shift) + c2 * std::pow(w2, order) * std::cos(w2 * x + shift);
}

double dirichlet_curvature_ratio(double r, double lambda) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw Error(Errc::out_of_domain, "curvature ratio needs an eigenvalue in (0, 1)");
    double root = std::sqrt(1.0 - lambda);
    double nu1 = std::sqrt(1.0 - root), nu2 = std::sqrt(1.0 + root);
    double a = nu2 * std::sin(nu2 * r), b = nu1 * std::sin(nu1 * r);
    double v0 = a - b;
    if (std::abs(v0) < 1e-12 * (std::abs(a) + std::abs(b)))
        throw Error(Errc::singular, "eigenfunction vanishes at the origin");
    return (-nu1 * nu1 * a + nu2 * nu2 * b) / v0;
}

}  // namespace twspeed
