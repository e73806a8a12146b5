#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <optional>

namespace twspeed::detail {

struct Newton2Result {
    Eigen::Vector2d z;
    double residual = 0.0;
    bool converged = false;
};

// Damped Newton for two equations with a forward-difference Jacobian.
// `f` returns std::nullopt outside its domain.
template <class F>
Newton2Result newton2(F&& f, Eigen::Vector2d z, double tol, int max_iter = 30, double fd_step = 1e-7) {
    auto fz = f(z);
    if (!fz) return {z, INFINITY, false};
    for (int it = 0; it < max_iter; ++it) {
        double norm = fz->template lpNorm<Eigen::Infinity>();
        if (norm < tol) return {z, norm, true};
        Eigen::Matrix2d J;
        for (int k = 0; k < 2; ++k) {
            Eigen::Vector2d zk = z;
            double h = fd_step * std::max(1.0, std::abs(z[k]));
            zk[k] += h;
            auto fk = f(zk);
            if (!fk) {
                zk[k] = z[k] - h;
                fk = f(zk);
                if (!fk) return {z, norm, false};
                h = -h;
            }
            J.col(k) = (*fk - *fz) / h;
        }
        Eigen::Vector2d step = J.fullPivLu().solve(-*fz);
        if (!step.allFinite()) return {z, norm, false};
        double lambda = 1.0;
        bool accepted = false;
        for (int half = 0; half < 12; ++half, lambda *= 0.5) {
            Eigen::Vector2d zn = z + lambda * step;
            auto fn = f(zn);
            if (fn && fn->allFinite() && fn->template lpNorm<Eigen::Infinity>() < norm) {
                z = zn;
                fz = fn;
                accepted = true;
                break;
            }
        }
        if (!accepted) return {z, norm, norm < tol};
        if (step.norm() * lambda < 1e-15 * (1.0 + z.norm())) {
            double n2 = fz->template lpNorm<Eigen::Infinity>();
            return {z, n2, n2 < tol};
        }
    }
    double norm = fz->template lpNorm<Eigen::Infinity>();
    return {z, norm, norm < tol};
}

}  // namespace twspeed::detail
