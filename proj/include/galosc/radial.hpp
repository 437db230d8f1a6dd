#pragma once

#include "galosc/spectrum.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace galosc {

/// Uniform interior grid r_i = i h, i = 1..points, h = r_max/(points+1),
/// with Dirichlet conditions u(0) = u(r_max) = 0 for u(r) = r R(r).
struct RadialGrid {
    double r_max = 12.0;
    int points = 2000;
    double spacing() const { return r_max / (points + 1); }
};

struct RadialChannel {
    int ell = 0;
    int two_j = 0;
    int two_s = 0;
    double lambda = 1.0;
    double mass = 1.0;
    double omega = 1.0;
};

inline void validate_channel(const RadialChannel& c) {
    require_quantum_numbers(0, c.ell, c.two_j, c.two_s);
    if (c.mass <= 0.0 || c.omega <= 0.0) throw std::invalid_argument("mass and omega must be positive");
}

/// Reference grid of the cross-checks: wide enough that the low oscillator
/// states have negligible tail at the wall.
inline RadialGrid reference_grid(double mass = 1.0, double omega = 1.0) {
    return RadialGrid{12.0 / std::sqrt(mass * omega), 2000};
}

/// k smallest eigenvalues of the symmetric tridiagonal 3-point discretization
/// of -u''/2M + [l(l+1)/2Mr^2 + Mw^2 r^2/2 - 3w/2 - (lambda w/S) <S.L>] u,
/// ascending.
inline std::vector<double> solve_channel(const RadialChannel& c, const RadialGrid& g,
                                         int k_lowest) {
    validate_channel(c);
    if (g.points < 200) throw std::invalid_argument("grid too coarse: need points >= 200");
    if (k_lowest < 1 || k_lowest > g.points / 10)
        throw std::invalid_argument("k_lowest must be in 1..points/10");
    const double h = g.spacing();
    const double kin = 1.0 / (c.mass * h * h);
    double ls_shift = 0.0;
    if (c.two_s > 0)
        ls_shift = c.lambda * c.omega * to_double(ls_channel_value(c.ell, c.two_j, c.two_s)) /
                   (0.5 * c.two_s);
    Eigen::VectorXd diag(g.points), sub(g.points - 1);
    for (int i = 1; i <= g.points; ++i) {
        double r = i * h;
        double V = c.ell * (c.ell + 1) / (2.0 * c.mass * r * r) +
                   0.5 * c.mass * c.omega * c.omega * r * r - 1.5 * c.omega - ls_shift;
        diag(i - 1) = kin + V;
    }
    sub.setConstant(-0.5 * kin);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    return {es.eigenvalues().data(), es.eigenvalues().data() + k_lowest};
}

struct ConvergencePoint {
    double h = 0.0;
    double deviation = 0.0;  // max over the k lowest eigenvalues vs closed form
};

inline std::vector<ConvergencePoint> convergence_scan(const RadialChannel& c,
                                                      const std::vector<RadialGrid>& grids,
                                                      int k_lowest = 3) {
    if (grids.size() < 3) throw std::invalid_argument("need at least 3 grids");
    std::vector<ConvergencePoint> out;
    for (const auto& g : grids) {
        auto ev = solve_channel(c, g, k_lowest);
        double dev = 0.0;
        for (int n = 0; n < k_lowest; ++n) {
            double exact = 2.0 * n + c.ell;
            if (c.two_s > 0)
                exact -= c.lambda * to_double(ls_channel_value(c.ell, c.two_j, c.two_s)) /
                         (0.5 * c.two_s);
            dev = std::max(dev, std::abs(ev[n] - c.omega * exact));
        }
        out.push_back({g.spacing(), dev});
    }
    return out;
}

/// Least-squares slope of log(deviation) against log(h).
inline double fitted_order(const std::vector<ConvergencePoint>& pts) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = static_cast<int>(pts.size());
    for (const auto& p : pts) {
        double x = std::log(p.h), y = std::log(p.deviation);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace galosc
