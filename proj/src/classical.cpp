#include "kicked_top/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kicked_top/observables.hpp"

namespace kt {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;
} // namespace

ClassicalPoint classical_point_from_angles(double theta, double phi) {
    return ClassicalPoint{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                          std::cos(theta)};
}

SphereAngles angles_of(const ClassicalPoint& p) {
    SphereAngles a;
    a.theta = std::acos(std::clamp(p.z, -1.0, 1.0));
    a.phi = std::atan2(p.y, p.x);
    if (a.phi < 0.0) a.phi += two_pi;
    // atan2 can return exactly -0.0 -> keep phi in [0, 2 pi).
    if (a.phi >= two_pi) a.phi -= two_pi;
    return a;
}

ClassicalPoint classical_step(const ClassicalPoint& p, double kappa) {
    const double c = std::cos(kappa * p.x);
    const double s = std::sin(kappa * p.x);
    return ClassicalPoint{p.z * c + p.y * s, p.y * c - p.z * s, -p.x};
}

std::vector<std::vector<SphereAngles>> stroboscopic_map(const std::vector<ClassicalPoint>& initials,
                                                        double kappa, int kicks, Exec exec) {
    if (kicks < 0) throw std::invalid_argument("stroboscopic_map: negative kick count");
    std::vector<std::vector<SphereAngles>> trajectories(initials.size());
    for_each_index(static_cast<std::ptrdiff_t>(initials.size()), exec, [&](std::ptrdiff_t t) {
        auto& traj = trajectories[t];
        traj.reserve(static_cast<std::size_t>(kicks) + 1);
        ClassicalPoint p = initials[t];
        traj.push_back(angles_of(p));
        for (int n = 0; n < kicks; ++n) {
            p = classical_step(p, kappa);
            traj.push_back(angles_of(p));
        }
    });
    return trajectories;
}

std::vector<ClassicalPoint> classical_grid(int theta_count, int phi_count) {
    const auto thetas = theta_grid(theta_count);
    const auto phis = phi_grid(phi_count);
    std::vector<ClassicalPoint> points;
    points.reserve(static_cast<std::size_t>(theta_count) * phi_count);
    for (const double theta : thetas)
        for (const double phi : phis) points.push_back(classical_point_from_angles(theta, phi));
    return points;
}

} // namespace kt
