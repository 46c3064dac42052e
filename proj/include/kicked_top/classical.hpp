#pragma once

#include <vector>

#include "kicked_top/parallel.hpp"

namespace kt {

// Re-scaled classical angular momentum (X, Y, Z) = (sin t cos f, sin t sin f, cos t),
// constrained to the unit sphere.
struct ClassicalPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;
};

ClassicalPoint classical_point_from_angles(double theta, double phi);

// Angles of a unit vector: theta = arccos(z) (clamped), phi = atan2(y, x)
// wrapped into [0, 2 pi).
struct SphereAngles {
    double theta = 0.0;
    double phi = 0.0;
};

SphereAngles angles_of(const ClassicalPoint& p);

// One kick of the classical map at p = pi/2:
//   X' = Z cos(kappa X) + Y sin(kappa X)
//   Y' = Y cos(kappa X) - Z sin(kappa X)
//   Z' = -X
// A composition of two rotations, so the norm is conserved.
ClassicalPoint classical_step(const ClassicalPoint& p, double kappa);

// Stroboscopic trajectories, one per initial point, each with kicks + 1
// entries (the initial point first). Trajectories are independent and run
// in parallel.
std::vector<std::vector<SphereAngles>> stroboscopic_map(const std::vector<ClassicalPoint>& initials,
                                                        double kappa, int kicks,
                                                        Exec exec = Exec::parallel);

// Uniform (theta, phi) grid of initial conditions, theta_count x phi_count
// points at the offset-grid nodes (same placement as the Husimi grids).
std::vector<ClassicalPoint> classical_grid(int theta_count, int phi_count);

} // namespace kt
