#pragma once

#include <utility>
#include <vector>

#include "kicked_top/types.hpp"

namespace kt {

struct AngularMomentum {
    DenseOperator jx, jy, jz;
};

// J_x, J_y, J_z in the descending-m basis, built from the ladder elements
// <m+-1|J+-|m> = sqrt(j(j+1) - m(m+-1)). All three are Hermitian.
AngularMomentum build_angular_momentum(SpinParams spin);

// exp(-i * angle * J_y) via the cached eigendecomposition of J_y.
// The cache is shared across threads (concurrent read, single-writer insert).
DenseOperator rotation_y(SpinParams spin, double angle);

// exp(-i * angle * J_z): diagonal phases exp(-i * angle * m).
DenseOperator rotation_z(SpinParams spin, double angle);

// Diagonal twist exp(-i * kappa * m^2 / (2j)) for m = j..-j.
DenseOperator twist(SpinParams spin, double kappa);

// Diagonal of twist(spin, kappa) tagged by m, for scalar identity checks
// against Dicke-level (Hamming-weight) phase formulas.
std::vector<std::pair<double, Complex>> dicke_phase_table(SpinParams spin, double kappa);

// Spin coherent state exp(-i phi J_z) exp(-i theta J_y) |j, j>, evaluated in
// closed form (log-space binomial amplitudes), exactly unit norm.
StateVector coherent_state(SpinParams spin, CoherentParams params);

// Single coherent amplitude <m_k| exp(-i theta J_y) |j,j> at phi = 0 (real,
// non-negative for theta in [0, pi]); used by the Husimi grid kernels.
double coherent_amplitude(SpinParams spin, double theta, int k);

// |+>_y, the +1 eigenstate of S_y in coherent form: coherent(pi/2, pi/2).
StateVector plus_y_state(SpinParams spin);

} // namespace kt
