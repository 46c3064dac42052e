#pragma once

#include <vector>

#include "kicked_top/spin.hpp"
#include "kicked_top/types.hpp"

namespace kt {

inline constexpr double default_p = 1.5707963267948966; // pi/2
inline constexpr double default_tau = 1.0;              // fixed kick period

// One kicked-top period: U = twist(kappa) * rotation_y(p), tau = 1.
struct FloquetSpec {
    SpinParams spin;
    double kappa = 0.0;
    double p = default_p;
};

// A recurrence twist strength kappa_tilde plus a deviation delta.
struct PerturbedSpec {
    FloquetSpec base; // base.kappa is the recurrence value kappa_tilde
    double delta = 0.0;
};

DenseOperator build_floquet(const FloquetSpec& spec);

// U = twist(kappa_tilde + delta) * rotation_y(p); algebraically equal to
// twist(delta) * build_floquet(base).
DenseOperator build_perturbed(const PerturbedSpec& spec);

// One kick U * state, renormalized; the pre-normalization drift is asserted
// below 1e-12 (entropies are sensitive to norm drift).
StateVector apply_kick(const DenseOperator& u, const StateVector& state);

// [state, U state, ..., U^n state]; each entry renormalized, with the
// pre-normalization drift asserted below 1e-12.
std::vector<StateVector> apply_kicks(const DenseOperator& u, const StateVector& state, int n);

// U^n via binary exponentiation; no intermediate re-unitarization, so drift
// is measured by the callers rather than hidden.
DenseOperator matrix_power(const DenseOperator& u, long long n);

} // namespace kt
