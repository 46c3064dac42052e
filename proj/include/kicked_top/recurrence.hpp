#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kicked_top/floquet.hpp"
#include "kicked_top/kappa.hpp"
#include "kicked_top/parallel.hpp"
#include "kicked_top/types.hpp"

namespace kt {

// Phase-invariant identity detector: eps(U) = 1 - |Tr U| / D. For unitary U
// this vanishes exactly when U is a global phase times the identity.
double identity_error(const DenseOperator& u);

struct RecurrenceReport {
    std::optional<int> period;
    std::optional<double> phase; // arg(Tr U^N) when the period is found
    double tolerance = 1e-10;
    int n_max = 500;
    // eps(U^k) for k = 1.. (up to the detected period, or n_max when none).
    std::vector<double> error_series;
};

// Smallest N <= n_max with identity_error(U^N) < tol, via incremental
// products U, U^2, ... (not repeated powering).
RecurrenceReport detect_period(const DenseOperator& u, int n_max = 500, double tol = 1e-10);

struct TableRow {
    SpinParams spin;
    KappaClass kappa_class;
    double kappa = 0.0;
    std::optional<int> period;
    std::optional<double> phase;
    std::optional<int> expected;
    bool matches = false;
};

// Detected period for each j and each of the nine kappa classes, compared
// against the expected table; rows come back sorted by (two_j, class).
std::vector<TableRow> reproduce_table(const std::vector<SpinParams>& j_values, int n_max = 500,
                                      double tol = 1e-10, double p = default_p,
                                      Exec exec = Exec::parallel);

// Smallest N with 1 - |<state|U^N|state>| < tol: a state-specific orbit.
std::optional<int> state_orbit_period(const DenseOperator& u, const StateVector& state, int n_max,
                                      double tol = 1e-9);

struct SearchConfig {
    int r_max = 5;
    int s_max = 5;
    std::vector<SpinParams> j_values;
    int n_kicks = 500;
    double entropy_floor = 1e-7;
    CoherentParams initial_state{2.25, 2.0};
    double tol = 1e-10;
};

struct SearchRow {
    int r = 0, s = 0;
    SpinParams spin;
    std::optional<int> period;
    double min_entropy = 0.0;
};

// For each coprime (r, s) and each j: evolve the screening state, record the
// minimum single-qubit von Neumann entropy, and confirm a recurrence with
// detect_period only when the screen drops below the floor.
std::vector<SearchRow> search_rational_kappa(const SearchConfig& cfg, Exec exec = Exec::parallel);

// Single-qubit entropy series at kappa and kappa + 2*pi*j from the same
// initial state; elementwise equal because the shift operator exp(-i pi Jz^2)
// is a symmetric local unitary.
std::pair<std::vector<double>, std::vector<double>>
entropy_sequence_kappa_shift(SpinParams spin, double kappa, const StateVector& state, int n_kicks);

// Normalized vector of independent standard complex Gaussians.
StateVector haar_random_state(SpinParams spin, std::uint64_t seed);

} // namespace kt
