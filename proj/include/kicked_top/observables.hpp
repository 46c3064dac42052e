#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kicked_top/floquet.hpp"
#include "kicked_top/kappa.hpp"
#include "kicked_top/parallel.hpp"
#include "kicked_top/types.hpp"

namespace kt {

// Uniform grids: theta in (0, pi) at nodes (i + alpha) * pi / count with
// alpha = 1/2 - 1/(2 sqrt 3), phi in [0, 2 pi) at k * 2 pi / count. The theta
// offset is the zero of the second Bernoulli polynomial, which cancels the
// O(h^2) Euler-Maclaurin boundary term of the sin-weighted quadrature sum, so
// the Husimi normalization holds to ~1e-7 even for pole-concentrated states.
double grid_alpha();
std::vector<double> theta_grid(int count);
std::vector<double> phi_grid(int count);

struct HusimiField {
    int theta_count = 0;
    int phi_count = 0;
    std::vector<double> thetas;
    std::vector<double> phis;
    Eigen::MatrixXd values; // theta_count x phi_count, Q(theta, phi) >= 0
    double q_max = 0.0;
    // Per-row quadrature weight (2j+1)/(4 pi) sin(theta) dtheta dphi.
    std::vector<double> row_weight;

    double weighted_sum() const;
};

// Q(theta, phi) = |<theta, phi|psi>|^2 over the grid; rows are independent
// and evaluated in parallel.
HusimiField husimi(SpinParams spin, const StateVector& state, int theta_count, int phi_count,
                   Exec exec = Exec::parallel);

// Local maxima above fraction * q_max (8-neighbour comparison, phi wraps).
int count_local_maxima(const HusimiField& field, double fraction = 0.5);

// Reduced single-qubit state from the collective expectations (S_i = J_i/j):
// rho = 1/2 [[1 - <S_z>, <S_->], [<S_+>, 1 + <S_z>]].
using ReducedQubit = Eigen::Matrix2cd;
ReducedQubit reduced_qubit(SpinParams spin, const StateVector& state);

double von_neumann_entropy(const ReducedQubit& rho); // natural log, in [0, ln 2]
double linear_entropy(const ReducedQubit& rho);      // 1 - Tr rho^2, in [0, 1/2]

enum class EntropyKind { vn, linear };

// Entropy after kicks 1..n_kicks of the given Floquet operator.
std::vector<double> entropy_series(SpinParams spin, const DenseOperator& u, const StateVector& initial,
                                   int n_kicks, EntropyKind kind = EntropyKind::vn);

// Closed-form linear entropy of the j = 3/2 state U^N |+>_y:
// S = 4 chi^2 u^2 (1 - 2 chi^2 u^2), u = sin(N gamma)/sin(gamma),
// chi = cos(gamma) = sin(kappa/3)/2.
double dogra_linear_entropy(long long n, double kappa);

struct MinEntropy {
    double value = 0.0;
    int kick = 0;
};

// Minimum von Neumann entropy over kicks 1..n_kicks.
MinEntropy min_entropy_scan(SpinParams spin, double kappa, CoherentParams initial, int n_kicks,
                            double p = default_p);

struct EntropyLandscape {
    SpinParams spin;
    KappaClass kappa_class = KappaClass::pj;
    double kappa_tilde = 0.0;
    double delta = 0.0;
    int orbit_n = 0;
    int applications = 0;
    std::vector<double> thetas;
    std::vector<double> phis;
    Eigen::MatrixXd values; // time-averaged entropy per initial coherent state
    double s_max = 0.0;

    double mean() const;
};

// Average entropy of U_{kappa_tilde + delta}^{orbit_n * a} |theta, phi> over
// a = 1..applications, per grid cell. kappa_tilde must be a recurrence class
// with a defined period for this spin (that period is the sampling stride).
EntropyLandscape stability_landscape(SpinParams spin, KappaClass kappa_class, double delta,
                                     int applications, int theta_count, int phi_count,
                                     Exec exec = Exec::parallel,
                                     std::optional<int> orbit_n_override = std::nullopt);

struct MeanLandscapeRow {
    SpinParams spin;
    double delta = 0.0;
    double mean = 0.0;
    double s_max = 0.0;
};

// Grid-mean of the time-averaged entropy per (j, delta), for the stability
// sweep export.
std::vector<MeanLandscapeRow> mean_landscape_vs_spin(const std::vector<SpinParams>& j_values,
                                                     const std::vector<double>& deltas,
                                                     KappaClass kappa_class, int applications,
                                                     int theta_count, int phi_count,
                                                     Exec exec = Exec::parallel);

} // namespace kt
