#include "kicked_top/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "kicked_top/spin.hpp"

namespace kt {

namespace {

constexpr double pi = std::numbers::pi;

std::pair<double, double> qubit_eigenvalues(const ReducedQubit& rho) {
    const double half_diff = 0.5 * (rho(0, 0).real() - rho(1, 1).real());
    const double r = std::sqrt(half_diff * half_diff + std::norm(rho(0, 1)));
    return {std::clamp(0.5 - r, 0.0, 1.0), std::clamp(0.5 + r, 0.0, 1.0)};
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

double entropy_of(const ReducedQubit& rho, EntropyKind kind) {
    return kind == EntropyKind::vn ? von_neumann_entropy(rho) : linear_entropy(rho);
}

} // namespace

double grid_alpha() { return 0.5 - 0.5 / std::sqrt(3.0); }

std::vector<double> theta_grid(int count) {
    if (count <= 0) throw std::invalid_argument("theta grid size must be positive");
    const double alpha = grid_alpha();
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i) out[i] = (i + alpha) * pi / count;
    return out;
}

std::vector<double> phi_grid(int count) {
    if (count <= 0) throw std::invalid_argument("phi grid size must be positive");
    std::vector<double> out(count);
    for (int k = 0; k < count; ++k) out[k] = k * 2.0 * pi / count;
    return out;
}

double HusimiField::weighted_sum() const {
    double total = 0.0;
    for (int i = 0; i < theta_count; ++i) {
        double row = 0.0;
        for (int l = 0; l < phi_count; ++l) row += values(i, l);
        total += row_weight[i] * row;
    }
    return total;
}

HusimiField husimi(SpinParams spin, const StateVector& state, int theta_count, int phi_count,
                   Exec exec) {
    if (state.size() != spin.dim()) throw std::invalid_argument("state dimension does not match spin");
    HusimiField field;
    field.theta_count = theta_count;
    field.phi_count = phi_count;
    field.thetas = theta_grid(theta_count);
    field.phis = phi_grid(phi_count);
    field.values.resize(theta_count, phi_count);
    field.row_weight.resize(theta_count);

    const int d = spin.dim();
    // <theta, phi|psi> = sum_k r_k(theta) e^{i m_k phi} psi_k; the phi phase
    // table is shared by every row.
    Eigen::MatrixXcd phase(d, phi_count);
    for (int l = 0; l < phi_count; ++l)
        for (int k = 0; k < d; ++k)
            phase(k, l) = std::exp(Complex(0.0, spin.m_of(k) * field.phis[l]));

    const double dtheta = pi / theta_count;
    const double dphi = 2.0 * pi / phi_count;
    const double weight_scale = (spin.two_j + 1.0) / (4.0 * pi) * dtheta * dphi;

    for_each_index(theta_count, exec, [&](std::ptrdiff_t i) {
        Eigen::RowVectorXcd g(d);
        for (int k = 0; k < d; ++k) g(k) = coherent_amplitude(spin, field.thetas[i], k) * state(k);
        const Eigen::RowVectorXcd amp = g * phase;
        for (int l = 0; l < phi_count; ++l) field.values(i, l) = std::norm(amp(l));
        field.row_weight[i] = weight_scale * std::sin(field.thetas[i]);
    });

    field.q_max = field.values.maxCoeff();
    return field;
}

int count_local_maxima(const HusimiField& field, double fraction) {
    const int nt = field.theta_count;
    const int np = field.phi_count;
    const double floor = fraction * field.q_max;
    int count = 0;
    for (int i = 0; i < nt; ++i) {
        for (int l = 0; l < np; ++l) {
            const double v = field.values(i, l);
            if (v < floor) continue;
            bool peak = true;
            for (int di = -1; di <= 1 && peak; ++di) {
                const int ii = i + di;
                if (ii < 0 || ii >= nt) continue; // theta does not wrap
                for (int dl = -1; dl <= 1 && peak; ++dl) {
                    if (di == 0 && dl == 0) continue;
                    const int ll = (l + dl + np) % np; // phi wraps
                    if (field.values(ii, ll) >= v) peak = false;
                }
            }
            if (peak) ++count;
        }
    }
    return count;
}

ReducedQubit reduced_qubit(SpinParams spin, const StateVector& state) {
    if (state.size() != spin.dim()) throw std::invalid_argument("state dimension does not match spin");
    const double j = spin.j();
    double jz = 0.0;
    Complex jp(0.0, 0.0);
    for (int k = 0; k < spin.dim(); ++k) {
        const double m = spin.m_of(k);
        jz += m * std::norm(state(k));
        // <J+> couples |m> to <m+1|, i.e. index k to index k-1.
        if (k > 0) jp += std::conj(state(k - 1)) * std::sqrt(j * (j + 1.0) - m * (m + 1.0)) * state(k);
    }
    const double sz = jz / j;
    const Complex sp = jp / j;
    ReducedQubit rho;
    rho << 0.5 * (1.0 - sz), 0.5 * std::conj(sp), //
        0.5 * sp, 0.5 * (1.0 + sz);
    return rho;
}

double von_neumann_entropy(const ReducedQubit& rho) {
    const auto [lo, hi] = qubit_eigenvalues(rho);
    return -(xlogx(lo) + xlogx(hi));
}

double linear_entropy(const ReducedQubit& rho) {
    const auto [lo, hi] = qubit_eigenvalues(rho);
    return 1.0 - lo * lo - hi * hi;
}

std::vector<double> entropy_series(SpinParams spin, const DenseOperator& u, const StateVector& initial,
                                   int n_kicks, EntropyKind kind) {
    if (n_kicks < 0) throw std::invalid_argument("kick count must be non-negative");
    if (u.rows() != spin.dim() || u.cols() != spin.dim() || initial.size() != spin.dim())
        throw std::invalid_argument("operator/state dimension does not match spin");
    StateVector psi = initial;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n_kicks));
    for (int n = 1; n <= n_kicks; ++n) {
        psi = apply_kick(u, psi);
        out.push_back(entropy_of(reduced_qubit(spin, psi), kind));
    }
    return out;
}

double dogra_linear_entropy(long long n, double kappa) {
    const double chi = 0.5 * std::sin(kappa / 3.0);
    const double gamma = std::acos(chi);
    // |chi| <= 1/2, so sin(gamma) >= sqrt(3)/2 and the quotient is safe.
    const double u = std::sin(static_cast<double>(n) * gamma) / std::sin(gamma);
    const double cu2 = chi * chi * u * u;
    return 4.0 * cu2 * (1.0 - 2.0 * cu2);
}

MinEntropy min_entropy_scan(SpinParams spin, double kappa, CoherentParams initial, int n_kicks,
                            double p) {
    if (n_kicks <= 0) throw std::invalid_argument("kick count must be positive");
    const DenseOperator u = build_floquet(FloquetSpec{spin, kappa, p});
    StateVector psi = coherent_state(spin, initial);
    MinEntropy best{std::numeric_limits<double>::infinity(), 0};
    for (int n = 1; n <= n_kicks; ++n) {
        psi = apply_kick(u, psi);
        const double s = von_neumann_entropy(reduced_qubit(spin, psi));
        if (s < best.value) best = MinEntropy{s, n};
    }
    return best;
}

double EntropyLandscape::mean() const { return values.size() > 0 ? values.mean() : 0.0; }

EntropyLandscape stability_landscape(SpinParams spin, KappaClass kappa_class, double delta,
                                     int applications, int theta_count, int phi_count, Exec exec,
                                     std::optional<int> orbit_n_override) {
    if (applications <= 0) throw std::invalid_argument("applications must be positive");
    int orbit_n = 0;
    if (orbit_n_override) {
        orbit_n = *orbit_n_override;
        if (orbit_n <= 0) throw std::invalid_argument("orbit length must be positive");
    } else {
        const auto expected = expected_period(spin, kappa_class);
        if (!expected)
            throw std::invalid_argument(
                "kappa class has no recurrence period at this spin; pass an explicit orbit length");
        orbit_n = *expected;
    }

    EntropyLandscape ls;
    ls.spin = spin;
    ls.kappa_class = kappa_class;
    ls.kappa_tilde = kappa_of(spin, kappa_class);
    ls.delta = delta;
    ls.orbit_n = orbit_n;
    ls.applications = applications;
    ls.thetas = theta_grid(theta_count);
    ls.phis = phi_grid(phi_count);
    ls.values.resize(theta_count, phi_count);

    const DenseOperator u_orbit = matrix_power(
        build_perturbed(PerturbedSpec{FloquetSpec{spin, ls.kappa_tilde, default_p}, delta}), orbit_n);

    for_each_index(static_cast<std::ptrdiff_t>(theta_count) * phi_count, exec, [&](std::ptrdiff_t cell) {
        const int i = static_cast<int>(cell / phi_count);
        const int l = static_cast<int>(cell % phi_count);
        StateVector psi = coherent_state(spin, CoherentParams{ls.thetas[i], ls.phis[l]});
        double acc = 0.0;
        for (int a = 0; a < applications; ++a) {
            psi = u_orbit * psi;
            psi /= psi.norm(); // one renormalization per orbit application
            acc += von_neumann_entropy(reduced_qubit(spin, psi));
        }
        ls.values(i, l) = acc / applications;
    });

    ls.s_max = ls.values.maxCoeff();
    return ls;
}

std::vector<MeanLandscapeRow> mean_landscape_vs_spin(const std::vector<SpinParams>& j_values,
                                                     const std::vector<double>& deltas,
                                                     KappaClass kappa_class, int applications,
                                                     int theta_count, int phi_count, Exec exec) {
    std::vector<MeanLandscapeRow> rows;
    rows.reserve(j_values.size() * deltas.size());
    for (const auto& spin : j_values) {
        for (const double delta : deltas) {
            const auto ls =
                stability_landscape(spin, kappa_class, delta, applications, theta_count, phi_count, exec);
            rows.push_back(MeanLandscapeRow{spin, delta, ls.mean(), ls.s_max});
        }
    }
    return rows;
}

} // namespace kt
