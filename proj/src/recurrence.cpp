#include "kicked_top/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "kicked_top/observables.hpp"
#include "kicked_top/spin.hpp"

namespace kt {

namespace {
constexpr double pi = std::numbers::pi;
constexpr int n_classes = 9;
} // namespace

double identity_error(const DenseOperator& u) {
    return 1.0 - std::abs(u.trace()) / static_cast<double>(u.rows());
}

RecurrenceReport detect_period(const DenseOperator& u, int n_max, double tol) {
    if (u.rows() != u.cols()) throw std::invalid_argument("detect_period: operator must be square");
    if (n_max <= 0) throw std::invalid_argument("detect_period: n_max must be positive");
    RecurrenceReport report;
    report.tolerance = tol;
    report.n_max = n_max;
    report.error_series.reserve(static_cast<std::size_t>(n_max));
    DenseOperator power = DenseOperator::Identity(u.rows(), u.cols());
    for (int n = 1; n <= n_max; ++n) {
        power = power * u;
        const double err = identity_error(power);
        report.error_series.push_back(err);
        if (err < tol) {
            report.period = n;
            report.phase = std::arg(power.trace());
            break;
        }
    }
    return report;
}

std::vector<TableRow> reproduce_table(const std::vector<SpinParams>& j_values, int n_max, double tol,
                                      double p, Exec exec) {
    std::vector<TableRow> rows(j_values.size() * n_classes);
    for_each_index(static_cast<std::ptrdiff_t>(rows.size()), exec, [&](std::ptrdiff_t c) {
        const SpinParams spin = j_values[static_cast<std::size_t>(c) / n_classes];
        const auto kc = static_cast<KappaClass>(c % n_classes);
        TableRow row;
        row.spin = spin;
        row.kappa_class = kc;
        row.kappa = kappa_of(spin, kc);
        const auto report = detect_period(build_floquet(FloquetSpec{spin, row.kappa, p}), n_max, tol);
        row.period = report.period;
        row.phase = report.phase;
        row.expected = expected_period(spin, kc);
        row.matches = row.period == row.expected;
        rows[c] = row;
    });
    return rows;
}

std::optional<int> state_orbit_period(const DenseOperator& u, const StateVector& state, int n_max,
                                      double tol) {
    if (u.cols() != state.size()) throw std::invalid_argument("state_orbit_period: dimension mismatch");
    if (n_max <= 0) throw std::invalid_argument("state_orbit_period: n_max must be positive");
    StateVector psi = state;
    for (int n = 1; n <= n_max; ++n) {
        psi = apply_kick(u, psi);
        if (1.0 - std::abs(state.dot(psi)) < tol) return n;
    }
    return std::nullopt;
}

std::vector<SearchRow> search_rational_kappa(const SearchConfig& cfg, Exec exec) {
    if (cfg.r_max <= 0 || cfg.s_max <= 0)
        throw std::invalid_argument("search: ratio bounds must be positive");
    if (cfg.j_values.empty()) throw std::invalid_argument("search: no spin values given");
    if (cfg.n_kicks <= 0) throw std::invalid_argument("search: kick count must be positive");

    std::vector<std::pair<int, int>> ratios;
    for (int r = 1; r <= cfg.r_max; ++r) {
        for (int s = 1; s <= cfg.s_max; ++s) {
            if (std::gcd(r, s) != 1) continue;
            if (is_table_ratio(r, s)) continue; // covered by the recurrence table
            ratios.emplace_back(r, s);
        }
    }

    const std::ptrdiff_t nj = static_cast<std::ptrdiff_t>(cfg.j_values.size());
    std::vector<SearchRow> rows(ratios.size() * cfg.j_values.size());
    for_each_index(static_cast<std::ptrdiff_t>(rows.size()), exec, [&](std::ptrdiff_t c) {
        const auto [r, s] = ratios[static_cast<std::size_t>(c / nj)];
        const SpinParams spin = cfg.j_values[static_cast<std::size_t>(c % nj)];
        const double kappa = pi * spin.j() * static_cast<double>(r) / static_cast<double>(s);
        const DenseOperator u = build_floquet(FloquetSpec{spin, kappa, default_p});

        StateVector psi = coherent_state(spin, cfg.initial_state);
        double min_entropy = std::numeric_limits<double>::infinity();
        for (int n = 1; n <= cfg.n_kicks; ++n) {
            psi = apply_kick(u, psi);
            min_entropy = std::min(min_entropy, von_neumann_entropy(reduced_qubit(spin, psi)));
        }

        SearchRow row{r, s, spin, std::nullopt, min_entropy};
        // The entropy screen is cheap (O(D) per kick); the operator-power
        // confirmation runs only when the screen suggests a recurrence.
        if (min_entropy < cfg.entropy_floor) row.period = detect_period(u, cfg.n_kicks, cfg.tol).period;
        rows[c] = row;
    });
    return rows;
}

std::pair<std::vector<double>, std::vector<double>>
entropy_sequence_kappa_shift(SpinParams spin, double kappa, const StateVector& state, int n_kicks) {
    const DenseOperator u = build_floquet(FloquetSpec{spin, kappa, default_p});
    const DenseOperator u_shifted =
        build_floquet(FloquetSpec{spin, kappa + 2.0 * pi * spin.j(), default_p});
    return {entropy_series(spin, u, state, n_kicks, EntropyKind::vn),
            entropy_series(spin, u_shifted, state, n_kicks, EntropyKind::vn)};
}

StateVector haar_random_state(SpinParams spin, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    StateVector psi(spin.dim());
    for (int k = 0; k < spin.dim(); ++k) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        psi(k) = Complex(re, im);
    }
    psi /= psi.norm();
    return psi;
}

} // namespace kt
