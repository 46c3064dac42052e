#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "kicked_top/observables.hpp"
#include "kicked_top/spin.hpp"

using namespace kt;

namespace {
constexpr double pi = std::numbers::pi;
} // namespace

TEST_CASE("quadrature grids: offset placement and validation") {
    CHECK(grid_alpha() == doctest::Approx(0.21132486540518713).epsilon(1e-15));

    const auto thetas = theta_grid(140);
    REQUIRE(thetas.size() == 140);
    CHECK(thetas.front() == doctest::Approx(grid_alpha() * pi / 140.0).epsilon(1e-15));
    CHECK(thetas.back() < pi);

    const auto phis = phi_grid(8);
    CHECK(phis.front() == 0.0);
    CHECK(phis[1] == doctest::Approx(pi / 4.0).epsilon(1e-15));

    CHECK_THROWS_AS((void)theta_grid(0), std::invalid_argument);
    CHECK_THROWS_AS((void)phi_grid(-3), std::invalid_argument);
}

TEST_CASE("husimi: normalization, peak location, non-negativity, serial equality") {
    const auto spin = SpinParams::from_j(10.0);
    const StateVector psi = coherent_state(spin, CoherentParams{2.25, 2.0});
    const auto field = husimi(spin, psi, 140, 280);

    SUBCASE("quadrature sum of a unit-norm state is 1 to 1e-6") {
        CHECK(std::abs(field.weighted_sum() - 1.0) < 1e-6);
    }

    SUBCASE("the peak sits on the grid node closest to the state's center") {
        int imax = 0, lmax = 0;
        field.values.maxCoeff(&imax, &lmax);
        // Nearest theta node to 2.25: i = round(2.25 * 140 / pi - alpha).
        const int i_expect = static_cast<int>(std::lround(2.25 * 140.0 / pi - grid_alpha()));
        const int l_expect = static_cast<int>(std::lround(2.0 * 280.0 / (2.0 * pi)));
        CHECK(imax == i_expect);
        CHECK(lmax == l_expect);
        CHECK(field.q_max > 0.999); // coherent states have Q_max = 1 up to grid offset
    }

    SUBCASE("values are non-negative and the pole state normalizes too") {
        CHECK(field.values.minCoeff() >= 0.0);
        StateVector pole = StateVector::Zero(spin.dim());
        pole(0) = 1.0;
        const auto pole_field = husimi(spin, pole, 140, 280);
        CHECK(std::abs(pole_field.weighted_sum() - 1.0) < 1e-6);
    }

    SUBCASE("parallel and serial evaluations agree bitwise") {
        const auto serial = husimi(spin, psi, 37, 53, Exec::serial);
        const auto parallel = husimi(spin, psi, 37, 53, Exec::parallel);
        CHECK((serial.values - parallel.values).cwiseAbs().maxCoeff() == 0.0);
    }

    SUBCASE("dimension mismatch throws") {
        const StateVector wrong = StateVector::Ones(4).normalized();
        CHECK_THROWS_AS((void)husimi(spin, wrong, 8, 8), std::invalid_argument);
    }
}

TEST_CASE("pole-state Husimi value matches the closed-form overlap at theta = 1") {
    // Q(theta, phi) for |j, j> is cos^(4j)(theta/2), independent of phi.
    const auto spin = SpinParams::from_j(10.0);
    const double amp = coherent_amplitude(spin, 1.0, 0);
    CHECK(amp * amp == doctest::Approx(std::pow(std::cos(0.5), 40.0)).epsilon(1e-12));

    StateVector pole = StateVector::Zero(spin.dim());
    pole(0) = 1.0;
    const StateVector probe = coherent_state(spin, CoherentParams{1.0, 0.6});
    CHECK(std::norm(probe.dot(pole)) ==
          doctest::Approx(std::pow(std::cos(0.5), 40.0)).epsilon(1e-12));
}

TEST_CASE("count_local_maxima: wrap-around and plateau behaviour") {
    HusimiField field;
    field.theta_count = 4;
    field.phi_count = 6;
    field.values = Eigen::MatrixXd::Zero(4, 6);

    SUBCASE("phi wraps: a smaller peak adjacent across the seam is suppressed") {
        field.values(1, 0) = 1.0;
        field.values(1, 5) = 0.95; // neighbour of (1, 0) through the phi seam
        field.q_max = 1.0;
        CHECK(count_local_maxima(field, 0.5) == 1);
    }

    SUBCASE("two separated peaks count; the threshold can drop one") {
        field.values(1, 1) = 1.0;
        field.values(2, 4) = 0.6;
        field.q_max = 1.0;
        CHECK(count_local_maxima(field, 0.5) == 2);
        CHECK(count_local_maxima(field, 0.8) == 1);
    }

    SUBCASE("flat plateaus are not strict maxima") {
        field.values(1, 2) = 1.0;
        field.values(1, 3) = 1.0;
        field.q_max = 1.0;
        CHECK(count_local_maxima(field, 0.5) == 0);
    }
}

TEST_CASE("reduced_qubit: pole projector, purity of coherent states, hermiticity") {
    SUBCASE("|j, j> maps to the projector diag(0, 1)") {
        // <S_z> = +1 for |j, j>, so rho = diag((1 - 1)/2, (1 + 1)/2) = diag(0, 1).
        const auto spin = SpinParams::from_j(5.0);
        StateVector pole = StateVector::Zero(spin.dim());
        pole(0) = 1.0;
        const ReducedQubit rho = reduced_qubit(spin, pole);
        CHECK(std::abs(rho(0, 0)) < 1e-15);
        CHECK(std::abs(rho(1, 1) - Complex(1.0, 0.0)) < 1e-15);
        CHECK(std::abs(rho(0, 1)) < 1e-15);
        CHECK(std::abs(rho(1, 0)) < 1e-15);
    }

    SUBCASE("coherent states are unentangled: linear entropy < 1e-12") {
        const auto spin = SpinParams::from_j(3.5);
        const StateVector psi = coherent_state(spin, CoherentParams{1.1, 0.4});
        CHECK(linear_entropy(reduced_qubit(spin, psi)) < 1e-12);
    }

    SUBCASE("hermitian with unit trace") {
        const auto spin = SpinParams::from_j(2.0);
        const StateVector psi =
            (coherent_state(spin, CoherentParams{0.9, 0.3}) +
             coherent_state(spin, CoherentParams{2.0, 4.0}))
                .normalized();
        const ReducedQubit rho = reduced_qubit(spin, psi);
        CHECK(std::abs(rho(0, 1) - std::conj(rho(1, 0))) < 1e-15);
        CHECK(std::abs(rho(0, 0) + rho(1, 1) - Complex(1.0, 0.0)) < 1e-14);
    }
}

TEST_CASE("entropy functionals on pinned spectra") {
    ReducedQubit rho;
    rho << Complex(0.9, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(0.1, 0.0);
    CHECK(von_neumann_entropy(rho) == doctest::Approx(0.325083).epsilon(1e-5));
    CHECK(linear_entropy(rho) == doctest::Approx(0.18).epsilon(1e-12));

    ReducedQubit pure;
    pure << Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0);
    CHECK(von_neumann_entropy(pure) == 0.0);
    CHECK(linear_entropy(pure) == 0.0);

    ReducedQubit mixed;
    mixed << Complex(0.5, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(0.5, 0.0);
    CHECK(von_neumann_entropy(mixed) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(linear_entropy(mixed) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("dogra_linear_entropy closed form") {
    SUBCASE("kappa = 3 pi: chi = 0, entropy vanishes for every N") {
        for (long long n = 1; n <= 20; ++n) CHECK(std::abs(dogra_linear_entropy(n, 3.0 * pi)) < 1e-15);
    }
    SUBCASE("kappa = 3 pi / 2: maximal at N = 1, zero at N = 12") {
        CHECK(dogra_linear_entropy(1, 1.5 * pi) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(std::abs(dogra_linear_entropy(12, 1.5 * pi)) < 1e-12);
    }
    SUBCASE("matches the j = 3/2 simulation on a kappa grid") {
        const auto spin = SpinParams::from_j(1.5);
        const StateVector psi0 = plus_y_state(spin);
        double worst = 0.0;
        for (int i = 1; i <= 10; ++i) {
            const double kappa = 6.0 * pi * i / 11.0;
            const DenseOperator u = build_floquet(FloquetSpec{spin, kappa, default_p});
            const auto series = entropy_series(spin, u, psi0, 200, EntropyKind::linear);
            for (int n = 1; n <= 200; ++n)
                worst = std::max(worst,
                                 std::abs(series[static_cast<std::size_t>(n - 1)] -
                                          dogra_linear_entropy(n, kappa)));
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("entropy_series and min_entropy_scan around recurrences") {
    SUBCASE("j=3/2, kappa = pi j, |+>_y: linear entropy cycles 1/2, 1/2, 0") {
        const auto spin = SpinParams::from_j(1.5);
        const DenseOperator u = build_floquet(FloquetSpec{spin, pi * 1.5, default_p});
        const auto series = entropy_series(spin, u, plus_y_state(spin), 12, EntropyKind::linear);
        REQUIRE(series.size() == 12);
        for (int kick = 3; kick <= 12; kick += 3) CHECK(std::abs(series[kick - 1]) < 1e-12);
        CHECK(series[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(series[1] == doctest::Approx(0.5).epsilon(1e-12));
    }

    SUBCASE("min_entropy_scan finds the kick-3 disentanglement") {
        const auto scan = min_entropy_scan(SpinParams::from_j(1.5), pi * 1.5,
                                           CoherentParams{pi / 2.0, pi / 2.0}, 100);
        CHECK(scan.kick == 3);
        CHECK(scan.value < 1e-12);
    }

    SUBCASE("kappa = 2 pi j keeps a coherent state coherent") {
        const auto scan =
            min_entropy_scan(SpinParams::from_j(2.0), 4.0 * pi, CoherentParams{0.7, 1.2}, 50);
        CHECK(scan.value < 1e-12);
    }

    SUBCASE("the half-integer quarter class never disentangles (j = 15.5)") {
        const auto scan = min_entropy_scan(SpinParams::from_j(15.5), pi * 15.5 / 2.0,
                                           CoherentParams{2.25, 2.0}, 200);
        CHECK(scan.value > 1e-5);
    }
}

TEST_CASE("stability_landscape: detuning response at j = 3/2") {
    SUBCASE("delta = 0 keeps the whole sphere disentangled") {
        const auto ls = stability_landscape(SpinParams::from_j(1.5), KappaClass::pj, 0.0, 10, 12, 24);
        CHECK(ls.orbit_n == 12);
        CHECK(ls.s_max < 1e-12);
    }

    SUBCASE("delta = 0.5 entangles most of the sphere") {
        const auto ls = stability_landscape(SpinParams::from_j(1.5), KappaClass::pj, 0.5, 10, 12, 24);
        CHECK(ls.s_max == doctest::Approx(0.4535).epsilon(2e-3));
        CHECK(ls.mean() == doctest::Approx(0.4199).epsilon(2e-3));
    }

    SUBCASE("classes without a period require an explicit orbit length") {
        CHECK_THROWS_AS((void)stability_landscape(SpinParams::from_j(2.5), KappaClass::pj_half, 0.1,
                                                  2, 6, 12),
                        std::invalid_argument);
        const auto ls = stability_landscape(SpinParams::from_j(2.5), KappaClass::pj_half, 0.1, 2, 6,
                                            12, Exec::parallel, 10);
        CHECK(ls.orbit_n == 10);
    }

    SUBCASE("parallel and serial agree bitwise") {
        const auto a =
            stability_landscape(SpinParams::from_j(3.5), KappaClass::pj, 0.7, 3, 10, 20, Exec::parallel);
        const auto b =
            stability_landscape(SpinParams::from_j(3.5), KappaClass::pj, 0.7, 3, 10, 20, Exec::serial);
        CHECK((a.values - b.values).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("mean landscape rises sharply with detuning") {
    std::vector<SpinParams> spins = {SpinParams::from_j(3.5), SpinParams::from_j(7.5)};
    const auto rows = mean_landscape_vs_spin(spins, {0.001, 0.01}, KappaClass::pj, 10, 16, 32);
    REQUIRE(rows.size() == 4);
    for (const auto& spin : spins) {
        double small = 0.0, large = 0.0;
        for (const auto& row : rows) {
            if (row.spin.two_j != spin.two_j) continue;
            (row.delta < 0.005 ? small : large) = row.mean;
        }
        CHECK(small > 0.0);
        CHECK(large / small > 100.0); // two decades of delta, ~four decades of entropy
    }
}
