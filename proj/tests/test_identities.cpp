#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "kicked_top/floquet.hpp"
#include "kicked_top/identities.hpp"
#include "kicked_top/spin.hpp"

using namespace kt;

namespace {
constexpr double pi = std::numbers::pi;

std::vector<SpinParams> spin_sweep(int two_j_min, int two_j_max, int step = 1) {
    std::vector<SpinParams> out;
    for (int t = two_j_min; t <= two_j_max; t += step) out.push_back(SpinParams::from_two_j(t));
    return out;
}
} // namespace

TEST_CASE("pi-twist: full-strength twist collapses to signs or a global phase") {
    SUBCASE("level-by-level signs at j = 1 and j = 2") {
        const auto t1 = dicke_phase_table(SpinParams::from_j(1.0), 2.0 * pi * 1.0);
        const double expect1[] = {-1.0, 1.0, -1.0};
        for (int k = 0; k < 3; ++k)
            CHECK(std::abs(t1[k].second - Complex(expect1[k], 0.0)) < 1e-12);

        const auto t2 = dicke_phase_table(SpinParams::from_j(2.0), 2.0 * pi * 2.0);
        const double expect2[] = {1.0, -1.0, 1.0, -1.0, 1.0};
        for (int k = 0; k < 5; ++k)
            CHECK(std::abs(t2[k].second - Complex(expect2[k], 0.0)) < 1e-12);
    }

    SUBCASE("deviations vanish across parities") {
        for (const double j : {0.5, 1.0, 2.0, 7.5, 10.0})
            CHECK(pi_twist_deviation(SpinParams::from_j(j)) < 1e-12);
    }
}

TEST_CASE("twist-jpi: Dicke-level closed forms at kappa = pi j") {
    SUBCASE("scalar spot values") {
        // j = 1, level k = 1: e^{-i pi/4} (1 + i^5)/sqrt(2) = 1.
        const Complex val = std::exp(Complex(0.0, -pi / 4.0)) *
                            (Complex(1.0, 0.0) + Complex(0.0, 1.0)) / std::sqrt(2.0);
        CHECK(std::abs(val - Complex(1.0, 0.0)) < 1e-15);

        // j = 1/2: both levels e^{-i pi/8}.
        const auto table = dicke_phase_table(SpinParams::from_j(0.5), pi * 0.5);
        const Complex expect = std::exp(Complex(0.0, -pi / 8.0));
        CHECK(std::abs(table[0].second - expect) < 1e-15);
        CHECK(std::abs(table[1].second - expect) < 1e-15);
    }

    SUBCASE("deviation sweep up to j = 9/2 and beyond") {
        for (int two_j = 1; two_j <= 20; ++two_j)
            CHECK(twist_jpi_deviation(SpinParams::from_two_j(two_j)) < 1e-12);
    }
}

TEST_CASE("u4-u6: rotation form of low powers of U at kappa = pi j") {
    SUBCASE("integer j: U^4 is +R_y(pi), not its negative") {
        const auto spin = SpinParams::from_j(2.0);
        const DenseOperator u = build_floquet(FloquetSpec{spin, pi * 2.0, default_p});
        const DenseOperator u4 = matrix_power(u, 4);
        const DenseOperator ry = rotation_y(spin, pi);
        CHECK((u4 - ry).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((u4 + ry).cwiseAbs().maxCoeff() > 0.5); // the opposite sign is far off
    }

    SUBCASE("half-integer j: U^12 is e^{-i pi/2} I") {
        const auto spin = SpinParams::from_j(1.5);
        const DenseOperator u = build_floquet(FloquetSpec{spin, pi * 1.5, default_p});
        const DenseOperator u12 = matrix_power(u, 12);
        const DenseOperator expect =
            std::exp(Complex(0.0, -pi / 2.0)) * DenseOperator::Identity(4, 4);
        CHECK((u12 - expect).cwiseAbs().maxCoeff() < 1e-10);
    }

    SUBCASE("deviation sweep across both parities") {
        for (int two_j = 1; two_j <= 12; ++two_j)
            CHECK(u4_u6_deviation(SpinParams::from_two_j(two_j)) < 1e-10);
    }
}

TEST_CASE("gauss-sum: quarter twist as four z rotations (integer spins only)") {
    for (const double j : {1.0, 2.0, 6.0})
        CHECK(gaussian_sum_deviation(SpinParams::from_j(j)) < 1e-12);
    CHECK_THROWS_AS((void)gaussian_sum_deviation(SpinParams::from_j(1.5)), std::invalid_argument);
}

TEST_CASE("rational-classes: shifted classes recur exactly as tabulated") {
    CHECK(rational_class_deviation(SpinParams::from_j(3.0)) < 1e-10);
    CHECK(rational_class_deviation(SpinParams::from_j(2.5)) < 1e-10);
    CHECK(rational_class_deviation(SpinParams::from_j(2.0)) < 1e-10);
}

TEST_CASE("aggregate checks summarize a spin range") {
    const auto sweep = spin_sweep(1, 20);
    const auto pi_twist = check_pi_twist_cases(sweep);
    CHECK(pi_twist.name == "pi-twist");
    CHECK(pi_twist.spin_range == "j=0.5..10");
    CHECK(pi_twist.pass);
    CHECK(pi_twist.max_deviation < 1e-10);

    std::vector<SpinParams> integers;
    for (int j = 1; j <= 10; ++j) integers.push_back(SpinParams::from_j(j));
    const auto gauss = check_gaussian_sum_pij2(integers);
    CHECK(gauss.pass);

    CHECK(check_twist_jpi(sweep).pass);
    CHECK(check_U4_U6(sweep).pass);
    CHECK(check_3pij_and_5pij2(spin_sweep(1, 12)).pass);
}

TEST_CASE("run_all_identity_checks: row layout, parity filter, serial equality") {
    const auto spins = spin_sweep(1, 4); // 0.5, 1, 1.5, 2
    const auto rows = run_all_identity_checks(spins);
    // Four all-parity families x 4 spins + gauss-sum on the 2 integer spins.
    REQUIRE(rows.size() == 18);
    for (const auto& row : rows) {
        CHECK(row.pass);
        if (row.name == "gauss-sum") CHECK(row.spin.is_integer());
    }
    // Deterministic family-major order.
    CHECK(rows[0].name == "pi-twist");
    CHECK(rows[4].name == "twist-jpi");

    const auto serial = run_all_identity_checks(spins, 1e-10, Exec::serial);
    REQUIRE(serial.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].name == serial[i].name);
        CHECK(rows[i].spin.two_j == serial[i].spin.two_j);
        CHECK(rows[i].max_deviation == serial[i].max_deviation);
    }
}

TEST_CASE("run_identity_check: single family selection and unknown names") {
    const auto rows = run_identity_check("u4-u6", spin_sweep(2, 6, 2)); // j = 1, 2, 3
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) CHECK(row.name == "u4-u6");
    CHECK_THROWS_AS((void)run_identity_check("no-such-check", spin_sweep(2, 4)),
                    std::invalid_argument);
}

TEST_CASE("spin_label renders integers and halves") {
    CHECK(spin_label(SpinParams::from_j(3.0)) == "3");
    CHECK(spin_label(SpinParams::from_j(0.5)) == "0.5");
    CHECK(spin_label(SpinParams::from_j(15.5)) == "15.5");
}
