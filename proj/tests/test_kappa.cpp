#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <string>

#include "kicked_top/kappa.hpp"

using namespace kt;

namespace {
constexpr double pi = std::numbers::pi;
} // namespace

TEST_CASE("class tokens round-trip through the parser") {
    for (int c = 0; c < 9; ++c) {
        const auto cls = static_cast<KappaClass>(c);
        const auto parsed = parse_kappa_class(kappa_class_token(cls));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == cls);
    }
    CHECK_FALSE(parse_kappa_class("pj/3").has_value());
    CHECK_FALSE(parse_kappa_class("").has_value());
    CHECK_FALSE(parse_kappa_class("2 pj").has_value());
}

TEST_CASE("kappa_of evaluates c * pi j / 2") {
    const auto spin = SpinParams::from_j(2.0);
    CHECK(kappa_of(spin, KappaClass::zero) == 0.0);
    CHECK(kappa_of(spin, KappaClass::pj) == doctest::Approx(2.0 * pi).epsilon(1e-15));
    CHECK(kappa_of(spin, KappaClass::pj_half) == doctest::Approx(pi).epsilon(1e-15));
    CHECK(kappa_of(spin, KappaClass::four_pj) == doctest::Approx(8.0 * pi).epsilon(1e-15));

    const auto half = SpinParams::from_j(3.5);
    CHECK(kappa_of(half, KappaClass::three_pj) == doctest::Approx(3.0 * pi * 3.5).epsilon(1e-15));
}

TEST_CASE("expected_period reproduces the recurrence table") {
    SUBCASE("integer spins, generic rows") {
        const auto j2 = SpinParams::from_j(2.0);
        CHECK(expected_period(j2, KappaClass::zero) == 4);
        CHECK(expected_period(j2, KappaClass::pj) == 8);
        CHECK(expected_period(j2, KappaClass::two_pj) == 2);
        CHECK(expected_period(j2, KappaClass::three_pj) == 8);
        CHECK(expected_period(j2, KappaClass::four_pj) == 4);
        // Starred quarter-classes: 48 kicks for generic integer spins.
        CHECK(expected_period(j2, KappaClass::pj_half) == 48);
        CHECK(expected_period(j2, KappaClass::pj_3half) == 48);
        CHECK(expected_period(j2, KappaClass::pj_5half) == 48);
        CHECK(expected_period(j2, KappaClass::pj_7half) == 48);
    }

    SUBCASE("half-integer spins >= 3/2") {
        const auto j32 = SpinParams::from_j(1.5);
        CHECK(expected_period(j32, KappaClass::zero) == 4);
        CHECK(expected_period(j32, KappaClass::pj) == 12);
        CHECK(expected_period(j32, KappaClass::two_pj) == 4);
        CHECK(expected_period(j32, KappaClass::three_pj) == 12);
        CHECK(expected_period(j32, KappaClass::four_pj) == 4);
        // No finite recurrence in the starred classes.
        CHECK_FALSE(expected_period(j32, KappaClass::pj_half).has_value());
        CHECK_FALSE(expected_period(SpinParams::from_j(7.5), KappaClass::pj_5half).has_value());
    }

    SUBCASE("j = 1/2: the twist is a global phase, so every class recurs in 4") {
        const auto half = SpinParams::from_j(0.5);
        for (int c = 0; c < 9; ++c)
            CHECK(expected_period(half, static_cast<KappaClass>(c)) == 4);
    }

    SUBCASE("j = 1 and j = 3 shorten the starred classes to 16") {
        for (const double j : {1.0, 3.0}) {
            const auto spin = SpinParams::from_j(j);
            CHECK(expected_period(spin, KappaClass::pj_half) == 16);
            CHECK(expected_period(spin, KappaClass::pj_3half) == 16);
            CHECK(expected_period(spin, KappaClass::pj_5half) == 16);
            CHECK(expected_period(spin, KappaClass::pj_7half) == 16);
        }
        CHECK(expected_period(SpinParams::from_j(4.0), KappaClass::pj_half) == 48);
    }
}

TEST_CASE("is_table_ratio recognizes denominators 1 and 2 after reduction") {
    CHECK(is_table_ratio(1, 1));
    CHECK(is_table_ratio(1, 2));
    CHECK(is_table_ratio(5, 1));
    CHECK(is_table_ratio(2, 4)); // reduces to 1/2
    CHECK(is_table_ratio(8, 2)); // reduces to 4/1
    CHECK(is_table_ratio(9, 2)); // 9/2 = 1/2 mod 4
    CHECK_FALSE(is_table_ratio(1, 3));
    CHECK_FALSE(is_table_ratio(3, 4));
    CHECK_FALSE(is_table_ratio(2, 5));
    CHECK_FALSE(is_table_ratio(5, 3));
}
