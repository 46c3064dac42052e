#pragma once

#include <string>
#include <vector>

#include "kicked_top/parallel.hpp"
#include "kicked_top/types.hpp"

namespace kt {

// Aggregate verdict of one identity family over a spin range.
struct IdentityCheck {
    std::string name;
    std::string spin_range;
    double max_deviation = 0.0;
    double tolerance = 1e-10;
    bool pass = false; // max_deviation < tolerance
};

// One (family, spin) entry of the detailed report.
struct IdentityResult {
    std::string name;
    SpinParams spin;
    double max_deviation = 0.0;
    double tolerance = 1e-10;
    bool pass = false;
};

// Per-spin deviation kernels. Each returns the largest entrywise (or
// diagonal-phase) deviation between the two sides of the identity.

// twist(2 pi j) == diag((-1)^k) for even integer j, its negative for odd
// integer j, and e^{-i pi/4} I for half-integer j.
double pi_twist_deviation(SpinParams spin);

// Diagonal of twist(pi j) against the closed Dicke-level phases:
// integer j:       e^{-i pi/4} (1 + i^{n+1+2k}) / sqrt(2)
// half-integer j:  e^{-i pi/8} sqrt(2) cos((n - 2k) pi / 4)
// with n = 2j and level index k (m = j - k).
double twist_jpi_deviation(SpinParams spin);

// Rotation form of the fourth/sixth power of U_{pi j}:
// integer j:       U^4 = rotation_y(pi)            and U^8  = I
// half-integer j:  U^6 = e^{ i pi/4} rotation_y(pi) and U^12 = e^{-i pi/2} I.
double u4_u6_deviation(SpinParams spin);

// twist(pi j / 2) == (1/2)[e^{-i pi/4} I + R_z(pi/2) + e^{i 3pi/4} R_z(pi)
// + R_z(3pi/2)] for integer j. Throws std::invalid_argument on half-integer
// spin: the splitting only exists for integer parity, and asking for it on
// the wrong parity is a caller error, never a silent skip.
double gaussian_sum_deviation(SpinParams spin);

// Period claims for the shifted classes 3 pi j, 5 pi j/2 and 7 pi j/2:
// returns the identity error at the confirmed period, 0 for a correct
// absence, and 1 as a mismatch sentinel.
double rational_class_deviation(SpinParams spin, int n_max = 500, double tol = 1e-10);

IdentityCheck check_pi_twist_cases(const std::vector<SpinParams>& j_values, double tol = 1e-10);
IdentityCheck check_twist_jpi(const std::vector<SpinParams>& j_values, double tol = 1e-10);
IdentityCheck check_U4_U6(const std::vector<SpinParams>& j_values, double tol = 1e-10);
IdentityCheck check_gaussian_sum_pij2(const std::vector<SpinParams>& j_values, double tol = 1e-10);
IdentityCheck check_3pij_and_5pij2(const std::vector<SpinParams>& j_values, double tol = 1e-10);

inline constexpr const char* identity_check_names[] = {"pi-twist", "twist-jpi", "u4-u6",
                                                       "gauss-sum", "rational-classes"};

// Every (family, spin) pair, evaluated in parallel, merged in deterministic
// (family, spin) order. The integer-only Gaussian-sum family runs on the
// integer subset of j_values; the other four run on all of them.
std::vector<IdentityResult> run_all_identity_checks(const std::vector<SpinParams>& j_values,
                                                    double tol = 1e-10, Exec exec = Exec::parallel);

// Same per-spin rows for a single family named by its token above; throws
// std::invalid_argument for an unknown name.
std::vector<IdentityResult> run_identity_check(const std::string& name,
                                               const std::vector<SpinParams>& j_values,
                                               double tol = 1e-10, Exec exec = Exec::parallel);

// Human-readable spin label: "3", "0.5", "15.5", ...
std::string spin_label(SpinParams spin);

} // namespace kt
