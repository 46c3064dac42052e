#include "kicked_top/identities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "kicked_top/floquet.hpp"
#include "kicked_top/kappa.hpp"
#include "kicked_top/recurrence.hpp"
#include "kicked_top/spin.hpp"

namespace kt {

namespace {

constexpr double pi = std::numbers::pi;

Complex unit_phase(double angle) { return std::exp(Complex(0.0, angle)); }

// i^e for possibly large integer e.
Complex i_power(long long e) {
    switch (((e % 4) + 4) % 4) {
    case 0: return Complex(1.0, 0.0);
    case 1: return Complex(0.0, 1.0);
    case 2: return Complex(-1.0, 0.0);
    default: return Complex(0.0, -1.0);
    }
}

double max_entry_deviation(const DenseOperator& a, const DenseOperator& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

IdentityCheck aggregate(const char* name, const std::vector<SpinParams>& j_values, double tol,
                        const std::function<double(SpinParams)>& kernel) {
    if (j_values.empty()) throw std::invalid_argument("identity check: empty spin list");
    IdentityCheck check;
    check.name = name;
    check.spin_range = "j=" + spin_label(j_values.front()) + ".." + spin_label(j_values.back());
    check.tolerance = tol;
    for (const auto& spin : j_values) check.max_deviation = std::max(check.max_deviation, kernel(spin));
    check.pass = check.max_deviation < tol;
    return check;
}

} // namespace

std::string spin_label(SpinParams spin) {
    if (spin.two_j % 2 == 0) return std::to_string(spin.two_j / 2);
    return std::to_string(spin.two_j / 2) + ".5";
}

double pi_twist_deviation(SpinParams spin) {
    const auto table = dicke_phase_table(spin, 2.0 * pi * spin.j());
    double dev = 0.0;
    if (spin.is_integer()) {
        const double sign = ((spin.two_j / 2) % 2 == 0) ? 1.0 : -1.0; // even j: +, odd j: -
        for (int k = 0; k < spin.dim(); ++k) {
            const Complex expect = sign * ((k % 2 == 0) ? 1.0 : -1.0);
            dev = std::max(dev, std::abs(table[k].second - expect));
        }
    } else {
        const Complex expect = unit_phase(-pi / 4.0);
        for (int k = 0; k < spin.dim(); ++k)
            dev = std::max(dev, std::abs(table[k].second - expect));
    }
    return dev;
}

double twist_jpi_deviation(SpinParams spin) {
    const auto table = dicke_phase_table(spin, pi * spin.j());
    const int n = spin.two_j;
    double dev = 0.0;
    for (int k = 0; k < spin.dim(); ++k) {
        Complex expect;
        if (spin.is_integer())
            expect = unit_phase(-pi / 4.0) * (1.0 + i_power(n + 1 + 2 * k)) / std::sqrt(2.0);
        else
            expect = unit_phase(-pi / 8.0) * std::sqrt(2.0) * std::cos((n - 2 * k) * pi / 4.0);
        dev = std::max(dev, std::abs(table[k].second - expect));
    }
    return dev;
}

double u4_u6_deviation(SpinParams spin) {
    const DenseOperator u = build_floquet(FloquetSpec{spin, pi * spin.j(), default_p});
    const DenseOperator ry = rotation_y(spin, pi);
    const DenseOperator id = DenseOperator::Identity(spin.dim(), spin.dim());
    double dev = 0.0;
    if (spin.is_integer()) {
        const DenseOperator u4 = matrix_power(u, 4);
        dev = std::max(dev, max_entry_deviation(u4, ry));
        dev = std::max(dev, max_entry_deviation(u4 * u4, id));
    } else {
        const DenseOperator u6 = matrix_power(u, 6);
        dev = std::max(dev, max_entry_deviation(u6, unit_phase(pi / 4.0) * ry));
        dev = std::max(dev, max_entry_deviation(u6 * u6, unit_phase(-pi / 2.0) * id));
    }
    return dev;
}

double gaussian_sum_deviation(SpinParams spin) {
    if (!spin.is_integer())
        throw std::invalid_argument("gaussian-sum check requires integer spin, got j=" + spin_label(spin));
    const DenseOperator lhs = twist(spin, pi * spin.j() / 2.0);
    const DenseOperator id = DenseOperator::Identity(spin.dim(), spin.dim());
    const DenseOperator rhs = 0.5 * (unit_phase(-pi / 4.0) * id + rotation_z(spin, pi / 2.0) +
                                     unit_phase(3.0 * pi / 4.0) * rotation_z(spin, pi) +
                                     rotation_z(spin, 3.0 * pi / 2.0));
    return max_entry_deviation(lhs, rhs);
}

double rational_class_deviation(SpinParams spin, int n_max, double tol) {
    double dev = 0.0;
    for (const KappaClass c : {KappaClass::three_pj, KappaClass::pj_5half, KappaClass::pj_7half}) {
        const auto expected = expected_period(spin, c);
        const auto report =
            detect_period(build_floquet(FloquetSpec{spin, kappa_of(spin, c), default_p}), n_max, tol);
        if (expected && report.period && *report.period == *expected)
            dev = std::max(dev, report.error_series.back());
        else if (!expected && !report.period)
            ; // correct absence, zero deviation
        else
            dev = std::max(dev, 1.0); // mismatch sentinel
    }
    return dev;
}

IdentityCheck check_pi_twist_cases(const std::vector<SpinParams>& j_values, double tol) {
    return aggregate("pi-twist", j_values, tol, pi_twist_deviation);
}

IdentityCheck check_twist_jpi(const std::vector<SpinParams>& j_values, double tol) {
    return aggregate("twist-jpi", j_values, tol, twist_jpi_deviation);
}

IdentityCheck check_U4_U6(const std::vector<SpinParams>& j_values, double tol) {
    return aggregate("u4-u6", j_values, tol, u4_u6_deviation);
}

IdentityCheck check_gaussian_sum_pij2(const std::vector<SpinParams>& j_values, double tol) {
    return aggregate("gauss-sum", j_values, tol, gaussian_sum_deviation);
}

IdentityCheck check_3pij_and_5pij2(const std::vector<SpinParams>& j_values, double tol) {
    return aggregate("rational-classes", j_values, tol,
                     [tol](SpinParams spin) { return rational_class_deviation(spin, 500, tol); });
}

namespace {

struct Family {
    const char* name;
    double (*kernel)(SpinParams, double);
    bool integer_only;
};

constexpr Family families[] = {
    {"pi-twist", [](SpinParams s, double) { return pi_twist_deviation(s); }, false},
    {"twist-jpi", [](SpinParams s, double) { return twist_jpi_deviation(s); }, false},
    {"u4-u6", [](SpinParams s, double) { return u4_u6_deviation(s); }, false},
    {"gauss-sum", [](SpinParams s, double) { return gaussian_sum_deviation(s); }, true},
    {"rational-classes", [](SpinParams s, double tol) { return rational_class_deviation(s, 500, tol); },
     false},
};

std::vector<IdentityResult> run_families(const std::vector<const Family*>& selected,
                                         const std::vector<SpinParams>& j_values, double tol,
                                         Exec exec) {
    struct Task {
        const Family* family;
        SpinParams spin;
    };
    std::vector<Task> tasks;
    for (const Family* family : selected)
        for (const auto& spin : j_values) {
            if (family->integer_only && !spin.is_integer()) continue;
            tasks.push_back(Task{family, spin});
        }

    std::vector<IdentityResult> results(tasks.size());
    for_each_index(static_cast<std::ptrdiff_t>(tasks.size()), exec, [&](std::ptrdiff_t i) {
        const Task& task = tasks[i];
        IdentityResult result;
        result.name = task.family->name;
        result.spin = task.spin;
        result.tolerance = tol;
        result.max_deviation = task.family->kernel(task.spin, tol);
        result.pass = result.max_deviation < tol;
        results[i] = std::move(result);
    });
    return results;
}

} // namespace

std::vector<IdentityResult> run_all_identity_checks(const std::vector<SpinParams>& j_values,
                                                    double tol, Exec exec) {
    std::vector<const Family*> selected;
    for (const Family& family : families) selected.push_back(&family);
    return run_families(selected, j_values, tol, exec);
}

std::vector<IdentityResult> run_identity_check(const std::string& name,
                                               const std::vector<SpinParams>& j_values, double tol,
                                               Exec exec) {
    for (const Family& family : families)
        if (name == family.name) return run_families({&family}, j_values, tol, exec);
    throw std::invalid_argument("unknown identity check: " + name);
}

} // namespace kt
