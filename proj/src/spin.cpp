#include "kicked_top/spin.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>

namespace kt {

namespace {

constexpr double pi = std::numbers::pi;

// Ladder element sqrt(j(j+1) - m(m+1)) connecting m -> m+1.
double ladder(double j, double m) { return std::sqrt(j * (j + 1.0) - m * (m + 1.0)); }

struct JyEigen {
    Eigen::VectorXd values;
    Eigen::MatrixXcd vectors;
};

// Eigendecomposition of J_y, cached per spin so every rotation angle reuses it.
const JyEigen& jy_eigen(SpinParams spin) {
    static std::shared_mutex mutex;
    static std::map<int, std::unique_ptr<JyEigen>> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(spin.two_j); it != cache.end()) return *it->second;
    }
    auto jy = build_angular_momentum(spin).jy;
    Eigen::SelfAdjointEigenSolver<DenseOperator> solver(jy);
    auto entry = std::make_unique<JyEigen>(JyEigen{solver.eigenvalues(), solver.eigenvectors()});
    std::unique_lock lock(mutex);
    auto [it, inserted] = cache.try_emplace(spin.two_j, std::move(entry));
    return *it->second;
}

// k * log(x) with the k == 0 case pinned to 0 so that x == 0 never produces
// 0 * (-inf) = NaN; exp(-inf) = 0 is the correct amplitude at the poles.
double safe_klog(int k, double x) { return k == 0 ? 0.0 : k * std::log(x); }

} // namespace

AngularMomentum build_angular_momentum(SpinParams spin) {
    const int d = spin.dim();
    const double j = spin.j();
    DenseOperator jp = DenseOperator::Zero(d, d);
    DenseOperator jz = DenseOperator::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        const double m = spin.m_of(k);
        jz(k, k) = m;
        if (k > 0) jp(k - 1, k) = ladder(j, m); // J+ raises m: index k -> k-1
    }
    const DenseOperator jm = jp.adjoint();
    AngularMomentum out;
    out.jx = 0.5 * (jp + jm);
    out.jy = Complex(0.0, -0.5) * (jp - jm);
    out.jz = std::move(jz);
    return out;
}

DenseOperator rotation_y(SpinParams spin, double angle) {
    const auto& eig = jy_eigen(spin);
    const int d = spin.dim();
    Eigen::VectorXcd phases(d);
    for (int i = 0; i < d; ++i) phases(i) = std::exp(Complex(0.0, -angle * eig.values(i)));
    return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

DenseOperator rotation_z(SpinParams spin, double angle) {
    const int d = spin.dim();
    DenseOperator out = DenseOperator::Zero(d, d);
    for (int k = 0; k < d; ++k) out(k, k) = std::exp(Complex(0.0, -angle * spin.m_of(k)));
    return out;
}

DenseOperator twist(SpinParams spin, double kappa) {
    const int d = spin.dim();
    const double two_j = static_cast<double>(spin.two_j);
    DenseOperator out = DenseOperator::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        const double m = spin.m_of(k);
        out(k, k) = std::exp(Complex(0.0, -kappa * m * m / two_j));
    }
    return out;
}

std::vector<std::pair<double, Complex>> dicke_phase_table(SpinParams spin, double kappa) {
    const auto tw = twist(spin, kappa);
    std::vector<std::pair<double, Complex>> out;
    out.reserve(spin.dim());
    for (int k = 0; k < spin.dim(); ++k) out.emplace_back(spin.m_of(k), tw(k, k));
    return out;
}

double coherent_amplitude(SpinParams spin, double theta, int k) {
    const int n = spin.two_j;
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    if (c <= 0.0 && n - k > 0) return 0.0;
    if (s <= 0.0 && k > 0) return 0.0;
    const double log_binom = 0.5 * (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
    return std::exp(log_binom + safe_klog(n - k, c) + safe_klog(k, s));
}

StateVector coherent_state(SpinParams spin, CoherentParams params) {
    const int d = spin.dim();
    StateVector psi(d);
    for (int k = 0; k < d; ++k) {
        const double r = coherent_amplitude(spin, params.theta, k);
        psi(k) = r * std::exp(Complex(0.0, -params.phi * spin.m_of(k)));
    }
    return psi;
}

StateVector plus_y_state(SpinParams spin) {
    return coherent_state(spin, CoherentParams{0.5 * pi, 0.5 * pi});
}

} // namespace kt
