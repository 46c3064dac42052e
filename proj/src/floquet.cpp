#include "kicked_top/floquet.hpp"

#include <cmath>
#include <stdexcept>

namespace kt {

DenseOperator build_floquet(const FloquetSpec& spec) {
    return twist(spec.spin, spec.kappa) * rotation_y(spec.spin, spec.p);
}

DenseOperator build_perturbed(const PerturbedSpec& spec) {
    FloquetSpec shifted = spec.base;
    shifted.kappa += spec.delta;
    return build_floquet(shifted);
}

StateVector apply_kick(const DenseOperator& u, const StateVector& state) {
    if (u.cols() != state.size()) throw std::invalid_argument("apply_kick: dimension mismatch");
    StateVector next = u * state;
    const double norm = next.norm();
    if (std::abs(norm - 1.0) > 1e-12)
        throw std::runtime_error("apply_kick: norm drift exceeded 1e-12 in one step");
    next /= norm;
    return next;
}

std::vector<StateVector> apply_kicks(const DenseOperator& u, const StateVector& state, int n) {
    if (u.cols() != state.size()) throw std::invalid_argument("apply_kicks: dimension mismatch");
    if (n < 0) throw std::invalid_argument("apply_kicks: negative kick count");
    std::vector<StateVector> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    out.push_back(state);
    for (int i = 0; i < n; ++i) out.push_back(apply_kick(u, out.back()));
    return out;
}

DenseOperator matrix_power(const DenseOperator& u, long long n) {
    if (n < 0) throw std::invalid_argument("matrix_power: negative exponent");
    DenseOperator result = DenseOperator::Identity(u.rows(), u.cols());
    DenseOperator base = u;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

} // namespace kt
