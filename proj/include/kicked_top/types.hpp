#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace kt {

using Complex = std::complex<double>;

// Dense D x D complex matrix in the descending-m basis:
// row/column k corresponds to the magnetic quantum number m = j - k.
using DenseOperator = Eigen::MatrixXcd;

// Length-D complex amplitude vector, same basis convention.
using StateVector = Eigen::VectorXcd;

enum class Parity { integer_spin, half_integer_spin };

// Spin magnitude j (positive half-integer) and derived Hilbert dimension.
// Stored as two_j to keep parity and arithmetic exact; j = 0 is rejected
// everywhere because the twist divides by 2j.
struct SpinParams {
    int two_j = 1;

    static SpinParams from_two_j(int two_j) {
        if (two_j <= 0) throw std::invalid_argument("spin must satisfy j >= 1/2");
        return SpinParams{two_j};
    }

    // Accepts decimal spins (e.g. 15.5) that are exact multiples of 1/2.
    static SpinParams from_j(double j) {
        const double two = 2.0 * j;
        const auto rounded = static_cast<long long>(two + (two > 0 ? 0.5 : -0.5));
        if (two <= 0.0 || std::abs(two - static_cast<double>(rounded)) > 1e-9)
            throw std::invalid_argument("spin must be a positive multiple of 1/2, got " + std::to_string(j));
        return from_two_j(static_cast<int>(rounded));
    }

    double j() const { return 0.5 * two_j; }
    int dim() const { return two_j + 1; }
    Parity parity() const { return (two_j % 2 == 0) ? Parity::integer_spin : Parity::half_integer_spin; }
    bool is_integer() const { return two_j % 2 == 0; }
    // m value of basis index k, m = j - k.
    double m_of(int k) const { return 0.5 * two_j - k; }
};

// Spherical coordinates of a spin coherent state: theta from the +z pole.
struct CoherentParams {
    double theta = 0.0;
    double phi = 0.0;
};

} // namespace kt
