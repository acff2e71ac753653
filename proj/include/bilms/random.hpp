#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "bilms/bicomplex.hpp"

namespace bilms {

/// Deterministic Gaussian source: mt19937_64 (whose output sequence is
/// fixed by the standard) plus an explicit Box-Muller transform, so a seed
/// pins the stream down to the arithmetic. No library-defined
/// distributions are involved.
///
/// Draw accounting: uniform01() consumes one engine output; normal()
/// consumes exactly two, with no cached spare.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random mantissa bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double normal(double sigma = 1.0) {
        const double u1 = uniform01();
        const double u2 = uniform01();
        // log1p(-u1) = log(1 - u1) stays finite since u1 < 1
        const double r = std::sqrt(-2.0 * std::log1p(-u1));
        return sigma * r * std::cos(2.0 * pi * u2);
    }

    /// Real and imaginary part drawn in that order.
    Complex normal_complex(double sigma_per_coord) {
        const double re = normal(sigma_per_coord);
        const double im = normal(sigma_per_coord);
        return {re, im};
    }

    /// Coordinates x1, x2, x3, x4 drawn in that order.
    Bicomplex normal_bicomplex(double sigma_per_coord) {
        const Complex a = normal_complex(sigma_per_coord);
        const Complex b = normal_complex(sigma_per_coord);
        return {a, b};
    }

private:
    static constexpr double pi = 3.14159265358979323846;

    std::mt19937_64 engine_;
};

}  // namespace bilms
