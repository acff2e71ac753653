#pragma once

#include <array>
#include <cmath>
#include <utility>

#include "bilms/bicomplex.hpp"
#include "bilms/vector.hpp"

namespace bilms {

/// The four conjugation-adapted differential operators. Acting on the real
/// coordinates (x1, x2, x3, x4) each one is c * (s1 d/dx1 + s2 i d/dx2 +
/// s3 j d/dx3 + s4 k d/dx4) with the sign pattern of its kind.
enum class PartialKind { z, z_bar, z_star, z_dagger };

enum class WirtingerKind { dz, dz_bar };

/// Finite-difference settings. The normalization constant c scales every
/// bicomplex operator; c = 1/2 makes an operator applied to its own
/// conjugation-matched variable equal 2 (self-value 4c), which is the
/// convention the learning rules below are derived under.
struct FDConfig {
    double h = 1e-5;
    double c = 0.5;
    bool scale_h_by_coordinate = true;
};

inline void validate(const FDConfig& cfg) {
    if (!(cfg.h > 0.0)) throw std::invalid_argument("FDConfig: h must be positive");
    if (cfg.c != 1.0 && cfg.c != 0.5 && cfg.c != 0.25)
        throw std::invalid_argument("FDConfig: c must be one of 1, 1/2, 1/4");
}

inline std::array<double, 4> sign_pattern(PartialKind which) {
    switch (which) {
        case PartialKind::z: return {+1, -1, -1, +1};
        case PartialKind::z_bar: return {+1, +1, -1, -1};
        case PartialKind::z_star: return {+1, +1, +1, +1};
        case PartialKind::z_dagger: return {+1, -1, +1, -1};
    }
    throw std::invalid_argument("sign_pattern: bad kind");
}

namespace detail {

inline double fd_step(const FDConfig& cfg, double coordinate) {
    return cfg.scale_h_by_coordinate ? cfg.h * std::max(1.0, std::abs(coordinate)) : cfg.h;
}

}  // namespace detail

/// Central-difference Wirtinger derivative of a complex scalar field:
/// d/dz = (d/dx - i d/dy)/2, d/dz̄ = (d/dx + i d/dy)/2. Error is O(h^2)
/// for smooth fields.
template <class F>
Complex wirtinger(F&& f, const Complex& z, WirtingerKind which, const FDConfig& cfg = {}) {
    validate(cfg);
    const double hx = detail::fd_step(cfg, z.real());
    const double hy = detail::fd_step(cfg, z.imag());
    const Complex dx = (f(z + hx) - f(z - hx)) / (2.0 * hx);
    const Complex dy = (f(z + Complex(0, hy)) - f(z - Complex(0, hy))) / (2.0 * hy);
    return which == WirtingerKind::dz ? 0.5 * (dx - Complex(0, 1) * dy)
                                      : 0.5 * (dx + Complex(0, 1) * dy);
}

/// Central-difference bicomplex partial of a scalar field f at Z. Field
/// handles must be deterministic and side-effect free (not enforced).
template <class F>
Bicomplex bc_partial(F&& f, const Bicomplex& at, PartialKind which, const FDConfig& cfg = {}) {
    validate(cfg);
    const std::array<double, 4> x{at.x1(), at.x2(), at.x3(), at.x4()};
    std::array<Bicomplex, 4> d;
    for (int m = 0; m < 4; ++m) {
        const double hm = detail::fd_step(cfg, x[m]);
        std::array<double, 4> xp = x, xn = x;
        xp[m] += hm;
        xn[m] -= hm;
        d[m] = (f(Bicomplex::from_components(xp[0], xp[1], xp[2], xp[3])) -
                f(Bicomplex::from_components(xn[0], xn[1], xn[2], xn[3]))) /
               (2.0 * hm);
    }
    const std::array<double, 4> s = sign_pattern(which);
    return cfg.c * (s[0] * d[0] + s[1] * (unit_i() * d[1]) + s[2] * (unit_j() * d[2]) +
                    s[3] * (unit_k() * d[3]));
}

/// Gradient of a field over BC^n: component k is the partial with respect
/// to the k-th variable, all other variables frozen. Same shape as the input.
template <class F>
BicomplexVector bc_grad(F&& f, const BicomplexVector& at, PartialKind which, const FDConfig& cfg = {}) {
    BicomplexVector g(at.size());
    for (std::size_t k = 0; k < at.size(); ++k) {
        g[k] = bc_partial(
            [&](const Bicomplex& zk) {
                BicomplexVector v = at;
                v[k] = zk;
                return f(v);
            },
            at[k], which, cfg);
    }
    return g;
}

/// Componentwise Wirtinger gradient of a field over C^n.
template <class F>
ComplexVector wirtinger_grad(F&& f, const ComplexVector& at, WirtingerKind which, const FDConfig& cfg = {}) {
    ComplexVector g(at.size());
    for (std::size_t k = 0; k < at.size(); ++k) {
        g[k] = wirtinger(
            [&](const Complex& zk) {
                ComplexVector v = at;
                v[k] = zk;
                return f(v);
            },
            at[k], which, cfg);
    }
    return g;
}

/// Norm of the Leibniz defect d(fg) - f dg - (df) g at a point; near zero
/// for BC-R analytic factors.
template <class F, class G>
double leibniz_residual(F&& f, G&& g, const Bicomplex& at, PartialKind which, const FDConfig& cfg = {}) {
    auto product = [&](const Bicomplex& z) { return f(z) * g(z); };
    const Bicomplex lhs = bc_partial(product, at, which, cfg);
    const Bicomplex rhs = f(at) * bc_partial(g, at, which, cfg) + bc_partial(f, at, which, cfg) * g(at);
    return norm(lhs - rhs);
}

}  // namespace bilms
