#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>
#include <stdexcept>

namespace bilms {

using Complex = std::complex<double>;

/// Thrown by inverse() when the argument lies on (or numerically at) the
/// zero-divisor cone, i.e. one of its idempotent components vanishes.
struct zero_divisor_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Coordinates (l1, l2) of a bicomplex number in the idempotent basis
/// {e1, e2}. This is the unique basis in which both addition and
/// multiplication act componentwise.
struct IdempotentPair {
    Complex l1{};
    Complex l2{};
};

inline IdempotentPair operator+(const IdempotentPair& a, const IdempotentPair& b) {
    return {a.l1 + b.l1, a.l2 + b.l2};
}

inline IdempotentPair operator*(const IdempotentPair& a, const IdempotentPair& b) {
    return {a.l1 * b.l1, a.l2 * b.l2};
}

/// Hyperbolic-valued norm (|l1|, |l2|): nonnegative coefficients of e1 and
/// e2. Zero iff the argument is zero, and multiplicative under the
/// bicomplex product.
struct HyperbolicNorm {
    double m1 = 0.0;
    double m2 = 0.0;
};

/// A bicomplex number Z = x1 + i x2 + j x3 + k x4 = z1 + j z2 with two
/// commuting imaginary units i, j and hyperbolic unit k = ij (k^2 = +1).
/// Canonical storage is the complex pair (z1, z2) = (x1 + i x2, x3 + i x4);
/// idempotent coordinates are computed on demand and never cached.
///
/// All constructors reject non-finite coordinates.
class Bicomplex {
public:
    Bicomplex() = default;

    Bicomplex(double x1) : z1_(x1) { ensure_finite(); }

    Bicomplex(const Complex& z1) : z1_(z1) { ensure_finite(); }

    Bicomplex(const Complex& z1, const Complex& z2) : z1_(z1), z2_(z2) { ensure_finite(); }

    static Bicomplex from_components(double x1, double x2, double x3, double x4) {
        return Bicomplex(Complex(x1, x2), Complex(x3, x4));
    }

    /// Inverse of the idempotent split: z1 = (l1 + l2)/2, z2 = i(l1 - l2)/2.
    static Bicomplex from_idempotent(const Complex& l1, const Complex& l2) {
        const double dr = l1.real() - l2.real();
        const double di = l1.imag() - l2.imag();
        return Bicomplex(Complex((l1.real() + l2.real()) / 2.0, (l1.imag() + l2.imag()) / 2.0),
                         Complex(-di / 2.0, dr / 2.0));
    }

    static Bicomplex from_idempotent(const IdempotentPair& p) { return from_idempotent(p.l1, p.l2); }

    const Complex& z1() const { return z1_; }
    const Complex& z2() const { return z2_; }

    double x1() const { return z1_.real(); }
    double x2() const { return z1_.imag(); }
    double x3() const { return z2_.real(); }
    double x4() const { return z2_.imag(); }

    /// Idempotent coordinates (l1, l2) = (z1 - i z2, z1 + i z2); written out
    /// in reals this is ((x1+x4) + i(x2-x3), (x1-x4) + i(x2+x3)).
    IdempotentPair idempotent() const {
        return {Complex(x1() + x4(), x2() - x3()), Complex(x1() - x4(), x2() + x3())};
    }

    Bicomplex& operator+=(const Bicomplex& o) {
        z1_ += o.z1_;
        z2_ += o.z2_;
        return *this;
    }

    Bicomplex& operator-=(const Bicomplex& o) {
        z1_ -= o.z1_;
        z2_ -= o.z2_;
        return *this;
    }

    Bicomplex& operator*=(const Bicomplex& o);

    friend bool operator==(const Bicomplex& a, const Bicomplex& b) {
        return a.z1_ == b.z1_ && a.z2_ == b.z2_;
    }

private:
    void ensure_finite() const {
        if (!(std::isfinite(x1()) && std::isfinite(x2()) && std::isfinite(x3()) && std::isfinite(x4())))
            throw std::domain_error("bicomplex: non-finite component");
    }

    Complex z1_{};
    Complex z2_{};
};

inline IdempotentPair to_idempotent(const Bicomplex& z) { return z.idempotent(); }

inline Bicomplex from_idempotent(const IdempotentPair& p) { return Bicomplex::from_idempotent(p); }

inline Bicomplex operator+(const Bicomplex& a, const Bicomplex& b) {
    Bicomplex r = a;
    r += b;
    return r;
}

inline Bicomplex operator-(const Bicomplex& a, const Bicomplex& b) {
    Bicomplex r = a;
    r -= b;
    return r;
}

inline Bicomplex operator-(const Bicomplex& a) {
    return Bicomplex(-a.z1(), -a.z2());
}

/// Product via the idempotent representation: (a1,a2)·(b1,b2) = (a1 b1, a2 b2).
inline Bicomplex operator*(const Bicomplex& a, const Bicomplex& b) {
    const IdempotentPair pa = a.idempotent();
    const IdempotentPair pb = b.idempotent();
    return Bicomplex::from_idempotent(pa.l1 * pb.l1, pa.l2 * pb.l2);
}

inline Bicomplex& Bicomplex::operator*=(const Bicomplex& o) {
    *this = *this * o;
    return *this;
}

inline Bicomplex operator*(double s, const Bicomplex& z) {
    return Bicomplex(s * z.z1(), s * z.z2());
}

inline Bicomplex operator*(const Bicomplex& z, double s) { return s * z; }

inline Bicomplex operator/(const Bicomplex& z, double s) {
    return Bicomplex(z.z1() / s, z.z2() / s);
}

inline Bicomplex unit_i() { return Bicomplex::from_components(0, 1, 0, 0); }
inline Bicomplex unit_j() { return Bicomplex::from_components(0, 0, 1, 0); }
inline Bicomplex unit_k() { return Bicomplex::from_components(0, 0, 0, 1); }

/// The idempotents e1 = (1+k)/2 and e2 = (1-k)/2: e1 e2 = 0, e1 + e2 = 1,
/// e1 - e2 = k. Both are zero divisors.
inline Bicomplex e1() { return Bicomplex::from_components(0.5, 0, 0, 0.5); }
inline Bicomplex e2() { return Bicomplex::from_components(0.5, 0, 0, -0.5); }

/// Bar conjugation: conjugates the C(i) components, Z = z1 + j z2 -> z̄1 + j z̄2.
/// In idempotent coordinates (l1, l2) -> (conj l2, conj l1).
inline Bicomplex conj_bar(const Bicomplex& z) {
    return Bicomplex(std::conj(z.z1()), std::conj(z.z2()));
}

/// Dagger conjugation: flips the sign of the j-part, (l1, l2) -> (l2, l1).
inline Bicomplex conj_dagger(const Bicomplex& z) {
    return Bicomplex(z.z1(), -z.z2());
}

/// Star conjugation, the composite bar∘dagger: (l1, l2) -> (conj l1, conj l2).
inline Bicomplex conj_star(const Bicomplex& z) {
    return Bicomplex(std::conj(z.z1()), -std::conj(z.z2()));
}

inline double norm_sq(const Bicomplex& z) {
    return std::norm(z.z1()) + std::norm(z.z2());
}

/// Euclidean norm sqrt(x1^2 + x2^2 + x3^2 + x4^2); in idempotent coordinates
/// this equals sqrt((|l1|^2 + |l2|^2)/2).
inline double norm(const Bicomplex& z) { return std::sqrt(norm_sq(z)); }

inline HyperbolicNorm norm_hyperbolic(const Bicomplex& z) {
    const IdempotentPair p = z.idempotent();
    return {std::abs(p.l1), std::abs(p.l2)};
}

/// |Z|_F^4 = Z Z̄ Z* Z†, a real number equal to |l1|^2 |l2|^2. Vanishes
/// exactly on the zero-divisor cone.
inline double finsler_pow4(const Bicomplex& z) {
    const IdempotentPair p = z.idempotent();
    return std::norm(p.l1) * std::norm(p.l2);
}

/// Componentwise reciprocal in the idempotent basis. Throws
/// zero_divisor_error when min(|l1|, |l2|) <= 1e-13 * max(1, ||Z||).
inline Bicomplex inverse(const Bicomplex& z) {
    const IdempotentPair p = z.idempotent();
    const double m1 = std::abs(p.l1);
    const double m2 = std::abs(p.l2);
    if (std::min(m1, m2) <= 1e-13 * std::max(1.0, norm(z)))
        throw zero_divisor_error("bicomplex: zero divisor has no inverse");
    return Bicomplex::from_idempotent(1.0 / p.l1, 1.0 / p.l2);
}

inline std::ostream& operator<<(std::ostream& os, const Bicomplex& z) {
    return os << '(' << z.x1() << ", " << z.x2() << ", " << z.x3() << ", " << z.x4() << ')';
}

}  // namespace bilms
