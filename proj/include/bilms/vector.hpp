#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "bilms/bicomplex.hpp"

namespace bilms {

struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using BicomplexVector = std::vector<Bicomplex>;
using ComplexVector = std::vector<Complex>;

enum class Conj { bar, dagger, star };

inline Bicomplex apply_conj(const Bicomplex& z, Conj mode) {
    switch (mode) {
        case Conj::bar: return conj_bar(z);
        case Conj::dagger: return conj_dagger(z);
        case Conj::star: return conj_star(z);
    }
    throw std::invalid_argument("apply_conj: bad mode");
}

inline void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw dimension_error(std::string(what) + ": length mismatch");
}

/// Unconjugated inner product sum_k x_k w_k (symmetric in its arguments).
inline Bicomplex dot(const BicomplexVector& x, const BicomplexVector& w) {
    require_same_size(x.size(), w.size(), "dot");
    Bicomplex acc;
    for (std::size_t k = 0; k < x.size(); ++k) acc += x[k] * w[k];
    return acc;
}

inline Complex dot(const ComplexVector& x, const ComplexVector& w) {
    require_same_size(x.size(), w.size(), "dot");
    Complex acc;
    for (std::size_t k = 0; k < x.size(); ++k) acc += x[k] * w[k];
    return acc;
}

inline BicomplexVector conj_vec(const BicomplexVector& v, Conj mode) {
    BicomplexVector r;
    r.reserve(v.size());
    for (const Bicomplex& z : v) r.push_back(apply_conj(z, mode));
    return r;
}

inline ComplexVector conj_vec(const ComplexVector& v) {
    ComplexVector r;
    r.reserve(v.size());
    for (const Complex& z : v) r.push_back(std::conj(z));
    return r;
}

/// w + s*v, elementwise.
inline BicomplexVector scale_add(const BicomplexVector& w, const Bicomplex& s, const BicomplexVector& v) {
    require_same_size(w.size(), v.size(), "scale_add");
    BicomplexVector r = w;
    for (std::size_t k = 0; k < v.size(); ++k) r[k] += s * v[k];
    return r;
}

inline ComplexVector scale_add(const ComplexVector& w, const Complex& s, const ComplexVector& v) {
    require_same_size(w.size(), v.size(), "scale_add");
    ComplexVector r = w;
    for (std::size_t k = 0; k < v.size(); ++k) r[k] += s * v[k];
    return r;
}

inline double norm_sq(const BicomplexVector& v) {
    double acc = 0.0;
    for (const Bicomplex& z : v) acc += norm_sq(z);
    return acc;
}

inline double norm_sq(const ComplexVector& v) {
    double acc = 0.0;
    for (const Complex& z : v) acc += std::norm(z);
    return acc;
}

inline BicomplexVector operator-(const BicomplexVector& a, const BicomplexVector& b) {
    require_same_size(a.size(), b.size(), "vector difference");
    BicomplexVector r = a;
    for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
    return r;
}

/// Square n x n matrix over the bicomplex numbers, row-major.
class BicomplexMatrix {
public:
    explicit BicomplexMatrix(std::size_t n) : n_(n), entries_(n * n) {
        if (n == 0) throw dimension_error("BicomplexMatrix: size must be positive");
    }

    static BicomplexMatrix identity(std::size_t n) {
        BicomplexMatrix m(n);
        for (std::size_t r = 0; r < n; ++r) m(r, r) = Bicomplex(1.0);
        return m;
    }

    std::size_t size() const { return n_; }

    Bicomplex& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
    const Bicomplex& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }

private:
    std::size_t n_;
    std::vector<Bicomplex> entries_;
};

inline BicomplexVector matvec(const BicomplexMatrix& m, const BicomplexVector& v) {
    require_same_size(m.size(), v.size(), "matvec");
    BicomplexVector r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        Bicomplex acc;
        for (std::size_t c = 0; c < m.size(); ++c) acc += m(i, c) * v[c];
        r[i] = acc;
    }
    return r;
}

}  // namespace bilms
