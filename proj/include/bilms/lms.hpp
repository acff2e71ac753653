#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "bilms/bicomplex.hpp"
#include "bilms/vector.hpp"

namespace bilms {

enum class Algorithm {
    clms,
    blms1,
    blms2,
    blms1_split,
    blms2_split,
    blms1_cart,
    blms2_cart,
};

inline const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::clms: return "clms";
        case Algorithm::blms1: return "blms1";
        case Algorithm::blms2: return "blms2";
        case Algorithm::blms1_split: return "blms1_split";
        case Algorithm::blms2_split: return "blms2_split";
        case Algorithm::blms1_cart: return "blms1_cart";
        case Algorithm::blms2_cart: return "blms2_cart";
    }
    return "?";
}

inline bool parse_algorithm(const std::string& s, Algorithm& out) {
    for (Algorithm a : {Algorithm::clms, Algorithm::blms1, Algorithm::blms2, Algorithm::blms1_split,
                        Algorithm::blms2_split, Algorithm::blms1_cart, Algorithm::blms2_cart}) {
        if (s == to_string(a)) {
            out = a;
            return true;
        }
    }
    return false;
}

/// Weights, step size and time index of one bicomplex adaptive filter.
/// Single-owner value: step functions mutate it in place and return the
/// per-step record.
struct FilterState {
    BicomplexVector w;
    double mu = 0.05;
    std::uint64_t step = 0;

    static FilterState zeros(std::size_t taps, double mu) { return {BicomplexVector(taps), mu, 0}; }
};

struct ComplexFilterState {
    ComplexVector w;
    double mu = 0.05;
    std::uint64_t step = 0;

    static ComplexFilterState zeros(std::size_t taps, double mu) { return {ComplexVector(taps), mu, 0}; }
};

/// Cartesian split W = W1 + W2 j of a bicomplex filter.
struct CartesianFilterState {
    ComplexVector w1;
    ComplexVector w2;
    double mu = 0.05;
    std::uint64_t step = 0;

    static CartesianFilterState zeros(std::size_t taps, double mu) {
        return {ComplexVector(taps), ComplexVector(taps), mu, 0};
    }
};

struct StepRecord {
    Bicomplex output;  // Y = X^T W before the update
    Bicomplex error;   // E = D - Y
    double sq_error = 0.0;
};

struct ComplexStepRecord {
    Complex output;
    Complex error;
    double sq_error = 0.0;
};

inline Bicomplex predict(const FilterState& s, const BicomplexVector& x) { return dot(x, s.w); }

inline Complex predict(const ComplexFilterState& s, const ComplexVector& x) { return dot(x, s.w); }

namespace detail {

inline void require_positive_mu(double mu) {
    if (!(mu > 0.0)) throw std::invalid_argument("filter step: mu must be positive");
}

}  // namespace detail

/// Classical complex LMS: w <- w + mu e conj(x).
inline ComplexStepRecord clms_step(ComplexFilterState& s, const ComplexVector& x, const Complex& d) {
    require_same_size(x.size(), s.w.size(), "clms_step");
    detail::require_positive_mu(s.mu);
    const Complex y = dot(x, s.w);
    const Complex e = d - y;
    for (std::size_t k = 0; k < x.size(); ++k) s.w[k] += s.mu * e * std::conj(x[k]);
    ++s.step;
    return {y, e, std::norm(e)};
}

/// First bicomplex LMS: W <- W + 2 mu E X*.
inline StepRecord blms1_step(FilterState& s, const BicomplexVector& x, const Bicomplex& d) {
    require_same_size(x.size(), s.w.size(), "blms1_step");
    detail::require_positive_mu(s.mu);
    const Bicomplex y = dot(x, s.w);
    const Bicomplex e = d - y;
    const Bicomplex gain = (2.0 * s.mu) * e;
    for (std::size_t k = 0; k < x.size(); ++k) s.w[k] += gain * conj_star(x[k]);
    ++s.step;
    return {y, e, norm_sq(e)};
}

/// Second bicomplex LMS: W <- W + 2 mu E X̄. The bar conjugate swaps the
/// idempotent channels, so the regressor is cross-coupled.
inline StepRecord blms2_step(FilterState& s, const BicomplexVector& x, const Bicomplex& d) {
    require_same_size(x.size(), s.w.size(), "blms2_step");
    detail::require_positive_mu(s.mu);
    const Bicomplex y = dot(x, s.w);
    const Bicomplex e = d - y;
    const Bicomplex gain = (2.0 * s.mu) * e;
    for (std::size_t k = 0; k < x.size(); ++k) s.w[k] += gain * conj_bar(x[k]);
    ++s.step;
    return {y, e, norm_sq(e)};
}

namespace detail {

inline void require_split_pair(const ComplexFilterState& c1, const ComplexFilterState& c2,
                               std::size_t n1, std::size_t n2) {
    require_same_size(n1, c1.w.size(), "split step, channel 1");
    require_same_size(n2, c2.w.size(), "split step, channel 2");
    require_same_size(n1, n2, "split step");
    if (c1.mu != c2.mu) throw std::invalid_argument("split step: channels must share mu");
    require_positive_mu(c1.mu);
}

}  // namespace detail

/// Idempotent split of the first BLMS: two independent complex LMS updates
/// with effective step 2 mu, channel c on (x_c, d_c).
inline std::pair<ComplexStepRecord, ComplexStepRecord> blms1_split_step(
    ComplexFilterState& ch1, ComplexFilterState& ch2, const ComplexVector& x1, const ComplexVector& x2,
    const Complex& d1, const Complex& d2) {
    detail::require_split_pair(ch1, ch2, x1.size(), x2.size());
    const Complex y1 = dot(x1, ch1.w);
    const Complex y2 = dot(x2, ch2.w);
    const Complex e1 = d1 - y1;
    const Complex e2 = d2 - y2;
    const double a = 2.0 * ch1.mu;
    for (std::size_t k = 0; k < x1.size(); ++k) ch1.w[k] += a * e1 * std::conj(x1[k]);
    for (std::size_t k = 0; k < x2.size(); ++k) ch2.w[k] += a * e2 * std::conj(x2[k]);
    ++ch1.step;
    ++ch2.step;
    return {{y1, e1, std::norm(e1)}, {y2, e2, std::norm(e2)}};
}

/// Idempotent split of the second BLMS: each channel keeps its own error
/// but descends along the other channel's conjugated regressor.
inline std::pair<ComplexStepRecord, ComplexStepRecord> blms2_split_step(
    ComplexFilterState& ch1, ComplexFilterState& ch2, const ComplexVector& x1, const ComplexVector& x2,
    const Complex& d1, const Complex& d2) {
    detail::require_split_pair(ch1, ch2, x1.size(), x2.size());
    const Complex y1 = dot(x1, ch1.w);
    const Complex y2 = dot(x2, ch2.w);
    const Complex e1 = d1 - y1;
    const Complex e2 = d2 - y2;
    const double a = 2.0 * ch1.mu;
    for (std::size_t k = 0; k < x1.size(); ++k) ch1.w[k] += a * e1 * std::conj(x2[k]);
    for (std::size_t k = 0; k < x2.size(); ++k) ch2.w[k] += a * e2 * std::conj(x1[k]);
    ++ch1.step;
    ++ch2.step;
    return {{y1, e1, std::norm(e1)}, {y2, e2, std::norm(e2)}};
}

/// Cartesian split of either BLMS rule. The prediction is the recombined
/// bicomplex one, Y1 + Y2 j = (x1^T w1 - x2^T w2) + (x1^T w2 + x2^T w1) j.
inline StepRecord blms_cartesian_step(Algorithm variant, CartesianFilterState& s, const ComplexVector& x1,
                                      const ComplexVector& x2, const Complex& d1, const Complex& d2) {
    require_same_size(x1.size(), s.w1.size(), "blms_cartesian_step");
    require_same_size(x2.size(), s.w2.size(), "blms_cartesian_step");
    if (variant != Algorithm::blms1_cart && variant != Algorithm::blms2_cart)
        throw std::invalid_argument("blms_cartesian_step: variant must be blms1_cart or blms2_cart");
    detail::require_positive_mu(s.mu);
    const Complex y1 = dot(x1, s.w1) - dot(x2, s.w2);
    const Complex y2 = dot(x1, s.w2) + dot(x2, s.w1);
    const Complex e1 = d1 - y1;
    const Complex e2 = d2 - y2;
    const double a = 2.0 * s.mu;
    const double sign = variant == Algorithm::blms1_cart ? 1.0 : -1.0;
    for (std::size_t k = 0; k < x1.size(); ++k) {
        const Complex c1 = std::conj(x1[k]);
        const Complex c2 = std::conj(x2[k]);
        s.w1[k] += a * (e1 * c1 + sign * e2 * c2);
        s.w2[k] += a * (e2 * c1 - sign * e1 * c2);
    }
    ++s.step;
    const Bicomplex e(e1, e2);
    return {Bicomplex(y1, y2), e, norm_sq(e)};
}

inline double loss(const Bicomplex& e) { return norm_sq(e); }

inline double loss(const BicomplexVector& errors) {
    double acc = 0.0;
    for (const Bicomplex& e : errors) acc += norm_sq(e);
    return acc;
}

}  // namespace bilms
