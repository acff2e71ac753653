#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bilms/bicomplex.hpp"
#include "bilms/lms.hpp"
#include "bilms/random.hpp"
#include "bilms/vector.hpp"

namespace bilms {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class InputDist { gaussian };

/// One system-identification experiment: estimate a target tap vector from
/// a seeded Gaussian input stream.
///
/// Data model (all draws through SeededRng, in this order):
///   1. when target is unset ("random"): the target taps, one bicomplex
///      value per tap with coordinates N(0, 1/4), or complex values with
///      coordinates N(0, 1/2) for clms, so every tap has unit expected
///      power;
///   2. per step: the input taps in the same coordinate order; then, only
///      when noise_std > 0, one noise value with E||v||^2 = noise_std^2.
struct ExperimentConfig {
    Algorithm algorithm = Algorithm::blms1;
    int taps = 4;
    double mu = 0.05;
    int steps = 2000;
    std::uint64_t seed = 42;
    double noise_std = 0.0;
    std::optional<BicomplexVector> target;  // unset = random
    InputDist input = InputDist::gaussian;

    void validate() const {
        if (taps < 1) throw config_error("taps must be ≥ 1");
        if (steps < 1) throw config_error("steps must be ≥ 1");
        if (!(mu > 0.0)) throw config_error("mu must be positive");
        if (!(noise_std >= 0.0)) throw config_error("noise_std must be nonnegative");
        if (target && target->size() != static_cast<std::size_t>(taps))
            throw config_error("target length must equal taps");
    }
};

struct CurveRow {
    std::int64_t step = 0;
    double sq_error = 0.0;
    double weight_err_sq = 0.0;
};

struct LearningCurve {
    std::vector<CurveRow> rows;
    bool diverged = false;
};

struct SweepRow {
    double mu = 0.0;
    double final_sq_error = 0.0;
    double final_weight_err_sq = 0.0;
    bool diverged = false;
};

/// A run is cut short with an `inf,inf` marker row once the squared error
/// exceeds this (or stops being finite).
inline constexpr double divergence_limit = 1e12;

// Unit expected power per tap: four coordinates at variance 1/4, or two at
// variance 1/2 on the complex plane.
inline constexpr double bicomplex_coord_sigma = 0.5;
inline const double complex_coord_sigma = std::sqrt(0.5);

inline BicomplexVector gen_input(SeededRng& rng, int taps) {
    BicomplexVector x(static_cast<std::size_t>(taps));
    for (Bicomplex& v : x) v = rng.normal_bicomplex(bicomplex_coord_sigma);
    return x;
}

inline std::vector<BicomplexVector> gen_input(SeededRng& rng, int taps, int steps) {
    std::vector<BicomplexVector> stream;
    stream.reserve(static_cast<std::size_t>(steps));
    for (int l = 0; l < steps; ++l) stream.push_back(gen_input(rng, taps));
    return stream;
}

inline ComplexVector gen_input_complex(SeededRng& rng, int taps) {
    ComplexVector x(static_cast<std::size_t>(taps));
    for (Complex& v : x) v = rng.normal_complex(complex_coord_sigma);
    return x;
}

/// D = X^T W_opt + v. The noise draw is skipped entirely when
/// noise_std == 0, so the noiseless stream does not depend on it.
inline Bicomplex synth_desired(const BicomplexVector& w_opt, const BicomplexVector& x, SeededRng& rng,
                               double noise_std) {
    require_same_size(w_opt.size(), x.size(), "synth_desired");
    Bicomplex d = dot(x, w_opt);
    if (noise_std > 0.0) d += rng.normal_bicomplex(noise_std / 2.0);
    return d;
}

inline Complex synth_desired_complex(const ComplexVector& w_opt, const ComplexVector& x, SeededRng& rng,
                                     double noise_std) {
    require_same_size(w_opt.size(), x.size(), "synth_desired");
    Complex d = dot(x, w_opt);
    if (noise_std > 0.0) d += rng.normal_complex(noise_std * complex_coord_sigma);
    return d;
}

namespace detail {

inline ComplexVector z1_parts(const BicomplexVector& v) {
    ComplexVector r(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) r[k] = v[k].z1();
    return r;
}

/// Runs any of the bicomplex algorithm forms over a bicomplex data stream,
/// converting to the split representations per step and recombining on
/// demand.
class BicomplexStepper {
public:
    BicomplexStepper(Algorithm algo, std::size_t taps, double mu, const BicomplexVector& w0)
        : algo_(algo) {
        switch (algo) {
            case Algorithm::blms1:
            case Algorithm::blms2:
                bc_ = {w0, mu, 0};
                break;
            case Algorithm::blms1_split:
            case Algorithm::blms2_split:
                ch1_ = ComplexFilterState::zeros(taps, mu);
                ch2_ = ComplexFilterState::zeros(taps, mu);
                for (std::size_t k = 0; k < taps; ++k) {
                    const IdempotentPair p = w0[k].idempotent();
                    ch1_.w[k] = p.l1;
                    ch2_.w[k] = p.l2;
                }
                break;
            case Algorithm::blms1_cart:
            case Algorithm::blms2_cart:
                cart_ = CartesianFilterState::zeros(taps, mu);
                for (std::size_t k = 0; k < taps; ++k) {
                    cart_.w1[k] = w0[k].z1();
                    cart_.w2[k] = w0[k].z2();
                }
                break;
            case Algorithm::clms:
                throw std::invalid_argument("BicomplexStepper: clms runs on complex data");
        }
    }

    StepRecord step(const BicomplexVector& x, const Bicomplex& d) {
        switch (algo_) {
            case Algorithm::blms1: return blms1_step(bc_, x, d);
            case Algorithm::blms2: return blms2_step(bc_, x, d);
            case Algorithm::blms1_split:
            case Algorithm::blms2_split: {
                ComplexVector x1(x.size()), x2(x.size());
                for (std::size_t k = 0; k < x.size(); ++k) {
                    const IdempotentPair p = x[k].idempotent();
                    x1[k] = p.l1;
                    x2[k] = p.l2;
                }
                const IdempotentPair dp = d.idempotent();
                const auto recs = algo_ == Algorithm::blms1_split
                                      ? blms1_split_step(ch1_, ch2_, x1, x2, dp.l1, dp.l2)
                                      : blms2_split_step(ch1_, ch2_, x1, x2, dp.l1, dp.l2);
                const Bicomplex y = Bicomplex::from_idempotent(recs.first.output, recs.second.output);
                const Bicomplex e = Bicomplex::from_idempotent(recs.first.error, recs.second.error);
                return {y, e, norm_sq(e)};
            }
            case Algorithm::blms1_cart:
            case Algorithm::blms2_cart: {
                ComplexVector x1(x.size()), x2(x.size());
                for (std::size_t k = 0; k < x.size(); ++k) {
                    x1[k] = x[k].z1();
                    x2[k] = x[k].z2();
                }
                return blms_cartesian_step(algo_, cart_, x1, x2, d.z1(), d.z2());
            }
            default: throw std::invalid_argument("BicomplexStepper: bad algorithm");
        }
    }

    BicomplexVector weights() const {
        switch (algo_) {
            case Algorithm::blms1:
            case Algorithm::blms2: return bc_.w;
            case Algorithm::blms1_split:
            case Algorithm::blms2_split: {
                BicomplexVector w(ch1_.w.size());
                for (std::size_t k = 0; k < w.size(); ++k)
                    w[k] = Bicomplex::from_idempotent(ch1_.w[k], ch2_.w[k]);
                return w;
            }
            default: {
                BicomplexVector w(cart_.w1.size());
                for (std::size_t k = 0; k < w.size(); ++k) w[k] = Bicomplex(cart_.w1[k], cart_.w2[k]);
                return w;
            }
        }
    }

private:
    Algorithm algo_;
    FilterState bc_;
    ComplexFilterState ch1_, ch2_;
    CartesianFilterState cart_;
};

inline bool guard_tripped(double sq_error, double weight_err_sq) {
    return !std::isfinite(sq_error) || !std::isfinite(weight_err_sq) || sq_error > divergence_limit;
}

}  // namespace detail

/// Runs the configured algorithm for cfg.steps steps. Row l records the
/// squared error of the prediction made with the weights held at time l
/// and the squared weight error of those same weights. Identical configs
/// produce identical curves.
inline LearningCurve run_experiment(const ExperimentConfig& cfg,
                                    const std::optional<BicomplexVector>& initial_weights = {}) {
    cfg.validate();
    if (initial_weights && initial_weights->size() != static_cast<std::size_t>(cfg.taps))
        throw config_error("initial weights length must equal taps");
    SeededRng rng(cfg.seed);
    LearningCurve curve;
    curve.rows.reserve(static_cast<std::size_t>(cfg.steps));
    const std::size_t taps = static_cast<std::size_t>(cfg.taps);

    if (cfg.algorithm == Algorithm::clms) {
        ComplexVector w_opt(taps);
        if (cfg.target) {
            w_opt = detail::z1_parts(*cfg.target);
        } else {
            for (Complex& v : w_opt) v = rng.normal_complex(complex_coord_sigma);
        }
        ComplexFilterState st = ComplexFilterState::zeros(taps, cfg.mu);
        if (initial_weights) st.w = detail::z1_parts(*initial_weights);
        for (int l = 0; l < cfg.steps; ++l) {
            const ComplexVector x = gen_input_complex(rng, cfg.taps);
            const Complex d = synth_desired_complex(w_opt, x, rng, cfg.noise_std);
            double werr = 0.0;
            for (std::size_t k = 0; k < taps; ++k) werr += std::norm(st.w[k] - w_opt[k]);
            const ComplexStepRecord rec = clms_step(st, x, d);
            if (detail::guard_tripped(rec.sq_error, werr)) {
                curve.rows.push_back({l, INFINITY, INFINITY});
                curve.diverged = true;
                break;
            }
            curve.rows.push_back({l, rec.sq_error, werr});
        }
        return curve;
    }

    BicomplexVector w_opt(taps);
    if (cfg.target) {
        w_opt = *cfg.target;
    } else {
        for (Bicomplex& v : w_opt) v = rng.normal_bicomplex(bicomplex_coord_sigma);
    }
    detail::BicomplexStepper stepper(cfg.algorithm, taps, cfg.mu,
                                     initial_weights ? *initial_weights : BicomplexVector(taps));
    for (int l = 0; l < cfg.steps; ++l) {
        const BicomplexVector x = gen_input(rng, cfg.taps);
        const Bicomplex d = synth_desired(w_opt, x, rng, cfg.noise_std);
        const double werr = norm_sq(stepper.weights() - w_opt);
        StepRecord rec;
        try {
            rec = stepper.step(x, d);
        } catch (const std::domain_error&) {
            // overflow inside a wildly diverged update
            curve.rows.push_back({l, INFINITY, INFINITY});
            curve.diverged = true;
            break;
        }
        if (detail::guard_tripped(rec.sq_error, werr)) {
            curve.rows.push_back({l, INFINITY, INFINITY});
            curve.diverged = true;
            break;
        }
        curve.rows.push_back({l, rec.sq_error, werr});
    }
    return curve;
}

/// Runs two algorithm forms over one shared seeded stream and returns the
/// largest Euclidean distance between their weight vectors, both mapped to
/// the bicomplex representation after every step.
///
/// When either side is clms the stream is drawn inside the C(i) plane
/// (x3 = x4 = 0, live coordinates at variance 1/2) and the clms filter
/// consumes the z1 projections at step size 2*cfg.mu, the embedding under
/// which the first BLMS rule restricts to the classical complex LMS.
inline double compare_trajectories(const ExperimentConfig& cfg, Algorithm a, Algorithm b) {
    cfg.validate();
    const bool embedded = a == Algorithm::clms || b == Algorithm::clms;
    const std::size_t taps = static_cast<std::size_t>(cfg.taps);
    SeededRng rng(cfg.seed);

    BicomplexVector w_opt(taps);
    if (cfg.target) {
        for (std::size_t k = 0; k < taps; ++k)
            w_opt[k] = embedded ? Bicomplex((*cfg.target)[k].z1()) : (*cfg.target)[k];
    } else {
        for (Bicomplex& v : w_opt)
            v = embedded ? Bicomplex(rng.normal_complex(complex_coord_sigma))
                         : rng.normal_bicomplex(bicomplex_coord_sigma);
    }

    std::vector<std::pair<BicomplexVector, Bicomplex>> stream;
    stream.reserve(static_cast<std::size_t>(cfg.steps));
    for (int l = 0; l < cfg.steps; ++l) {
        BicomplexVector x(taps);
        for (Bicomplex& v : x)
            v = embedded ? Bicomplex(rng.normal_complex(complex_coord_sigma))
                         : rng.normal_bicomplex(bicomplex_coord_sigma);
        Bicomplex d = dot(x, w_opt);
        if (cfg.noise_std > 0.0)
            d += embedded ? Bicomplex(rng.normal_complex(cfg.noise_std * complex_coord_sigma))
                          : rng.normal_bicomplex(cfg.noise_std / 2.0);
        stream.emplace_back(std::move(x), d);
    }

    auto run = [&](Algorithm algo) {
        std::vector<BicomplexVector> traj;
        traj.reserve(stream.size());
        if (algo == Algorithm::clms) {
            ComplexFilterState st = ComplexFilterState::zeros(taps, 2.0 * cfg.mu);
            for (const auto& [x, d] : stream) {
                clms_step(st, detail::z1_parts(x), d.z1());
                BicomplexVector w(taps);
                for (std::size_t k = 0; k < taps; ++k) w[k] = Bicomplex(st.w[k]);
                traj.push_back(std::move(w));
            }
        } else {
            detail::BicomplexStepper stepper(algo, taps, cfg.mu, BicomplexVector(taps));
            for (const auto& [x, d] : stream) {
                stepper.step(x, d);
                traj.push_back(stepper.weights());
            }
        }
        return traj;
    };

    const auto ta = run(a);
    const auto tb = run(b);
    double worst = 0.0;
    for (std::size_t l = 0; l < ta.size(); ++l)
        worst = std::max(worst, std::sqrt(norm_sq(ta[l] - tb[l])));
    return worst;
}

/// One run_experiment per step size, all from cfg.seed; a diverged run
/// contributes its marker row.
inline std::vector<SweepRow> mu_sweep(const ExperimentConfig& cfg, const std::vector<double>& mu_values) {
    if (mu_values.empty()) throw config_error("mu grid must not be empty");
    std::vector<SweepRow> rows;
    rows.reserve(mu_values.size());
    for (double mu : mu_values) {
        if (!(mu > 0.0)) throw config_error("mu must be positive");
        ExperimentConfig c = cfg;
        c.mu = mu;
        const LearningCurve curve = run_experiment(c);
        const CurveRow& last = curve.rows.back();
        rows.push_back({mu, last.sq_error, last.weight_err_sq, curve.diverged});
    }
    return rows;
}

}  // namespace bilms
