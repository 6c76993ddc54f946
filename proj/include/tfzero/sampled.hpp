// Runtime-evaluable functions on the line, with the metadata the quadrature
// oracle needs to budget truncation honestly: a support hint, a decay
// envelope valid outside it, intrinsic oscillation, and breakpoints.
#pragma once

#include <functional>
#include <vector>

#include "tfzero/core.hpp"

namespace tfzero {

struct DecayModel {
    enum class Kind {
        Compact,           // identically zero outside the support hint
        Exponential,       // |f| <= C e^{-rate * dist}
        SuperExponential,  // |f| <= C e^{-rate * dist^2}
        Algebraic,         // |f| <= C / dist^rate   (rate = power p)
        Bounded,           // |f| <= C, no decay claim
    };
    Kind kind = Kind::Bounded;
    double scale = 1.0;  // C
    double rate = 1.0;

    static DecayModel compact() { return {Kind::Compact, 1.0, 0.0}; }
    static DecayModel exponential(double c, double r) { return {Kind::Exponential, c, r}; }
    static DecayModel super_exponential(double c, double r) {
        return {Kind::SuperExponential, c, r};
    }
    static DecayModel algebraic(double c, double p) { return {Kind::Algebraic, c, p}; }
    static DecayModel bounded(double c) { return {Kind::Bounded, c, 0.0}; }

    // Envelope value at distance s >= 0 from the support hint.
    double envelope(double s) const;
};

struct SampledFunction {
    std::function<cplx(double)> eval;
    double lo = 0.0, hi = 0.0;          // support hint [T-, T+]
    DecayModel decay;
    std::vector<double> breakpoints;    // jumps and kinks of |.|-type factors
    double osc = 0.0;                   // intrinsic oscillation (cycles/unit)

    cplx operator()(double t) const { return eval(t); }
};

// Pointwise combinators used by the relation checks.
SampledFunction sampled_sum(const SampledFunction& f, const SampledFunction& g);
SampledFunction sampled_difference(const SampledFunction& f, const SampledFunction& g);
SampledFunction sampled_scaled(const SampledFunction& f, cplx factor);
SampledFunction sampled_reflected(const SampledFunction& f);             // t -> f(-t)
// Phase-space shift pi(w) f(t) = e^{2 pi i b t} f(t - a), w = (a, b).
SampledFunction sampled_phase_space_shift(const SampledFunction& f, PhaseSpacePoint w);

}  // namespace tfzero
