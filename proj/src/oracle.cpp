#include "tfzero/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tfzero/quadrature.hpp"

namespace tfzero {

double DecayModel::envelope(double s) const {
    if (s <= 0.0) return scale;
    switch (kind) {
        case Kind::Compact: return 0.0;
        case Kind::Exponential: return scale * std::exp(-rate * s);
        case Kind::SuperExponential: return scale * std::exp(-rate * s * s);
        case Kind::Algebraic: return scale * std::min(1.0, std::pow(s, -rate));
        case Kind::Bounded: return scale;
    }
    return scale;
}

namespace {

using DK = DecayModel::Kind;

DecayModel combine_decay_for_sum(const DecayModel& a, const DecayModel& b) {
    // Weakest kind wins; scales add.
    auto strength = [](DK k) {
        switch (k) {
            case DK::SuperExponential: return 3;
            case DK::Compact: return 4;
            case DK::Exponential: return 2;
            case DK::Algebraic: return 1;
            case DK::Bounded: return 0;
        }
        return 0;
    };
    DecayModel out = (strength(a.kind) <= strength(b.kind)) ? a : b;
    if (a.kind == out.kind && b.kind == out.kind) out.rate = std::min(a.rate, b.rate);
    out.scale = a.scale + b.scale;
    if (out.kind == DK::Compact) out = DecayModel::compact();
    return out;
}

std::vector<double> merged_breakpoints(const SampledFunction& f, const SampledFunction& g) {
    std::vector<double> bp = f.breakpoints;
    bp.insert(bp.end(), g.breakpoints.begin(), g.breakpoints.end());
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    return bp;
}

}  // namespace

SampledFunction sampled_sum(const SampledFunction& f, const SampledFunction& g) {
    SampledFunction out;
    auto fe = f.eval, ge = g.eval;
    out.eval = [fe, ge](double t) { return fe(t) + ge(t); };
    out.lo = std::min(f.lo, g.lo);
    out.hi = std::max(f.hi, g.hi);
    out.decay = combine_decay_for_sum(f.decay, g.decay);
    out.breakpoints = merged_breakpoints(f, g);
    out.osc = std::max(f.osc, g.osc);
    return out;
}

SampledFunction sampled_difference(const SampledFunction& f, const SampledFunction& g) {
    return sampled_sum(f, sampled_scaled(g, cplx(-1.0, 0.0)));
}

SampledFunction sampled_scaled(const SampledFunction& f, cplx factor) {
    SampledFunction out = f;
    auto fe = f.eval;
    out.eval = [fe, factor](double t) { return factor * fe(t); };
    out.decay.scale *= std::abs(factor);
    return out;
}

SampledFunction sampled_reflected(const SampledFunction& f) {
    SampledFunction out;
    auto fe = f.eval;
    out.eval = [fe](double t) { return fe(-t); };
    out.lo = -f.hi;
    out.hi = -f.lo;
    out.decay = f.decay;
    out.breakpoints.reserve(f.breakpoints.size());
    for (auto it = f.breakpoints.rbegin(); it != f.breakpoints.rend(); ++it)
        out.breakpoints.push_back(-*it);
    out.osc = f.osc;
    return out;
}

SampledFunction sampled_phase_space_shift(const SampledFunction& f, PhaseSpacePoint w) {
    SampledFunction out;
    auto fe = f.eval;
    const double a = w.x, b = w.xi;
    out.eval = [fe, a, b](double t) {
        return std::polar(1.0, kTwoPi * b * t) * fe(t - a);
    };
    out.lo = f.lo + a;
    out.hi = f.hi + a;
    out.decay = f.decay;
    out.breakpoints.reserve(f.breakpoints.size());
    for (double t : f.breakpoints) out.breakpoints.push_back(t + a);
    out.osc = f.osc + std::abs(b);
    return out;
}

namespace {

// One factor of a product integrand, already expressed in the integration
// variable: value(t), support interval, envelope outside it, breakpoints.
struct Factor {
    std::function<cplx(double)> eval;
    double lo, hi;
    DecayModel decay;
    std::vector<double> breakpoints;
    double osc;
};

Factor identity_factor(const SampledFunction& f) {
    return {f.eval, f.lo, f.hi, f.decay, f.breakpoints, f.osc};
}

// t -> f(t + s)
Factor shifted_factor(const SampledFunction& f, double s) {
    auto fe = f.eval;
    Factor out;
    out.eval = [fe, s](double t) { return fe(t + s); };
    out.lo = f.lo - s;
    out.hi = f.hi - s;
    out.decay = f.decay;
    for (double b : f.breakpoints) out.breakpoints.push_back(b - s);
    out.osc = f.osc;
    return out;
}

// t -> f(x + t/2): support 2(supp - x); exponential rate halves,
// super-exponential rate quarters, algebraic scale picks up 2^p.
Factor half_arg_factor(const SampledFunction& f, double x, bool negate_t) {
    auto fe = f.eval;
    Factor out;
    if (!negate_t) {
        out.eval = [fe, x](double t) { return fe(x + 0.5 * t); };
        out.lo = 2.0 * (f.lo - x);
        out.hi = 2.0 * (f.hi - x);
        for (double b : f.breakpoints) out.breakpoints.push_back(2.0 * (b - x));
    } else {
        out.eval = [fe, x](double t) { return fe(x - 0.5 * t); };
        out.lo = 2.0 * (x - f.hi);
        out.hi = 2.0 * (x - f.lo);
        for (double b : f.breakpoints) out.breakpoints.push_back(2.0 * (x - b));
        std::reverse(out.breakpoints.begin(), out.breakpoints.end());
    }
    out.decay = f.decay;
    switch (out.decay.kind) {
        case DK::Exponential: out.decay.rate *= 0.5; break;
        case DK::SuperExponential: out.decay.rate *= 0.25; break;
        case DK::Algebraic: out.decay.scale *= std::pow(2.0, out.decay.rate); break;
        default: break;
    }
    out.osc = 0.5 * f.osc;
    return out;
}

Factor conjugated(Factor f) {
    auto fe = f.eval;
    f.eval = [fe](double t) { return std::conj(fe(t)); };
    return f;
}

// Effective tail length multiplier for the union envelope of two factors.
double tail_length(const Factor& a, const Factor& b, double xi, double L) {
    double len = std::numeric_limits<double>::infinity();
    double exp_rate = 0.0;
    double super_rate = 0.0;
    double alg_power = 0.0;
    for (const Factor* f : {&a, &b}) {
        switch (f->decay.kind) {
            case DK::Exponential: exp_rate += f->decay.rate; break;
            case DK::SuperExponential: super_rate += f->decay.rate; break;
            case DK::Algebraic: alg_power += f->decay.rate; break;
            default: break;
        }
    }
    if (exp_rate > 0.0) len = std::min(len, 1.0 / exp_rate);
    if (super_rate > 0.0) len = std::min(len, 1.0 / (2.0 * super_rate * (L + 0.1)));
    if (!std::isfinite(len)) {
        // Purely algebraic (possibly times bounded): integrate the power tail,
        // with the oscillatory integration-by-parts gain when |xi| L >= 1.
        if (alg_power > 1.0) len = L / (alg_power - 1.0);
        if (std::abs(xi) * L >= 1.0)
            len = std::min(len, (1.0 + alg_power) / (kPi * std::abs(xi)));
    }
    return len;
}

// Window extension beyond the union of supports so the product tail
// integrates below tol_tail.
double window_extension(const Factor& a, const Factor& b, double xi, double tol_tail) {
    double L = 0.25;
    for (int i = 0; i < 200; ++i) {
        const double env = a.decay.envelope(L) * b.decay.envelope(L);
        const double len = tail_length(a, b, xi, L);
        if (std::isfinite(len) && env * len < tol_tail) return L;
        L *= 1.5;
        if (L > 1e9)
            throw OracleError("oracle: truncation budget cannot be met (decay too weak)");
    }
    throw OracleError("oracle: truncation budget cannot be met");
}

cplx pair_integral(const Factor& a, const Factor& b, double xi, double tol,
                   int min_depth) {
    // Window: compact supports are exact; otherwise extend the union.
    double lo, hi;
    const bool a_compact = a.decay.kind == DK::Compact;
    const bool b_compact = b.decay.kind == DK::Compact;
    if (a_compact || b_compact) {
        lo = a_compact ? a.lo : b.lo;
        hi = a_compact ? a.hi : b.hi;
        if (a_compact && b_compact) {
            lo = std::max(a.lo, b.lo);
            hi = std::min(a.hi, b.hi);
        }
        if (!(lo < hi)) return cplx(0.0, 0.0);
    } else {
        if (a.decay.kind == DK::Bounded && b.decay.kind == DK::Bounded)
            throw OracleError("oracle: neither factor decays; truncation impossible");
        const double L = window_extension(a, b, xi, 0.5 * tol);
        lo = std::min(a.lo, b.lo) - L;
        hi = std::max(a.hi, b.hi) + L;
    }

    auto ae = a.eval, be = b.eval;
    quad::Integrand integrand;
    if (xi == 0.0) {
        integrand = [ae, be](double t) { return ae(t) * be(t); };
    } else {
        integrand = [ae, be, xi](double t) {
            return ae(t) * be(t) * std::polar(1.0, -kTwoPi * xi * t);
        };
    }

    std::vector<double> bps = a.breakpoints;
    bps.insert(bps.end(), b.breakpoints.begin(), b.breakpoints.end());

    quad::Options opt;
    opt.abs_tol = 0.5 * tol;
    opt.osc_freq = std::abs(xi) + a.osc + b.osc;
    opt.min_depth = min_depth;
    const auto edges = quad::make_edges(lo, hi, bps, opt.osc_freq);
    return quad::integrate(integrand, edges, opt).value;
}

}  // namespace

cplx oracle_ambiguity(const SampledFunction& f, const SampledFunction& g,
                      PhaseSpacePoint z, const OracleOptions& opt) {
    if (!(opt.tol > 0.0)) throw DomainError("oracle_ambiguity: tol must be > 0");
    Factor a = shifted_factor(f, z.x * 0.5);
    Factor b = conjugated(shifted_factor(g, -z.x * 0.5));
    return pair_integral(a, b, z.xi, opt.tol, opt.min_depth);
}

cplx oracle_wigner(const SampledFunction& f, const SampledFunction& g,
                   PhaseSpacePoint z, const OracleOptions& opt) {
    if (!(opt.tol > 0.0)) throw DomainError("oracle_wigner: tol must be > 0");
    Factor a = half_arg_factor(f, z.x, false);
    Factor b = conjugated(half_arg_factor(g, z.x, true));
    return pair_integral(a, b, z.xi, opt.tol, opt.min_depth);
}

cplx oracle_stft(const SampledFunction& f, const SampledFunction& g,
                 PhaseSpacePoint z, const OracleOptions& opt) {
    if (!(opt.tol > 0.0)) throw DomainError("oracle_stft: tol must be > 0");
    Factor a = identity_factor(f);
    Factor b = conjugated(shifted_factor(g, -z.x));
    return pair_integral(a, b, z.xi, opt.tol, opt.min_depth);
}

cplx oracle_ambiguity(const SampledFunction& f, const SampledFunction& g,
                      PhaseSpacePoint z, double tol) {
    return oracle_ambiguity(f, g, z, OracleOptions{tol, 0});
}
cplx oracle_wigner(const SampledFunction& f, const SampledFunction& g,
                   PhaseSpacePoint z, double tol) {
    return oracle_wigner(f, g, z, OracleOptions{tol, 0});
}
cplx oracle_stft(const SampledFunction& f, const SampledFunction& g,
                 PhaseSpacePoint z, double tol) {
    return oracle_stft(f, g, z, OracleOptions{tol, 0});
}

cplx oracle_bargmann(const SampledFunction& f, cplx z, double tol) {
    if (!(tol > 0.0)) throw DomainError("oracle_bargmann: tol must be > 0");
    // Kernel factor e^{-pi t^2 + 2 pi t z}; its modulus is the Gaussian
    // e^{pi (Re z)^2} e^{-pi (t - Re z)^2}, centered at Re z.
    Factor k;
    const double re = z.real();
    k.eval = [z](double t) { return std::exp(cplx(-kPi * t * t, 0.0) + kTwoPi * t * z); };
    k.lo = re;
    k.hi = re;
    k.decay = DecayModel::super_exponential(std::exp(kPi * re * re), kPi);
    k.osc = std::abs(z.imag());
    Factor a = identity_factor(f);
    const cplx prefactor = std::pow(2.0, 0.25) * std::exp(-kPi * z * z * 0.5);
    // The prefactor can be large off-axis; tighten the integral tolerance so
    // the product still meets tol.
    const double inner_tol = tol / std::max(1.0, std::abs(prefactor));
    return prefactor * pair_integral(a, k, 0.0, inner_tol, 0);
}

cplx oracle_fourier(const SampledFunction& f, double xi, double tol) {
    if (!(tol > 0.0)) throw DomainError("oracle_fourier: tol must be > 0");
    Factor a = identity_factor(f);
    Factor one;
    one.eval = [](double) { return cplx(1.0, 0.0); };
    one.lo = f.lo;
    one.hi = f.hi;
    one.decay = DecayModel::bounded(1.0);
    one.osc = 0.0;
    return pair_integral(a, one, xi, tol, 0);
}

}  // namespace tfzero
