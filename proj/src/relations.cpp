#include "tfzero/relations.hpp"

#include <cmath>

#include "tfzero/kernels.hpp"
#include "tfzero/quadrature.hpp"

namespace tfzero {

namespace {

// One conversion step along the cycle of frozen identities.
ConversionResult step_convert(TransformKind from, TransformKind to, cplx v,
                              PhaseSpacePoint z, bool reflected) {
    using TK = TransformKind;
    if (from == to) return {v, z, reflected};
    if (from == TK::Ambiguity && to == TK::STFT) {
        // V_g f(z) = e^{-i pi xi x} A(f,g)(z)
        return {v * std::polar(1.0, -kPi * z.xi * z.x), z, reflected};
    }
    if (from == TK::STFT && to == TK::Ambiguity) {
        return {v * std::polar(1.0, kPi * z.xi * z.x), z, reflected};
    }
    if (from == TK::STFT && to == TK::Wigner) {
        // W(f, Ig)(x/2, xi/2) = e^{i pi x xi} V_g f(x, xi)
        const PhaseSpacePoint half(0.5 * z.x, 0.5 * z.xi);
        return {v * std::polar(1.0, kPi * z.x * z.xi), half, !reflected};
    }
    if (from == TK::Wigner && to == TK::STFT) {
        // V_{Ig} f(2x, 2xi) = e^{-4 pi i x xi} W(f,g)(x, xi)
        const PhaseSpacePoint twice(2.0 * z.x, 2.0 * z.xi);
        return {v * std::polar(1.0, -2.0 * kTwoPi * z.x * z.xi), twice, !reflected};
    }
    if (from == TK::Ambiguity && to == TK::Wigner) {
        // W(f, Ig)(x/2, xi/2) = 2 A(f,g)(x, xi)
        return {2.0 * v, PhaseSpacePoint(0.5 * z.x, 0.5 * z.xi), !reflected};
    }
    if (from == TK::Wigner && to == TK::Ambiguity) {
        // A(f, Ig)(2x, 2xi) = (1/2) W(f,g)(x, xi)
        return {0.5 * v, PhaseSpacePoint(2.0 * z.x, 2.0 * z.xi), !reflected};
    }
    throw DomainError("convert_value: unsupported conversion");
}

}  // namespace

ConversionResult convert_value(TransformKind kind_from, TransformKind kind_to,
                               cplx value, PhaseSpacePoint z) {
    return step_convert(kind_from, kind_to, value, z, false);
}

PhaseSpacePoint fourier_rotation(PhaseSpacePoint z) {
    return PhaseSpacePoint(-z.xi, z.x);
}

double shift_covariance_check(const FunctionSpec& f, const FunctionSpec& g,
                              PhaseSpacePoint w, PhaseSpacePoint w2,
                              const GridSpec& grid, double tol) {
    const SampledFunction sf = materialize(f);
    const SampledFunction sg = materialize(g);
    const SampledFunction sf_shift = sampled_phase_space_shift(sf, w);
    const SampledFunction sg_shift = sampled_phase_space_shift(sg, w2);

    // Phase derived from the defining integral (d = 1):
    //   W(pi(w)f, pi(w')g)(z) = e^{2 pi i [(b-b')x - (a-a') xi] + i pi (a-a')(b+b')}
    //                           * W(f,g)(z - (w+w')/2).
    const double phase_const = kPi * (w.x - w2.x) * (w.xi + w2.xi);
    double worst = 0.0;
    for (int j = 0; j < grid.nxi; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            const PhaseSpacePoint z(grid.x_at(i), grid.xi_at(j));
            const cplx lhs = oracle_wigner(sf_shift, sg_shift, z, tol);
            const PhaseSpacePoint zs(z.x - 0.5 * (w.x + w2.x), z.xi - 0.5 * (w.xi + w2.xi));
            const double phase = kTwoPi * ((w.xi - w2.xi) * z.x - (w.x - w2.x) * z.xi) +
                                 phase_const;
            const cplx rhs = std::polar(1.0, phase) * oracle_wigner(sf, sg, zs, tol);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

double fourier_covariance_check(const FunctionSpec& f, const FunctionSpec& g,
                                const GridSpec& grid, double tol) {
    const SampledFunction sf = materialize(f);
    const SampledFunction sg = materialize(g);
    const SampledFunction fhat = fourier_transform_function(f);
    const SampledFunction ghat = fourier_transform_function(g);

    double worst = 0.0;
    for (int j = 0; j < grid.nxi; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            const PhaseSpacePoint z(grid.x_at(i), grid.xi_at(j));
            const cplx lhs = oracle_wigner(fhat, ghat, z, tol);
            const cplx rhs = oracle_wigner(sf, sg, fourier_rotation(z), tol);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

double convolution_identity_check(double a, double b,
                                  const std::vector<PhaseSpacePoint>& points,
                                  double tol) {
    if (!(a > 0.0 && b > 0.0) || a == b)
        throw DomainError("convolution_identity_check: need a, b > 0, a != b");
    double worst = 0.0;
    for (const PhaseSpacePoint& z : points) {
        const cplx lhs = amb_conv_exp(a, b, +1, z);
        // rhs = int A(eta_a,eta_a)(t, xi) A(eta_b,eta_b)(x - t, xi) dt;
        // integrand kinks at t = 0 and t = x, decays like e^{-min(a,b)|t|}.
        const double x = z.x, xi = z.xi;
        auto integrand = [&](double t) {
            return amb_onesided(a, a, PhaseSpacePoint(t, xi)) *
                   amb_onesided(b, b, PhaseSpacePoint(x - t, xi));
        };
        const double m = std::min(a, b);
        const double L = std::log(4.0 / (m * tol)) / m + std::abs(x) + 1.0;
        quad::Options opt;
        opt.abs_tol = 0.5 * tol;
        opt.osc_freq = 0.0;  // the phases e^{-i pi xi |t|} are piecewise smooth
        const auto edges = quad::make_edges(-L, L, {0.0, x}, std::abs(xi));
        const cplx rhs = quad::integrate(integrand, edges, opt).value;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double polarization_residual(const SampledFunction& f, const SampledFunction& g,
                             PhaseSpacePoint z, double tol) {
    const SampledFunction sum = sampled_sum(f, g);
    const SampledFunction diff = sampled_difference(f, g);
    const cplx wp = oracle_wigner(sum, sum, z, tol);
    const cplx wm = oracle_wigner(diff, diff, z, tol);
    const cplx wc = oracle_wigner(f, g, z, tol);
    return std::abs(wp - wm - 4.0 * cplx(wc.real(), 0.0));
}

}  // namespace tfzero
