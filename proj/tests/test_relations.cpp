#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tfzero/kernels.hpp"
#include "tfzero/relations.hpp"

using namespace tfzero;

TEST_CASE("conversion round-trips are the identity at random points") {
    std::mt19937 rng(20240819);
    std::uniform_real_distribution<double> pd(-5.0, 5.0), vd(-2.0, 2.0);
    const TransformKind kinds[] = {TransformKind::Wigner, TransformKind::Ambiguity,
                                   TransformKind::STFT};
    for (int i = 0; i < 10000; ++i) {
        const PhaseSpacePoint z(pd(rng), pd(rng));
        const cplx v(vd(rng), vd(rng));
        for (TransformKind from : kinds)
            for (TransformKind to : kinds) {
                const ConversionResult fwd = convert_value(from, to, v, z);
                const ConversionResult back = convert_value(to, from, fwd.value, fwd.z);
                CHECK(std::abs(back.value - v) < 1e-12 * (1.0 + std::abs(v)));
                CHECK(back.z.x == doctest::Approx(z.x).epsilon(1e-14));
                CHECK(back.z.xi == doctest::Approx(z.xi).epsilon(1e-14));
                // both legs reflect, or neither does: the net reflection cancels
                CHECK(fwd.window_reflected == back.window_reflected);
            }
    }
}

TEST_CASE("conversion identity cases") {
    // Ambiguity -> STFT at the origin: unit phase, same point, no reflection.
    const ConversionResult r =
        convert_value(TransformKind::Ambiguity, TransformKind::STFT, cplx(0.3, 0.4),
                      {0.0, 0.0});
    CHECK(std::abs(r.value - cplx(0.3, 0.4)) < 1e-15);
    CHECK(r.z == PhaseSpacePoint(0.0, 0.0));
    CHECK_FALSE(r.window_reflected);
}

TEST_CASE("ambiguity value converts to the reflected-window wigner value") {
    // A(eta_1, eta_1)(1, 0.5) rewritten as W(eta_1, I eta_1)(0.5, 0.25),
    // both sides checked through the oracle.
    const FunctionSpec f = OneSidedExpSpec(1.0, false);
    const SampledFunction sf = materialize(f);
    const SampledFunction sg_refl = materialize(reflect(f));
    const PhaseSpacePoint z(1.0, 0.5);
    const cplx a_val = oracle_ambiguity(sf, sf, z, 1e-9);
    const ConversionResult conv =
        convert_value(TransformKind::Ambiguity, TransformKind::Wigner, a_val, z);
    CHECK(conv.window_reflected);
    CHECK(conv.z.x == doctest::Approx(0.5));
    CHECK(conv.z.xi == doctest::Approx(0.25));
    const cplx w_val = oracle_wigner(sf, sg_refl, conv.z, 1e-9);
    CHECK(std::abs(conv.value - w_val) < 1e-6);
}

TEST_CASE("wigner from stft and back through closed forms") {
    // W(f,g)(x,xi) = e^{4 pi i x xi} V_{Ig} f(2x, 2xi) for the gaussian pair,
    // where every quantity has a closed form.
    const SampledFunction g1 = materialize(GaussianSpec(cplx(1.0, 0.0)));
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> pd(-1.0, 1.0);
    for (int i = 0; i < 8; ++i) {
        const PhaseSpacePoint z(pd(rng), pd(rng));
        const cplx w = oracle_wigner(g1, g1, z, 1e-10);
        const cplx v = oracle_stft(g1, g1, {2.0 * z.x, 2.0 * z.xi}, 1e-10);
        CHECK(std::abs(w - std::polar(1.0, 2.0 * kTwoPi * z.x * z.xi) * v) < 1e-8);
    }
}

TEST_CASE("shift covariance: identity shift is exact") {
    const GridSpec grid(-1.0, 1.0, 5, -1.0, 1.0, 5);
    const double dev = shift_covariance_check(GaussianSpec(cplx(1, 0)),
                                              GaussianSpec(cplx(1, 0)), {0.0, 0.0},
                                              {0.0, 0.0}, grid, 1e-9);
    CHECK(dev < 1e-9);
}

TEST_CASE("shift covariance for the gaussian pair") {
    const GridSpec grid(-2.0, 2.0, 9, -2.0, 2.0, 9);
    const double dev = shift_covariance_check(GaussianSpec(cplx(1, 0)),
                                              GaussianSpec(cplx(1, 0)), {1.0, 0.0},
                                              {0.0, 0.0}, grid, 1e-9);
    CHECK(dev < 1e-6);
}

TEST_CASE("shift covariance for the one-sided exponential") {
    const GridSpec grid(-1.5, 1.5, 7, -1.5, 1.5, 7);
    const double dev = shift_covariance_check(OneSidedExpSpec(1.0, false),
                                              OneSidedExpSpec(1.0, false), {0.0, 1.0},
                                              {0.0, 1.0}, grid, 1e-9);
    CHECK(dev < 1e-6);
}

TEST_CASE("fourier covariance: gaussian is rotation invariant") {
    const GridSpec grid(-1.5, 1.5, 7, -1.5, 1.5, 7);
    const double dev =
        fourier_covariance_check(GaussianSpec(cplx(1, 0)), GaussianSpec(cplx(1, 0)), grid,
                                 1e-9);
    CHECK(dev < 1e-7);
}

TEST_CASE("fourier covariance for slowly decaying transforms") {
    const GridSpec grid(-1.0, 1.0, 5, -1.0, 1.0, 5);
    CHECK(fourier_covariance_check(OneSidedExpSpec(1.0, false),
                                   OneSidedExpSpec(1.0, false), grid, 1e-7) < 1e-5);
    CHECK(fourier_covariance_check(MonomialExpSpec(1, 1.0), MonomialExpSpec(1, 1.0), grid,
                                   1e-7) < 1e-5);
}

TEST_CASE("convolution identity for the exponential pair") {
    std::vector<PhaseSpacePoint> points;
    for (const double x : {-2.0, -0.5, 0.0, 1.0, 2.5})
        for (const double xi : {-1.5, -0.3, 0.0, 0.7, 2.0}) points.push_back({x, xi});
    CHECK(convolution_identity_check(1.0, 2.0, points, 1e-8) < 1e-5);
}

TEST_CASE("polarization identity") {
    const SampledFunction h = materialize(HermiteComboSpec({cplx(1.0, 0.0)}));
    const SampledFunction e = materialize(OneSidedExpSpec(1.0, false));
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> pd(-1.2, 1.2);
    for (int i = 0; i < 10; ++i) {
        const PhaseSpacePoint z(pd(rng), pd(rng));
        CHECK(polarization_residual(h, e, z, 1e-9) < 1e-5);
    }
}
