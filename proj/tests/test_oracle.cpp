#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tfzero/function_spec.hpp"
#include "tfzero/oracle.hpp"
#include "tfzero/special_functions.hpp"

using namespace tfzero;

namespace {

SampledFunction h0() { return materialize(HermiteComboSpec({cplx(1.0, 0.0)})); }

SampledFunction eta(double a) { return materialize(OneSidedExpSpec(a, false)); }

}  // namespace

TEST_CASE("ambiguity spot values") {
    const SampledFunction g = materialize(GaussianSpec(cplx(1.0, 0.0)));
    CHECK(std::abs(oracle_ambiguity(g, g, {0.0, 0.0}, 1e-9) -
                   cplx(1.0 / std::sqrt(2.0), 0.0)) < 1e-9);

    const SampledFunction e1 = eta(1.0);
    CHECK(std::abs(oracle_ambiguity(e1, e1, {0.0, 0.0}, 1e-9) - cplx(0.5, 0.0)) < 1e-9);

    const SampledFunction box = materialize(IndicatorSpec{});
    CHECK(std::abs(oracle_ambiguity(box, box, {0.0, 1.0}, 1e-10)) < 1e-10);
}

TEST_CASE("wigner of the normalized gaussian") {
    const SampledFunction h = h0();
    CHECK(std::abs(oracle_wigner(h, h, {0.0, 0.0}, 1e-9) - cplx(2.0, 0.0)) < 1e-9);
    for (const auto& [x, xi] : {std::pair{0.5, 0.0}, {0.0, 0.7}, {-0.3, 0.4}}) {
        const double expected = 2.0 * std::exp(-kTwoPi * (x * x + xi * xi));
        CHECK(std::abs(oracle_wigner(h, h, {x, xi}, 1e-9) - cplx(expected, 0.0)) < 1e-8);
    }
}

TEST_CASE("stft at xi = 0 is the sliding inner product") {
    const SampledFunction f = eta(1.0);
    const SampledFunction g = materialize(GaussianSpec(cplx(1.0, 0.0)));
    for (const double x : {0.0, 0.8, -1.2}) {
        const cplx lhs = oracle_stft(f, g, {x, 0.0}, 1e-10);
        // direct quadrature of the inner product f(t) conj(g(t-x))
        SampledFunction prod;
        prod.eval = [&f, &g, x](double t) { return f(t) * std::conj(g(t - x)); };
        prod.lo = -3.0;
        prod.hi = 3.0;
        prod.decay = DecayModel::exponential(2.0, 0.5);
        prod.breakpoints = {0.0};
        const cplx rhs = oracle_fourier(prod, 0.0, 1e-10);
        CHECK(std::abs(lhs - rhs) < 1e-9);
    }
}

TEST_CASE("self-wigner is real") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> pd(-1.5, 1.5);
    const std::vector<SampledFunction> fns = {eta(1.0),
                                              materialize(MonomialExpSpec(1, 1.0)),
                                              materialize(IndicatorSpec{}), h0()};
    for (const SampledFunction& f : fns)
        for (int i = 0; i < 10; ++i) {
            const cplx w = oracle_wigner(f, f, {pd(rng), pd(rng)}, 1e-9);
            CHECK(std::abs(w.imag()) < 1e-8);
        }
}

TEST_CASE("bargmann transform of the gaussian ground state is 1") {
    const SampledFunction h = h0();
    for (const cplx z : {cplx(0.0, 0.0), cplx(1.0, 0.0), cplx(0.0, 1.0)}) {
        CHECK(std::abs(oracle_bargmann(h, z, 1e-9) - cplx(1.0, 0.0)) < 1e-9);
    }
}

TEST_CASE("stft against the gaussian window matches the bargmann transform") {
    // |V_{h0} f(zbar)| = |Bf(z)| e^{-pi |z|^2 / 2}
    const SampledFunction f = eta(1.0);
    const SampledFunction h = h0();
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> pd(-1.2, 1.2);
    for (int i = 0; i < 20; ++i) {
        const double x = pd(rng), xi = pd(rng);
        const cplx z(x, xi);
        const cplx v = oracle_stft(f, h, {x, -xi}, 1e-9);
        const cplx b = oracle_bargmann(f, z, 1e-9);
        CHECK(std::abs(std::abs(v) - std::abs(b) * std::exp(-0.5 * kPi * std::norm(z))) <
              1e-7);
    }
}

TEST_CASE("bargmann linearity") {
    const SampledFunction f = eta(1.0);
    const SampledFunction g = materialize(GaussianSpec(cplx(2.0, 0.0)));
    const SampledFunction s = sampled_sum(f, g);
    for (const cplx z : {cplx(0.3, -0.4), cplx(-1.0, 0.5)}) {
        const cplx lhs = oracle_bargmann(s, z, 1e-10);
        const cplx rhs = oracle_bargmann(f, z, 1e-10) + oracle_bargmann(g, z, 1e-10);
        CHECK(std::abs(lhs - rhs) < 1e-9);
    }
}

TEST_CASE("fourier spot values") {
    const SampledFunction g = materialize(GaussianSpec(cplx(1.0, 0.0)));
    CHECK(std::abs(oracle_fourier(g, 0.0, 1e-10) - cplx(1.0, 0.0)) < 1e-10);
    CHECK(std::abs(oracle_fourier(g, 1.0, 1e-10) - cplx(std::exp(-kPi), 0.0)) < 1e-10);

    const SampledFunction e1 = eta(1.0);
    for (const double xi : {0.0, 0.5, -2.0})
        CHECK(std::abs(oracle_fourier(e1, xi, 1e-10) - 1.0 / cplx(1.0, kTwoPi * xi)) <
              1e-9);

    const SampledFunction box = materialize(IndicatorSpec{});
    CHECK(std::abs(oracle_fourier(box, 1.0, 1e-11)) < 1e-11);
}

TEST_CASE("halving the step (forced extra depth) changes results below tol") {
    const SampledFunction f = eta(1.0);
    const SampledFunction g = materialize(MonomialExpSpec(2, 1.0));
    const PhaseSpacePoint z{0.7, 1.3};
    OracleOptions base{1e-9, 0};
    OracleOptions fine{1e-9, 1};
    const cplx a = oracle_ambiguity(f, g, z, base);
    const cplx b = oracle_ambiguity(f, g, z, fine);
    CHECK(std::abs(a - b) < 1e-9);
}

TEST_CASE("truncation failure when neither factor decays") {
    SampledFunction one;
    one.eval = [](double) { return cplx(1.0, 0.0); };
    one.lo = one.hi = 0.0;
    one.decay = DecayModel::bounded(1.0);
    CHECK_THROWS_AS((void)oracle_ambiguity(one, one, {0.0, 0.3}, 1e-6), OracleError);
}

TEST_CASE("ambiguity reflection identity A(If, Ig)(x, xi) = A(f,g)(-x, -xi)") {
    const FunctionSpec f = MonomialExpSpec(1, 1.0);
    const FunctionSpec g = OneSidedExpSpec(2.0, false);
    const SampledFunction sf = materialize(f), sg = materialize(g);
    const SampledFunction rf = materialize(reflect(f)), rg = materialize(reflect(g));
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> pd(-1.5, 1.5);
    for (int i = 0; i < 12; ++i) {
        const double x = pd(rng), xi = pd(rng);
        const cplx lhs = oracle_ambiguity(rf, rg, {x, xi}, 1e-9);
        const cplx rhs = oracle_ambiguity(sf, sg, {-x, -xi}, 1e-9);
        CHECK(std::abs(lhs - rhs) < 1e-8);
    }
}
