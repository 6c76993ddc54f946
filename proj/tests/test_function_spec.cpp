#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tfzero/function_spec.hpp"
#include "tfzero/oracle.hpp"

using namespace tfzero;

namespace {

std::vector<FunctionSpec> representative_specs() {
    return {
        GaussianSpec(cplx(1.0, 0.0)),
        GaussianSpec(cplx(0.7, 0.4)),
        OneSidedExpSpec(1.0, false),
        OneSidedExpSpec(2.5, true),
        ConvExpExpSpec(1.0, 2.0, +1),
        ConvExpExpSpec(1.5, 0.5, -1),
        MonomialExpSpec(3, 1.0),
        GumbelExpSpec(1.0, 1.0),
        GumbelExpSpec(2.0, 0.5),
        HermiteComboSpec({cplx(1.0, 0.0), cplx(0.0, -0.5), cplx(0.25, 0.0)}),
        StepFunctionSpec(AlphaStepSpec(std::sqrt(2.0) / 2.0, CoeffMode::MonotoneBounded,
                                       "sqrt2/2")),
        SampledGridSpec(-1.0, 0.5, {cplx(0, 0), cplx(1, 1), cplx(0.5, -0.5), cplx(0, 0)}),
        IndicatorSpec{},
        FunctionSpec(ReflectedSpec(FunctionSpec(MonomialExpSpec(2, 1.0)))),
    };
}

}  // namespace

TEST_CASE("json round-trip is lossless") {
    for (const FunctionSpec& spec : representative_specs()) {
        const std::string text = to_json(spec);
        const FunctionSpec back = function_spec_from_json(text);
        CHECK(to_json(back) == text);
    }
}

TEST_CASE("json rejects malformed input") {
    CHECK_THROWS_AS((void)function_spec_from_json("{"), DomainError);
    CHECK_THROWS_AS((void)function_spec_from_json("{\"family\":\"nope\"}"), DomainError);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((void)GaussianSpec(cplx(-1.0, 0.0)), DomainError);
    CHECK_THROWS_AS((void)OneSidedExpSpec(0.0, false), DomainError);
    CHECK_THROWS_AS((void)ConvExpExpSpec(1.0, 2.0, 3), DomainError);
    CHECK_THROWS_AS((void)MonomialExpSpec(-1, 1.0), DomainError);
    CHECK_THROWS_AS((void)HermiteComboSpec({}), DomainError);
    CHECK_THROWS_AS((void)HermiteComboSpec({cplx(1, 0), cplx(0, 0)}), DomainError);
}

TEST_CASE("reflect: double reflection is the identity") {
    for (const FunctionSpec& spec : representative_specs()) {
        const FunctionSpec twice = reflect(reflect(spec));
        CHECK(to_json(twice) == to_json(spec));
    }
}

TEST_CASE("reflect: pointwise f(-t)") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> td(-4.0, 4.0);
    for (const FunctionSpec& spec : representative_specs()) {
        const SampledFunction orig = materialize(spec);
        const SampledFunction refl = materialize(reflect(spec));
        for (int i = 0; i < 50; ++i) {
            const double t = td(rng);
            CHECK(std::abs(refl(t) - orig(-t)) < 1e-14 * (1.0 + std::abs(orig(-t))));
        }
    }
}

TEST_CASE("reflect examples") {
    CHECK(to_json(reflect(GaussianSpec(cplx(1, 0)))) ==
          to_json(FunctionSpec(GaussianSpec(cplx(1, 0)))));
    CHECK(to_json(reflect(OneSidedExpSpec(1.0, false))) ==
          to_json(FunctionSpec(OneSidedExpSpec(1.0, true))));
}

TEST_CASE("decay envelopes are honest") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> td(-25.0, 25.0);
    for (const FunctionSpec& spec : representative_specs()) {
        const SampledFunction f = materialize(spec);
        for (int i = 0; i < 400; ++i) {
            const double t = td(rng);
            double dist = 0.0;
            if (t < f.lo) dist = f.lo - t;
            if (t > f.hi) dist = t - f.hi;
            if (dist == 0.0) continue;  // no claim inside the support hint
            CHECK(std::abs(f(t)) <= f.decay.envelope(dist) * (1.0 + 1e-9) + 1e-300);
        }
    }
}

TEST_CASE("closed-form fourier transforms match the oracle pointwise") {
    const std::vector<FunctionSpec> with_hat = {
        GaussianSpec(cplx(1.0, 0.0)),     GaussianSpec(cplx(2.0, 0.5)),
        OneSidedExpSpec(1.0, false),      OneSidedExpSpec(1.5, true),
        ConvExpExpSpec(1.0, 2.0, +1),     ConvExpExpSpec(1.0, 2.0, -1),
        MonomialExpSpec(2, 1.0),          IndicatorSpec{},
        HermiteComboSpec({cplx(0.5, 0.0), cplx(0.0, 1.0)}),
    };
    for (const FunctionSpec& spec : with_hat) {
        CHECK(has_closed_form_fourier(spec));
        const SampledFunction f = materialize(spec);
        const SampledFunction fhat = fourier_transform_function(spec);
        for (const double xi : {0.0, 0.5, -1.3, 2.0}) {
            const cplx via_oracle = oracle_fourier(f, xi, 1e-10);
            CHECK(std::abs(fhat(xi) - via_oracle) < 1e-9);
        }
    }
    CHECK_FALSE(has_closed_form_fourier(GumbelExpSpec(1.0, 1.0)));
    CHECK_THROWS_AS((void)fourier_transform_function(GumbelExpSpec(1.0, 1.0)), DomainError);
}

TEST_CASE("fourier catalog spot values") {
    // Gaussian is self-dual; eta_1 -> 1/(1 + 2 pi i xi); box vanishes at xi = 1.
    const SampledFunction ghat = fourier_transform_function(GaussianSpec(cplx(1, 0)));
    CHECK(std::abs(ghat(0.0) - cplx(1.0, 0.0)) < 1e-14);
    CHECK(std::abs(ghat(1.0) - cplx(std::exp(-kPi), 0.0)) < 1e-14);

    const SampledFunction ehat = fourier_transform_function(OneSidedExpSpec(1.0, false));
    CHECK(std::abs(ehat(0.7) - 1.0 / cplx(1.0, kTwoPi * 0.7)) < 1e-14);

    const SampledFunction bhat = fourier_transform_function(IndicatorSpec{});
    CHECK(std::abs(bhat(1.0)) < 1e-12);
    CHECK(std::abs(bhat(0.0) - cplx(1.0, 0.0)) < 1e-12);
}

TEST_CASE("hermite combo helpers") {
    // Round trip hermite coefficients -> P-coefficients -> weights.
    const std::vector<cplx> a = {cplx(1.0, 0.0), cplx(0.0, 2.0), cplx(-0.5, 0.5)};
    const std::vector<cplx> p = hermite_to_p_coeffs(a);
    CHECK(std::abs(p[0] - a[0]) < 1e-15);
    CHECK(std::abs(p[1] - a[1] / std::sqrt(kPi)) < 1e-15);
    CHECK(std::abs(p[2] - a[2] / std::sqrt(kPi * kPi * 2.0)) < 1e-15);

    const HermiteComboSpec combo({cplx(0.5, 0.0), cplx(1.0, -1.0)});
    const std::vector<cplx> q = bargmann_polynomial(combo);
    CHECK(std::abs(q[0] - cplx(0.5, 0.0)) < 1e-15);
    CHECK(std::abs(q[1] - kPi * cplx(1.0, -1.0)) < 1e-15);
    const HermiteComboSpec back = combo_from_bargmann_polynomial(q);
    CHECK(std::abs(back.coeffs[1] - combo.coeffs[1]) < 1e-15);
}
