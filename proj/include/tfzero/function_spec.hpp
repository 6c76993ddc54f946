// The symbolic function-family catalog.  A FunctionSpec names a concrete
// function on the line with validated parameters; materialize() turns it
// into an oracle-evaluable SampledFunction, and the JSON encoding is the
// canonical wire format used by the CLI.
#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "tfzero/core.hpp"
#include "tfzero/sampled.hpp"
#include "tfzero/step_functions.hpp"

namespace tfzero {

// gamma_a(t) = e^{-a pi t^2}, Re a > 0.
struct GaussianSpec {
    cplx a{1.0, 0.0};
    explicit GaussianSpec(cplx a_) : a(a_) {
        if (!(a.real() > 0.0)) throw DomainError("GaussianSpec: Re a must be > 0");
    }
};

// eta_a(t) = e^{-a t} 1_{(0,inf)}(t); reflected = I eta_a.
struct OneSidedExpSpec {
    double a = 1.0;
    bool reflected = false;
    OneSidedExpSpec(double a_, bool reflected_) : a(a_), reflected(reflected_) {
        if (!(a > 0.0)) throw DomainError("OneSidedExpSpec: a must be > 0");
    }
};

// eta_a * eta_b (sign=+1) or eta_a * I eta_b (sign=-1).
struct ConvExpExpSpec {
    double a = 1.0, b = 2.0;
    int sign = +1;
    ConvExpExpSpec(double a_, double b_, int sign_) : a(a_), b(b_), sign(sign_) {
        if (!(a > 0.0 && b > 0.0)) throw DomainError("ConvExpExpSpec: a, b must be > 0");
        if (sign != 1 && sign != -1) throw DomainError("ConvExpExpSpec: sign must be +-1");
    }
};

// t^n e^{-a t} 1_{(0,inf)}(t).
struct MonomialExpSpec {
    int n = 0;
    double a = 1.0;
    MonomialExpSpec(int n_, double a_) : n(n_), a(a_) {
        if (n < 0) throw DomainError("MonomialExpSpec: n must be >= 0");
        if (!(a > 0.0)) throw DomainError("MonomialExpSpec: a must be > 0");
    }
};

// exp(a t - b e^t).
struct GumbelExpSpec {
    double a = 1.0, b = 1.0;
    GumbelExpSpec(double a_, double b_) : a(a_), b(b_) {
        if (!(a > 0.0 && b > 0.0)) throw DomainError("GumbelExpSpec: a, b must be > 0");
    }
};

// g = sum_n sqrt(pi^n n!) c_n h_n, stored via P(z) = sum_n c_n z^n.
struct HermiteComboSpec {
    std::vector<cplx> coeffs;  // c_0 .. c_N, ascending
    explicit HermiteComboSpec(std::vector<cplx> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) throw DomainError("HermiteComboSpec: empty coefficient list");
        if (coeffs.back() == cplx(0.0, 0.0))
            throw DomainError("HermiteComboSpec: leading coefficient must be nonzero");
    }
};

// Step function with jumps on Z and alpha Z (see step_functions).
struct StepFunctionSpec {
    AlphaStepSpec step;
    explicit StepFunctionSpec(AlphaStepSpec s) : step(std::move(s)) {}
};

// Linear interpolation of tabulated samples; zero outside the grid.
struct SampledGridSpec {
    double t0 = 0.0, dt = 1.0;
    std::vector<cplx> values;
    SampledGridSpec(double t0_, double dt_, std::vector<cplx> v)
        : t0(t0_), dt(dt_), values(std::move(v)) {
        if (!(dt > 0.0)) throw DomainError("SampledGridSpec: dt must be > 0");
        if (values.size() < 2) throw DomainError("SampledGridSpec: need >= 2 samples");
    }
};

// chi = 1_{(0,1)}.
struct IndicatorSpec {};

struct ReflectedSpec;

using FunctionSpec = std::variant<GaussianSpec, OneSidedExpSpec, ConvExpExpSpec,
                                  MonomialExpSpec, GumbelExpSpec, HermiteComboSpec,
                                  StepFunctionSpec, SampledGridSpec, IndicatorSpec,
                                  ReflectedSpec>;

// Wrapper marking the reflection of a family with no symmetric-closed form
// (monomial exponentials, Gumbel, indicator, steps, samples).  Materializes
// as the exact reflected evaluator.
struct ReflectedSpec {
    std::shared_ptr<FunctionSpec> inner;
    explicit ReflectedSpec(FunctionSpec f)
        : inner(std::make_shared<FunctionSpec>(std::move(f))) {}
};

// If(t) = f(-t).  Even families map to themselves, one-sided exponentials
// flip their flag, mixed convolutions swap parameters, Hermite combinations
// alternate coefficient signs, everything else wraps in ReflectedSpec.
// reflect(reflect(f)) == f structurally.
FunctionSpec reflect(const FunctionSpec& spec);

// Oracle-evaluable form.
SampledFunction materialize(const FunctionSpec& spec);

// Closed-form Fourier transform where the catalog knows one (Gaussian,
// one-sided exponentials and their convolutions, monomial exponentials,
// indicator); throws DomainError otherwise.  Used by the metaplectic
// covariance checks; validated pointwise against oracle_fourier.
SampledFunction fourier_transform_function(const FunctionSpec& spec);
bool has_closed_form_fourier(const FunctionSpec& spec);

// JSON wire format: {"family": "...", ...params}.  Round-trip is lossless.
std::string to_json(const FunctionSpec& spec);
FunctionSpec function_spec_from_json(const std::string& json_text);

// Hermite-combination helpers.
// Plain Hermite coefficients a_n (f = sum a_n h_n) to P-coefficients
// c_n = a_n / sqrt(pi^n n!).
std::vector<cplx> hermite_to_p_coeffs(const std::vector<cplx>& hermite_coeffs);
// Bargmann transform of a Hermite combo is the polynomial P(pi z); returns
// its coefficients q_n = c_n pi^n (ascending).
std::vector<cplx> bargmann_polynomial(const HermiteComboSpec& combo);
// Inverse: the combo whose Bargmann transform is the given polynomial.
HermiteComboSpec combo_from_bargmann_polynomial(const std::vector<cplx>& q);

}  // namespace tfzero
