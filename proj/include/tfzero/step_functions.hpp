// Step functions with jumps on Z and alpha*Z, their short-time Fourier
// transform against the unit box window, the convexity-based zero criterion
// for monotone steps, and the almost-periodicity solver that produces zeros
// for non-monotone triples.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfzero/core.hpp"
#include "tfzero/zero_scan.hpp"

namespace tfzero {

// Exact rational p/q recovered from a double by continued fractions.
struct Rational {
    long long p = 0;
    long long q = 1;
};

// If x equals p/q exactly (as a double) for some q <= max_den, return it.
// Doubles carrying a full mantissa (irrational sources) return nullopt.
std::optional<Rational> reconstruct_rational(double x, long long max_den = 1'000'000);

// Piecewise-constant function on (0,1):
//   f = sum_k c_k 1_{(a_k, a_{k+1})},  0 = a_1 < a_2 < ... < a_n < a_{n+1} = 1.
// `breakpoints` stores a_1..a_n (so breakpoints[0] == 0), `values` c_1..c_n > 0.
struct StepOnUnit {
    std::vector<double> breakpoints;
    std::vector<double> values;

    StepOnUnit(std::vector<double> breaks, std::vector<double> vals);
};

// I(xi) = sum_k c_k (e^{2 pi i a_{k+1} xi} - e^{2 pi i a_k xi})
//       = 2 pi i xi * fhat(-xi);  identically 0 at xi = 0 (use step_hat there).
cplx box_fourier_I(const StepOnUnit& s, double xi);

// fhat(xi) = int_0^1 f(t) e^{-2 pi i t xi} dt, exact finite sum.
cplx step_hat(const StepOnUnit& s, double xi);

struct StepZeroDecision {
    bool zero_exists = false;
    std::optional<double> witness_xi;
};

// Monotone steps only: fhat has a real zero iff all interior breakpoints are
// rational; the witness is the product of their denominators, verified to
// |fhat(-xi)| < 1e-12.  Non-monotone value sequences are rejected.
StepZeroDecision lemma_step_decision(const StepOnUnit& s);

// Convexity certificate for a monotone step: the unimodular terms of I(xi)
// combine with nonnegative weights summing to 1, so I cannot vanish for
// xi != 0 once an interior breakpoint is irrational.
struct ConvexityCertificate {
    std::vector<double> weights;   // nonnegative, sum to 1
    bool has_irrational_breakpoint = false;
};
std::optional<ConvexityCertificate> convexity_certificate(const StepOnUnit& s);

// For f_a = b 1_{(0,a)} + 1_{(a,a+alpha)} + c 1_{(a+alpha,1)} with
// 0 < b, c < 1 and irrational alpha, find (a, xi) with fhat_a(xi) = 0 by
// scanning the almost-periodic level equation
//   1 - b - c = (1-b-c+bc) cos(2 pi alpha xi) - b c cos(2 pi xi)
// and extracting the phase alignment.  Postcondition: the induced 3-piece
// step satisfies |fhat(-xi)| < 10 * tol.
struct NonMonoZero {
    double a = 0.0;
    double xi = 0.0;
};
NonMonoZero nonmono_zero_solve(double alpha, double b, double c, double tol);

// Coefficient family for the alpha-step construction: c_k over a finite
// explicit window plus a tail rule.
enum class CoeffMode {
    MonotoneBounded,  // c_k = 2 - tanh(k): strictly decreasing in (1,3)
    LpDecay,          // c_k = 2^{-|k|}
    WindowOnly,       // only the explicit window; anything else is an error
};

// Step function with jumps at a_{2k} = k, a_{2k+1} = k + alpha:
//   f = sum_k ( c_{2k} 1_{(k, k+alpha)} + c_{2k+1} 1_{(k+alpha, k+1)} ).
struct AlphaStepSpec {
    double alpha = 0.0;
    std::string alpha_symbol;         // e.g. "sqrt2/2"; empty when numeric
    CoeffMode mode = CoeffMode::MonotoneBounded;
    int window_start = 0;             // explicit coefficient window (optional)
    std::vector<double> window_values;

    AlphaStepSpec(double alpha_, CoeffMode mode_, std::string symbol = {},
                  int window_start_ = 0, std::vector<double> window_values_ = {});

    double coeff(long long k) const;  // c_k; throws for WindowOnly outside window
    double value_at(double t) const;  // pointwise evaluation of f
};

// Parse "sqrt2/2", "sqrt3/3", "1/sqrt2", or a plain number.
double parse_alpha(const std::string& text, std::string* symbol_out = nullptr);

// V_chi f(x, xi) with chi = 1_{(0,1)}: exact three-piece reduction, no
// quadrature.  Writing x = j + u, the inner step on (0,1) is
//   u in [0,alpha):  [0, alpha-u, 1-u] with (c_{2j}, c_{2j+1}, c_{2j+2})
//   u in [alpha,1):  [0, 1-u, 1-u+alpha] with (c_{2j+1}, c_{2j+2}, c_{2j+3})
// and V = e^{-2 pi i (j+u) xi} * (inner step transform).
cplx stft_box_closed_form(const AlphaStepSpec& spec, double x, double xi);

// The inner StepOnUnit induced at position x (degenerate pieces dropped).
StepOnUnit induced_inner_step(const AlphaStepSpec& spec, double x);

enum class CounterexampleMode { Monotone, Lp };

// Monotone mode: scan V_chi f over the grid (expect no zeros) and attach a
// per-x convexity certificate for every sampled x.  Lp mode: locate a
// non-monotone triple and produce a zero of V_chi f via nonmono_zero_solve.
ZeroReport counterexample_verify(CounterexampleMode mode, double alpha,
                                 const GridSpec& grid);

}  // namespace tfzero
