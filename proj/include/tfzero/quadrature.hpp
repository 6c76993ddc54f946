// Adaptive Gauss-Kronrod (G7/K15) quadrature for complex-valued integrands.
//
// Callers hand in an explicit list of panel edges; edges must include every
// integrand breakpoint (jumps, kinks) so each panel sees a smooth function.
// When an oscillation frequency is supplied, panels wider than a quarter
// period are split unconditionally before their error estimates are trusted.
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "tfzero/core.hpp"

namespace tfzero::quad {

struct Options {
    double abs_tol = 1e-9;
    double osc_freq = 0.0;     // cycles per unit length; cap = 1/(4 freq)
    int max_depth = 40;        // bisection depth per initial panel
    int min_depth = 0;         // forced pre-subdivision (convergence self-tests)
    std::size_t max_panels = 4'000'000;
};

struct Result {
    cplx value{0.0, 0.0};
    double err = 0.0;          // accumulated error estimate
    std::size_t evals = 0;
};

using Integrand = std::function<cplx(double)>;

// Integrate f over [edges.front(), edges.back()] with the given initial
// panel decomposition.  Throws OracleError if the tolerance cannot be met
// within the panel budget.
Result integrate(const Integrand& f, const std::vector<double>& edges,
                 const Options& opt);

// Build an edge list for [a, b]: include interior breakpoints, split every
// segment to at most a quarter oscillation period, and split very long
// segments geometrically so adaptive refinement stays shallow.
std::vector<double> make_edges(double a, double b,
                               const std::vector<double>& breakpoints,
                               double osc_freq);

}  // namespace tfzero::quad
