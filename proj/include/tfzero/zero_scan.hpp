// Grid scanning for zeros of phase-space functions: locate zeros by damped
// Newton refinement of suspicious cells, or certify a positive minimum
// modulus over the scanned rectangle.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tfzero/core.hpp"

namespace tfzero {

struct LocatedZero {
    PhaseSpacePoint point;
    double residual_modulus = 0.0;
};

struct ZeroReport {
    std::vector<LocatedZero> zeros;
    double min_modulus = 0.0;
    PhaseSpacePoint argmin;
    GridSpec grid;
    bool refined = false;
    std::vector<PhaseSpacePoint> suspect_cells;   // Newton left the cell / NaN
    std::vector<std::string> certificates;        // e.g. "grid-evidence", "analytic"
};

using PhaseSpaceEval = std::function<cplx(PhaseSpacePoint)>;

struct ScanOptions {
    double zero_tol = 1e-8;
    int threads = 0;            // 0: resolve from TFZERO_THREADS, default 1
};

// Evaluate on the grid; refine cells whose corner moduli dip below
// 10*zero_tol or that are strict local minima well under the global scale.
// Refined points with |F| < zero_tol are reported as zeros; otherwise the
// minimum modulus and its (lexicographically smallest) argmin are returned.
ZeroReport scan(const PhaseSpaceEval& eval, const GridSpec& grid, double zero_tol);
ZeroReport scan(const PhaseSpaceEval& eval, const GridSpec& grid, const ScanOptions& opt);

// Witness points of both signs of a real-valued distribution, if present.
struct SignWitnesses {
    PhaseSpacePoint positive;
    PhaseSpacePoint negative;
};
std::optional<SignWitnesses> sign_change_scan(
    const std::function<double(PhaseSpacePoint)>& eval, const GridSpec& grid);

// 8-bit P5 heatmap of log-modulus over the grid, clipped to the run's
// [min, max]; rows run from xi1 (top) down to xi0, columns from x0 to x1.
void write_heatmap_pgm(const std::string& path, const std::vector<double>& moduli,
                       const GridSpec& grid);

int resolve_thread_count(int requested);

}  // namespace tfzero
