#include "tfzero/zero_scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <thread>

namespace tfzero {

int resolve_thread_count(int requested) {
    if (requested >= 1) return requested;
    if (const char* env = std::getenv("TFZERO_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

namespace {

struct NewtonOutcome {
    enum class Kind { Zero, LocalMin, Suspect } kind;
    PhaseSpacePoint point;
    double modulus;
};

// Damped Newton on (x, xi) -> (Re F, Im F) with central-difference Jacobian.
NewtonOutcome refine_cell(const PhaseSpaceEval& eval, PhaseSpacePoint start,
                          double cell_w, double cell_h, double zero_tol) {
    double x = start.x, xi = start.xi;
    cplx f = eval(PhaseSpacePoint(x, xi));
    double best = std::abs(f);
    double bx = x, bxi = xi;

    const double escape = 4.0 * std::hypot(cell_w, cell_h);
    for (int it = 0; it < 60; ++it) {
        if (!std::isfinite(f.real()) || !std::isfinite(f.imag()))
            return {NewtonOutcome::Kind::Suspect, PhaseSpacePoint(bx, bxi), best};
        if (std::abs(f) < zero_tol)
            return {NewtonOutcome::Kind::Zero, PhaseSpacePoint(x, xi), std::abs(f)};

        const double h = 1e-6 * (1.0 + std::hypot(x, xi));
        const cplx fx = (eval(PhaseSpacePoint(x + h, xi)) - eval(PhaseSpacePoint(x - h, xi))) / (2.0 * h);
        const cplx fxi = (eval(PhaseSpacePoint(x, xi + h)) - eval(PhaseSpacePoint(x, xi - h))) / (2.0 * h);

        // Solve the 2x2 real system J * d = -F.
        const double a = fx.real(), b = fxi.real(), c = fx.imag(), d = fxi.imag();
        const double det = a * d - b * c;
        if (std::abs(det) < 1e-300)
            return {NewtonOutcome::Kind::LocalMin, PhaseSpacePoint(bx, bxi), best};
        double dx = (-f.real() * d + f.imag() * b) / det;
        double dxi = (-f.imag() * a + f.real() * c) / det;

        bool improved = false;
        for (int halvings = 0; halvings < 40; ++halvings) {
            const cplx trial = eval(PhaseSpacePoint(x + dx, xi + dxi));
            if (std::isfinite(trial.real()) && std::isfinite(trial.imag()) &&
                std::abs(trial) < std::abs(f)) {
                x += dx;
                xi += dxi;
                f = trial;
                improved = true;
                break;
            }
            dx *= 0.5;
            dxi *= 0.5;
        }
        if (std::abs(f) < best) {
            best = std::abs(f);
            bx = x;
            bxi = xi;
        }
        if (std::hypot(x - start.x, xi - start.xi) > escape)
            return {NewtonOutcome::Kind::Suspect, PhaseSpacePoint(bx, bxi), best};
        if (!improved)
            return {best < zero_tol ? NewtonOutcome::Kind::Zero : NewtonOutcome::Kind::LocalMin,
                    PhaseSpacePoint(bx, bxi), best};
    }
    return {best < zero_tol ? NewtonOutcome::Kind::Zero : NewtonOutcome::Kind::LocalMin,
            PhaseSpacePoint(bx, bxi), best};
}

}  // namespace

ZeroReport scan(const PhaseSpaceEval& eval, const GridSpec& grid, double zero_tol) {
    ScanOptions opt;
    opt.zero_tol = zero_tol;
    return scan(eval, grid, opt);
}

ZeroReport scan(const PhaseSpaceEval& eval, const GridSpec& grid, const ScanOptions& opt) {
    if (!(opt.zero_tol > 0.0)) throw DomainError("scan: zero_tol must be > 0");
    const int nx = grid.nx, nxi = grid.nxi;
    std::vector<double> mod(std::size_t(nx) * std::size_t(nxi));

    const int nthreads = std::min(resolve_thread_count(opt.threads), nxi);
    auto fill_rows = [&](int j0, int j1) {
        for (int j = j0; j < j1; ++j)
            for (int i = 0; i < nx; ++i)
                mod[std::size_t(j) * std::size_t(nx) + std::size_t(i)] =
                    std::abs(eval(PhaseSpacePoint(grid.x_at(i), grid.xi_at(j))));
    };
    if (nthreads <= 1) {
        fill_rows(0, nxi);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (nxi + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            const int j0 = t * chunk, j1 = std::min(nxi, j0 + chunk);
            if (j0 < j1) pool.emplace_back(fill_rows, j0, j1);
        }
        for (auto& th : pool) th.join();
    }

    ZeroReport rep;
    rep.grid = grid;
    rep.certificates.push_back("grid-evidence");

    // min / argmin with lexicographic tie-break, reduction in index order.
    rep.min_modulus = std::numeric_limits<double>::infinity();
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < nxi; ++j) {
            const double m = mod[std::size_t(j) * std::size_t(nx) + std::size_t(i)];
            if (m < rep.min_modulus) {
                rep.min_modulus = m;
                rep.argmin = PhaseSpacePoint(grid.x_at(i), grid.xi_at(j));
            }
        }

    // Median of moduli as the global scale for the local-minimum trigger.
    double median = 0.0;
    {
        std::vector<double> tmp = mod;
        const std::size_t mid = tmp.size() / 2;
        std::nth_element(tmp.begin(), tmp.begin() + long(mid), tmp.end());
        median = tmp[mid];
    }

    auto at = [&](int i, int j) { return mod[std::size_t(j) * std::size_t(nx) + std::size_t(i)]; };
    auto is_local_min = [&](int i, int j) {
        const double m = at(i, j);
        for (int dj = -1; dj <= 1; ++dj)
            for (int di = -1; di <= 1; ++di) {
                if (di == 0 && dj == 0) continue;
                const int ii = i + di, jj = j + dj;
                if (ii < 0 || ii >= nx || jj < 0 || jj >= nxi) continue;
                if (at(ii, jj) < m) return false;
            }
        return true;
    };

    const double cw = (grid.x1 - grid.x0) / double(nx - 1);
    const double ch = (grid.xi1 - grid.xi0) / double(nxi - 1);

    std::vector<LocatedZero> zeros;
    for (int j = 0; j < nxi; ++j) {
        for (int i = 0; i < nx; ++i) {
            const double m = at(i, j);
            const bool dip = m < 10.0 * opt.zero_tol;
            const bool localmin = is_local_min(i, j) && m < 0.25 * median;
            if (!dip && !localmin) continue;

            rep.refined = true;
            NewtonOutcome res = refine_cell(eval, PhaseSpacePoint(grid.x_at(i), grid.xi_at(j)),
                                            cw, ch, opt.zero_tol);
            if (res.kind == NewtonOutcome::Kind::Zero) {
                bool duplicate = false;
                for (const LocatedZero& z : zeros)
                    if (std::hypot(z.point.x - res.point.x, z.point.xi - res.point.xi) <
                        0.5 * std::hypot(cw, ch)) {
                        duplicate = true;
                        break;
                    }
                if (!duplicate) zeros.push_back({res.point, res.modulus});
            } else if (res.kind == NewtonOutcome::Kind::Suspect) {
                rep.suspect_cells.push_back(PhaseSpacePoint(grid.x_at(i), grid.xi_at(j)));
            } else if (res.modulus < rep.min_modulus) {
                rep.min_modulus = res.modulus;
                rep.argmin = res.point;
            }
        }
    }
    rep.zeros = std::move(zeros);
    for (const LocatedZero& z : rep.zeros)
        if (z.residual_modulus < rep.min_modulus) {
            rep.min_modulus = z.residual_modulus;
            rep.argmin = z.point;
        }
    return rep;
}

std::optional<SignWitnesses> sign_change_scan(
    const std::function<double(PhaseSpacePoint)>& eval, const GridSpec& grid) {
    std::optional<PhaseSpacePoint> pos, neg;
    for (int j = 0; j < grid.nxi && !(pos && neg); ++j)
        for (int i = 0; i < grid.nx && !(pos && neg); ++i) {
            const PhaseSpacePoint z(grid.x_at(i), grid.xi_at(j));
            const double v = eval(z);
            if (v > 0.0 && !pos) pos = z;
            if (v < 0.0 && !neg) neg = z;
        }
    if (pos && neg) return SignWitnesses{*pos, *neg};
    return std::nullopt;
}

void write_heatmap_pgm(const std::string& path, const std::vector<double>& moduli,
                       const GridSpec& grid) {
    if (moduli.size() != std::size_t(grid.nx) * std::size_t(grid.nxi))
        throw DomainError("write_heatmap_pgm: size mismatch");
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (double m : moduli) {
        const double lm = std::log(std::max(m, 1e-300));
        lo = std::min(lo, lm);
        hi = std::max(hi, lm);
    }
    const double span = (hi > lo) ? hi - lo : 1.0;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw OracleError("write_heatmap_pgm: cannot open " + path);
    out << "P5\n" << grid.nx << " " << grid.nxi << "\n255\n";
    for (int j = grid.nxi - 1; j >= 0; --j)
        for (int i = 0; i < grid.nx; ++i) {
            const double lm = std::log(std::max(moduli[std::size_t(j) * std::size_t(grid.nx) +
                                                       std::size_t(i)], 1e-300));
            const int v = int(std::lround(255.0 * (lm - lo) / span));
            out.put(char(std::clamp(v, 0, 255)));
        }
}

}  // namespace tfzero
