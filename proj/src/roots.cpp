#include "tfzero/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace tfzero {

namespace {

cplx horner(const std::vector<cplx>& c, cplx z) {
    cplx acc(0.0, 0.0);
    for (const cplx& a : c) acc = acc * z + a;
    return acc;
}

double scale_at(const std::vector<cplx>& c, cplx z) {
    double acc = 0.0;
    double zp = 1.0;
    const double az = std::abs(z);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc += std::abs(*it) * zp;
        zp *= az;
    }
    return std::max(acc, 1e-300);
}

}  // namespace

RootResult aberth_roots(const std::vector<double>& coeffs) {
    if (coeffs.size() < 2) throw DomainError("aberth_roots: degree must be >= 1");
    if (coeffs.front() == 0.0) throw DomainError("aberth_roots: zero leading coefficient");
    for (double c : coeffs)
        if (!std::isfinite(c)) throw DomainError("aberth_roots: non-finite coefficient");

    const std::size_t n = coeffs.size() - 1;
    std::vector<cplx> p(coeffs.begin(), coeffs.end());
    std::vector<cplx> dp(n);
    for (std::size_t k = 0; k < n; ++k) dp[k] = p[k] * double(n - k);

    // Initial guesses on a circle slightly inside the Cauchy root bound,
    // with an irrational angular offset to break symmetry.
    double bound = 0.0;
    for (std::size_t k = 1; k <= n; ++k)
        bound = std::max(bound, std::pow(std::abs(coeffs[k] / coeffs[0]), 1.0 / double(k)));
    const double r = 1.0 + 2.0 * bound;
    std::vector<cplx> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double th = kTwoPi * (double(i) + 0.353) / double(n) + 0.618;
        z[i] = r * cplx(std::cos(th), std::sin(th));
    }

    RootResult out;
    for (int iter = 0; iter < 400; ++iter) {
        double max_step = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx pz = horner(p, z[i]);
            const cplx dpz = horner(dp, z[i]);
            if (pz == cplx(0.0, 0.0)) continue;
            cplx w = (dpz != cplx(0.0, 0.0)) ? pz / dpz : cplx(1e-8, 1e-8);
            cplx s(0.0, 0.0);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) s += 1.0 / (z[i] - z[j]);
            const cplx denom = 1.0 - w * s;
            cplx step = (std::abs(denom) > 1e-300) ? w / denom : w;
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        if (max_step < 1e-14) break;
    }

    out.roots = z;
    out.max_residual = 0.0;
    for (const cplx& zi : z)
        out.max_residual = std::max(out.max_residual, std::abs(horner(p, zi)) / scale_at(p, zi));
    out.converged = out.max_residual < 1e-10;
    return out;
}

double max_real_root_part(const IntPolynomial& p) {
    if (p.degree() < 1) throw DomainError("max_real_root_part: degree must be >= 1");
    std::vector<double> c;
    c.reserve(p.coeffs.size());
    for (const BigInt& a : p.coeffs) c.push_back(static_cast<double>(a));
    RootResult rr = aberth_roots(c);
    double mx = -std::numeric_limits<double>::infinity();
    for (const cplx& z : rr.roots) mx = std::max(mx, z.real());
    if (!rr.converged)
        throw OracleError("max_real_root_part: root iteration residual " +
                          std::to_string(rr.max_residual) + ", best max real part " +
                          std::to_string(mx));
    return mx;
}

}  // namespace tfzero
