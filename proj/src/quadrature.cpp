#include "tfzero/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace tfzero::quad {

namespace {

// G7/K15 nodes and weights on [-1, 1] (QUADPACK dqk15 constants).
// Even-indexed Kronrod nodes are the embedded Gauss-7 nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWeightsK = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWeightsG = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelEval {
    cplx kronrod;
    double err;
};

PanelEval gk15(const Integrand& f, double a, double b, std::size_t& evals) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);

    cplx sum_k(0.0, 0.0);
    cplx sum_g(0.0, 0.0);
    for (std::size_t i = 0; i < kNodes.size(); ++i) {
        const double dx = half * kNodes[i];
        cplx fv;
        if (i + 1 == kNodes.size()) {
            fv = f(mid);
            ++evals;
        } else {
            fv = f(mid - dx) + f(mid + dx);
            evals += 2;
        }
        sum_k += kWeightsK[i] * fv;
        if (i % 2 == 1) sum_g += kWeightsG[i / 2] * fv;
    }
    const cplx ik = sum_k * half;
    const cplx ig = sum_g * half;
    return {ik, std::abs(ik - ig)};
}

}  // namespace

std::vector<double> make_edges(double a, double b,
                               const std::vector<double>& breakpoints,
                               double osc_freq) {
    if (!(a < b)) throw OracleError("make_edges: empty interval");
    std::vector<double> pts;
    pts.push_back(a);
    for (double t : breakpoints)
        if (t > a && t < b) pts.push_back(t);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    const double cap = (osc_freq > 0.0) ? 0.25 / osc_freq
                                        : std::numeric_limits<double>::infinity();
    std::vector<double> edges;
    edges.push_back(pts.front());
    for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
        const double lo = pts[s], hi = pts[s + 1];
        const double width = hi - lo;

        // Long smooth stretches are pre-split geometrically away from the
        // end closer to the origin, so decaying tails need few refinements.
        std::vector<double> seg;
        if (width > 64.0 && width > 4.0 * cap) {
            const bool from_left = std::abs(lo) <= std::abs(hi);
            double step = 16.0;
            double t = from_left ? lo : hi;
            std::vector<double> geo;
            while (true) {
                double next = from_left ? t + step : t - step;
                if (from_left ? (next >= hi - 1e-12 * width) : (next <= lo + 1e-12 * width)) break;
                geo.push_back(next);
                t = next;
                step *= 2.0;
            }
            if (!from_left) std::reverse(geo.begin(), geo.end());
            seg.push_back(lo);
            seg.insert(seg.end(), geo.begin(), geo.end());
            seg.push_back(hi);
        } else {
            seg = {lo, hi};
        }

        for (std::size_t g = 0; g + 1 < seg.size(); ++g) {
            const double w = seg[g + 1] - seg[g];
            const int parts = std::isfinite(cap) ? int(std::ceil(w / cap)) : 1;
            if (parts > 1'000'000)
                throw OracleError("make_edges: oscillation pre-split exceeds panel budget");
            for (int p = 1; p <= parts; ++p)
                edges.push_back(seg[g] + w * double(p) / double(parts));
        }
    }
    return edges;
}

Result integrate(const Integrand& f, const std::vector<double>& edges,
                 const Options& opt) {
    if (edges.size() < 2) throw OracleError("integrate: need at least one panel");
    const double total_width = edges.back() - edges.front();
    if (!(total_width > 0.0)) throw OracleError("integrate: empty interval");

    Result res;
    std::size_t panels = 0;

    struct Item {
        double a, b;
        int depth;
    };

    for (std::size_t s = 0; s + 1 < edges.size(); ++s) {
        std::vector<Item> stack;
        stack.push_back({edges[s], edges[s + 1], 0});
        while (!stack.empty()) {
            Item it = stack.back();
            stack.pop_back();
            if (++panels > opt.max_panels)
                throw OracleError("integrate: panel budget exhausted");

            const double w = it.b - it.a;
            PanelEval pe = gk15(f, it.a, it.b, res.evals);
            const double local_tol =
                std::max(opt.abs_tol * (w / total_width),
                         64.0 * std::numeric_limits<double>::epsilon() * std::abs(pe.kronrod));
            const bool forced = it.depth < opt.min_depth;
            if (!forced && (pe.err <= local_tol || it.depth >= opt.max_depth ||
                            w < 1e-15 * (1.0 + std::abs(it.a)))) {
                res.value += pe.kronrod;
                res.err += pe.err;
            } else {
                const double m = 0.5 * (it.a + it.b);
                stack.push_back({it.a, m, it.depth + 1});
                stack.push_back({m, it.b, it.depth + 1});
            }
        }
    }

    if (res.err > 4.0 * opt.abs_tol + 1e-13 * std::abs(res.value))
        throw OracleError("integrate: requested tolerance not met");
    return res;
}

}  // namespace tfzero::quad
