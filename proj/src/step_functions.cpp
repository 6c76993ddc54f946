#include "tfzero/step_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tfzero {

std::optional<Rational> reconstruct_rational(double x, long long max_den) {
    if (!std::isfinite(x)) return std::nullopt;
    if (x == 0.0) return Rational{0, 1};

    // Exact continued-fraction expansion of the dyadic rational behind x.
    // x = m * 2^e with integer m; CF runs in 128-bit integers.
    int e = 0;
    const double m_d = std::frexp(x, &e);
    const long long mant = (long long)std::ldexp(m_d, 53);
    e -= 53;
    __int128 num = mant, den = 1;
    if (e >= 0) {
        if (e > 60) return std::nullopt;  // magnitude too large to matter here
        num <<= e;
    } else {
        if (e < -1075) return std::nullopt;
        int shift = -e;
        // strip common powers of two first
        while (shift > 0 && (num % 2) == 0) {
            num /= 2;
            --shift;
        }
        if (shift > 126) return std::nullopt;
        den <<= shift;
    }

    const bool negative = num < 0;
    if (negative) num = -num;

    // Convergents p_k/q_k of num/den; accept the first that reproduces x.
    __int128 a = num, b = den;
    __int128 p0 = 0, q0 = 1;  // h_{-2}/k_{-2}
    __int128 p1 = 1, q1 = 0;  // h_{-1}/k_{-1}
    while (b != 0) {
        __int128 quot = a / b;
        __int128 rem = a % b;
        __int128 p2 = quot * p1 + p0;
        __int128 q2 = quot * q1 + q0;
        if (q2 > max_den || p2 > (__int128(1) << 62)) return std::nullopt;
        if (q2 > 0 &&
            (double)((long long)p2) / (double)((long long)q2) == std::abs(x)) {
            long long pp = (long long)p2, qq = (long long)q2;
            return Rational{negative ? -pp : pp, qq};
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        a = b;
        b = rem;
    }
    return std::nullopt;
}

StepOnUnit::StepOnUnit(std::vector<double> breaks, std::vector<double> vals)
    : breakpoints(std::move(breaks)), values(std::move(vals)) {
    if (breakpoints.empty() || breakpoints.size() != values.size())
        throw DomainError("StepOnUnit: need one value per breakpoint");
    if (breakpoints.front() != 0.0)
        throw DomainError("StepOnUnit: first breakpoint must be 0");
    for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k)
        if (!(breakpoints[k] < breakpoints[k + 1]))
            throw DomainError("StepOnUnit: breakpoints must be strictly increasing");
    if (!(breakpoints.back() < 1.0))
        throw DomainError("StepOnUnit: breakpoints must stay below 1");
    for (double c : values)
        if (!(c > 0.0)) throw DomainError("StepOnUnit: values must be positive");
}

cplx box_fourier_I(const StepOnUnit& s, double xi) {
    const std::size_t n = s.values.size();
    cplx acc(0.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const double a_next = (k + 1 < n) ? s.breakpoints[k + 1] : 1.0;
        const cplx hi = std::polar(1.0, kTwoPi * a_next * xi);
        const cplx lo = std::polar(1.0, kTwoPi * s.breakpoints[k] * xi);
        acc += s.values[k] * (hi - lo);
    }
    return acc;
}

cplx step_hat(const StepOnUnit& s, double xi) {
    if (xi == 0.0) {
        double acc = 0.0;
        const std::size_t n = s.values.size();
        for (std::size_t k = 0; k < n; ++k) {
            const double a_next = (k + 1 < n) ? s.breakpoints[k + 1] : 1.0;
            acc += s.values[k] * (a_next - s.breakpoints[k]);
        }
        return cplx(acc, 0.0);
    }
    // fhat(xi) = I(-xi) / (-2 pi i xi)
    return box_fourier_I(s, -xi) / cplx(0.0, -kTwoPi * xi);
}

namespace {

bool strictly_decreasing(const std::vector<double>& v) {
    for (std::size_t k = 0; k + 1 < v.size(); ++k)
        if (!(v[k] > v[k + 1])) return false;
    return true;
}

bool strictly_increasing(const std::vector<double>& v) {
    for (std::size_t k = 0; k + 1 < v.size(); ++k)
        if (!(v[k] < v[k + 1])) return false;
    return true;
}

}  // namespace

StepZeroDecision lemma_step_decision(const StepOnUnit& s) {
    if (s.values.size() > 1 && !strictly_decreasing(s.values) && !strictly_increasing(s.values))
        throw DomainError("lemma_step_decision: values must be strictly monotone");

    // Reconstruct every interior breakpoint as a rational.
    std::vector<Rational> rats;
    for (std::size_t k = 1; k < s.breakpoints.size(); ++k) {
        auto r = reconstruct_rational(s.breakpoints[k]);
        if (!r) return {false, std::nullopt};
        rats.push_back(*r);
    }

    long long xi = 1;
    for (const Rational& r : rats) {
        if (xi > (1LL << 52) / std::max(1LL, r.q))
            throw DomainError("lemma_step_decision: witness overflows");
        xi *= r.q;
    }

    // Verify |fhat(-xi)| < 1e-12 with exactly reduced phases: at the witness
    // every a_k * xi is an integer, so each phase is computed from the exact
    // residue (p * xi) mod q.
    const std::size_t n = s.values.size();
    cplx acc(0.0, 0.0);
    auto phase_of = [&](std::size_t k) -> cplx {
        if (k == 0) return cplx(1.0, 0.0);
        if (k >= n) return cplx(1.0, 0.0);  // endpoint 1: integer phase
        const Rational& r = rats[k - 1];
        const long long res = ((r.p % r.q) * (xi % r.q)) % r.q;
        return std::polar(1.0, kTwoPi * double(res) / double(r.q));
    };
    for (std::size_t k = 0; k < n; ++k)
        acc += s.values[k] * (phase_of(k + 1) - phase_of(k));
    const double fhat = std::abs(acc) / (kTwoPi * double(xi));
    if (fhat >= 1e-12)
        throw OracleError("lemma_step_decision: witness verification failed");
    return {true, double(xi)};
}

std::optional<ConvexityCertificate> convexity_certificate(const StepOnUnit& s) {
    const std::size_t n = s.values.size();
    if (n == 0) return std::nullopt;
    const bool dec = strictly_decreasing(s.values);
    const bool inc = strictly_increasing(s.values);
    if (n > 1 && !dec && !inc) return std::nullopt;

    ConvexityCertificate cert;
    // Decreasing: weights (c_{k-1}-c_k)/c_1 for k = 2..n plus c_n/c_1.
    // Increasing: the same construction on the reversed normalization.
    const double denom = dec || n == 1 ? s.values.front() : s.values.back();
    double sum = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        const double w = std::abs(s.values[k - 1] - s.values[k]) / denom;
        if (w < 0.0) return std::nullopt;
        cert.weights.push_back(w);
        sum += w;
    }
    const double last = (dec || n == 1 ? s.values.back() : s.values.front()) / denom;
    cert.weights.push_back(last);
    sum += last;
    if (std::abs(sum - 1.0) > 1e-12) return std::nullopt;

    for (std::size_t k = 1; k < s.breakpoints.size(); ++k)
        if (!reconstruct_rational(s.breakpoints[k])) {
            cert.has_irrational_breakpoint = true;
            break;
        }
    return cert;
}

NonMonoZero nonmono_zero_solve(double alpha, double b, double c, double tol) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("nonmono_zero_solve: alpha must be in (0,1)");
    if (reconstruct_rational(alpha))
        throw DomainError("nonmono_zero_solve: alpha must be irrational");
    if (!(b > 0.0 && b < 1.0 && c > 0.0 && c < 1.0))
        throw DomainError("nonmono_zero_solve: need 0 < b, c < 1");
    if (!(tol > 0.0)) throw DomainError("nonmono_zero_solve: tol must be > 0");

    const double level = 1.0 - b - c;
    auto psi = [&](double xi) {
        return (1.0 - b - c + b * c) * std::cos(kTwoPi * alpha * xi) -
               b * c * std::cos(kTwoPi * xi);
    };

    auto try_crossing = [&](double lo, double hi) -> std::optional<NonMonoZero> {
        // Bisect psi(xi) - level to machine precision.
        double flo = psi(lo) - level;
        for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + hi); ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = psi(mid) - level;
            if ((flo <= 0.0) == (fm <= 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        const double xi = 0.5 * (lo + hi);
        const cplx den = (1.0 - c) * std::polar(1.0, kTwoPi * alpha * xi) - (1.0 - b);
        const cplx num = b - c * std::polar(1.0, kTwoPi * xi);
        if (std::abs(den) < 1e-9 || std::abs(num) < 1e-9) return std::nullopt;
        double theta = std::arg(num / den);
        if (theta <= 0.0) theta += kTwoPi;
        const double a = theta / (kTwoPi * xi);
        if (!(a > 0.0 && a < 1.0 - alpha)) return std::nullopt;
        StepOnUnit f({0.0, a, a + alpha}, {b, 1.0, c});
        if (std::abs(step_hat(f, -xi)) >= 10.0 * tol) return std::nullopt;
        return NonMonoZero{a, xi};
    };

    double horizon = 1e3 / (1.0 - alpha);
    const double xi_start = std::max(1.0, 1.0 / (1.0 - alpha)) + 1e-3;
    for (int doubling = 0; doubling <= 10; ++doubling) {
        const double step = 5e-3;
        double prev_xi = xi_start;
        double prev_g = psi(prev_xi) - level;
        for (double xi = xi_start + step; xi <= horizon; xi += step) {
            const double g = psi(xi) - level;
            if ((prev_g <= 0.0) != (g <= 0.0)) {
                if (auto hit = try_crossing(prev_xi, xi)) return *hit;
            }
            prev_xi = xi;
            prev_g = g;
        }
        horizon *= 2.0;
    }
    throw OracleError("nonmono_zero_solve: no crossing found within scan horizon");
}

AlphaStepSpec::AlphaStepSpec(double alpha_, CoeffMode mode_, std::string symbol,
                             int window_start_, std::vector<double> window_values_)
    : alpha(alpha_),
      alpha_symbol(std::move(symbol)),
      mode(mode_),
      window_start(window_start_),
      window_values(std::move(window_values_)) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("AlphaStepSpec: alpha must be in (0,1)");
    if (reconstruct_rational(alpha))
        throw DomainError("AlphaStepSpec: alpha p/q with q <= 1e6 is rejected as rational");
    for (double v : window_values)
        if (!(v > 0.0)) throw DomainError("AlphaStepSpec: coefficients must be positive");
    if (mode == CoeffMode::WindowOnly && window_values.empty())
        throw DomainError("AlphaStepSpec: WindowOnly requires an explicit window");
    if (mode == CoeffMode::MonotoneBounded) {
        // The explicit window, if any, must not break global monotonicity.
        for (long long k = window_start - 1;
             k <= window_start + (long long)window_values.size(); ++k)
            if (!(coeff(k) > coeff(k + 1)))
                throw DomainError("AlphaStepSpec: monotone mode needs strictly decreasing c_k");
    }
}

double AlphaStepSpec::coeff(long long k) const {
    if (!window_values.empty() && k >= window_start &&
        k < window_start + (long long)window_values.size())
        return window_values[std::size_t(k - window_start)];
    switch (mode) {
        case CoeffMode::MonotoneBounded:
            return 2.0 - std::tanh(double(k));
        case CoeffMode::LpDecay:
            return std::pow(2.0, -double(std::abs(k)));
        case CoeffMode::WindowOnly:
            throw DomainError("AlphaStepSpec: coefficient window unavailable at k=" +
                              std::to_string(k));
    }
    throw DomainError("AlphaStepSpec: bad mode");
}

double AlphaStepSpec::value_at(double t) const {
    const double j = std::floor(t);
    const long long jj = (long long)j;
    const double u = t - j;
    return (u < alpha) ? coeff(2 * jj) : coeff(2 * jj + 1);
}

double parse_alpha(const std::string& text, std::string* symbol_out) {
    auto set_sym = [&](const char* s) {
        if (symbol_out) *symbol_out = s;
    };
    if (text == "sqrt2/2" || text == "1/sqrt2") {
        set_sym("sqrt2/2");
        return std::sqrt(2.0) / 2.0;
    }
    if (text == "sqrt3/3" || text == "1/sqrt3") {
        set_sym("sqrt3/3");
        return std::sqrt(3.0) / 3.0;
    }
    if (text == "sqrt5/5" || text == "1/sqrt5") {
        set_sym("sqrt5/5");
        return std::sqrt(5.0) / 5.0;
    }
    if (symbol_out) symbol_out->clear();
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw DomainError("parse_alpha: cannot parse '" + text + "'");
    }
}

namespace {

struct InnerPieces {
    // Up to three pieces (lo, hi, value) on (0,1) plus the leading phase.
    struct Piece {
        double lo, hi, value;
    };
    std::vector<Piece> pieces;
    long long j = 0;
    double u = 0.0;
};

InnerPieces inner_decomposition(const AlphaStepSpec& spec, double x) {
    InnerPieces out;
    const double jf = std::floor(x);
    out.j = (long long)jf;
    out.u = x - jf;
    const double alpha = spec.alpha;
    const long long j = out.j;
    if (out.u < alpha) {
        out.pieces = {{0.0, alpha - out.u, spec.coeff(2 * j)},
                      {alpha - out.u, 1.0 - out.u, spec.coeff(2 * j + 1)},
                      {1.0 - out.u, 1.0, spec.coeff(2 * j + 2)}};
    } else {
        out.pieces = {{0.0, 1.0 - out.u, spec.coeff(2 * j + 1)},
                      {1.0 - out.u, 1.0 - out.u + alpha, spec.coeff(2 * j + 2)},
                      {1.0 - out.u + alpha, 1.0, spec.coeff(2 * j + 3)}};
    }
    // Drop zero-length pieces (u = 0 or u = alpha exactly).
    std::erase_if(out.pieces, [](const InnerPieces::Piece& p) { return !(p.lo < p.hi); });
    return out;
}

}  // namespace

cplx stft_box_closed_form(const AlphaStepSpec& spec, double x, double xi) {
    const InnerPieces inner = inner_decomposition(spec, x);
    cplx acc(0.0, 0.0);
    for (const auto& p : inner.pieces) {
        if (xi == 0.0) {
            acc += p.value * (p.hi - p.lo);
        } else {
            // int_lo^hi e^{-2 pi i xi t} dt
            const cplx elo = std::polar(1.0, -kTwoPi * xi * p.lo);
            const cplx ehi = std::polar(1.0, -kTwoPi * xi * p.hi);
            acc += p.value * (elo - ehi) / cplx(0.0, kTwoPi * xi);
        }
    }
    const double shift = double(inner.j) + inner.u;
    return std::polar(1.0, -kTwoPi * shift * xi) * acc;
}

StepOnUnit induced_inner_step(const AlphaStepSpec& spec, double x) {
    const InnerPieces inner = inner_decomposition(spec, x);
    std::vector<double> breaks, vals;
    for (const auto& p : inner.pieces) {
        breaks.push_back(p.lo);
        vals.push_back(p.value);
    }
    return StepOnUnit(std::move(breaks), std::move(vals));
}

ZeroReport counterexample_verify(CounterexampleMode mode, double alpha,
                                 const GridSpec& grid) {
    AlphaStepSpec spec(alpha,
                       mode == CounterexampleMode::Monotone ? CoeffMode::MonotoneBounded
                                                            : CoeffMode::LpDecay);
    if (mode == CounterexampleMode::Monotone) {
        ZeroReport rep = scan(
            [&](PhaseSpacePoint z) { return stft_box_closed_form(spec, z.x, z.xi); }, grid,
            1e-12);
        bool all_certified = true;
        for (int i = 0; i < grid.nx; ++i) {
            const StepOnUnit inner = induced_inner_step(spec, grid.x_at(i));
            const auto cert = convexity_certificate(inner);
            if (!cert || !cert->has_irrational_breakpoint) {
                all_certified = false;
                break;
            }
        }
        if (all_certified) rep.certificates.push_back("analytic per-x");
        return rep;
    }

    // Lp mode: find a non-monotone triple c_{2j}, c_{2j+1}, c_{2j+2} (or the
    // odd-shifted variant), then solve for the zero inside that cell.
    auto report_zero = [&](double x, double xi) {
        ZeroReport rep;
        rep.grid = grid;
        rep.certificates.push_back("grid-evidence");
        const double residual = std::abs(stft_box_closed_form(spec, x, xi));
        rep.zeros.push_back({PhaseSpacePoint(x, xi), residual});
        rep.min_modulus = residual;
        rep.argmin = PhaseSpacePoint(x, xi);
        rep.refined = true;
        return rep;
    };

    for (long long j0 = -8; j0 <= 8; ++j0) {
        const double c0 = spec.coeff(2 * j0), c1 = spec.coeff(2 * j0 + 1),
                     c2 = spec.coeff(2 * j0 + 2), c3 = spec.coeff(2 * j0 + 3);
        if (c0 < c1 && c2 < c1) {
            // Even triple dominates: inner step [0, alpha-u, 1-u] has middle
            // length 1 - alpha, so solve with alpha' = 1 - alpha; a' = alpha - u.
            NonMonoZero nz = nonmono_zero_solve(1.0 - alpha, c0 / c1, c2 / c1, 1e-10);
            const double x = double(j0) + (alpha - nz.a);
            return report_zero(x, -nz.xi);
        }
        if (c1 < c2 && c3 < c2) {
            // Odd triple: inner step [0, 1-u, 1-u+alpha], middle length alpha;
            // a = 1 - u.
            NonMonoZero nz = nonmono_zero_solve(alpha, c1 / c2, c3 / c2, 1e-10);
            const double x = double(j0) + (1.0 - nz.a);
            return report_zero(x, -nz.xi);
        }
    }
    throw OracleError("counterexample_verify: no non-monotone triple found");
}

}  // namespace tfzero
