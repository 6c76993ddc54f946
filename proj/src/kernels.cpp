#include "tfzero/kernels.hpp"

#include <cmath>

#include <json.hpp>

#include "tfzero/hurwitz.hpp"
#include "tfzero/special_functions.hpp"

namespace tfzero {

cplx amb_gauss(cplx a, cplx b, PhaseSpacePoint z) {
    if (!(a.real() > 0.0) || !(b.real() > 0.0))
        throw DomainError("amb_gauss: Re a and Re b must be > 0");
    const cplx bc = std::conj(b);
    const cplx s = a + bc;
    const cplx w = -kPi * (a * bc * z.x * z.x + z.xi * z.xi) / s +
                   cplx(0.0, kPi) * ((a - bc) / s) * z.x * z.xi;
    return std::pow(s, -0.5) * std::exp(w);
}

cplx amb_onesided(double a, double b, PhaseSpacePoint z) {
    if (!(a > 0.0 && b > 0.0)) throw DomainError("amb_onesided: a, b must be > 0");
    const double eta = (z.x >= 0.0) ? std::exp(-a * z.x) : std::exp(b * z.x);
    const cplx phase = std::polar(1.0, -kPi * z.xi * std::abs(z.x));
    return eta * phase / cplx(a + b, kTwoPi * z.xi);
}

namespace {

// h(s) = e^{-s |x|} / s and its derivatives in s.
cplx h0(cplx s, double ax) { return std::exp(-s * ax) / s; }
cplx h1(cplx s, double ax) { return -std::exp(-s * ax) * (ax / s + 1.0 / (s * s)); }
cplx h2(cplx s, double ax) {
    return std::exp(-s * ax) * (ax * ax / s + 2.0 * ax / (s * s) + 2.0 / (s * s * s));
}
cplx h3(cplx s, double ax) {
    return -std::exp(-s * ax) * (ax * ax * ax / s + 3.0 * ax * ax / (s * s) +
                                 6.0 * ax / (s * s * s) + 6.0 / (s * s * s * s));
}

}  // namespace

cplx amb_conv_exp(double a, double b, int sign, PhaseSpacePoint z) {
    if (!(a > 0.0 && b > 0.0)) throw DomainError("amb_conv_exp: a, b must be > 0");
    if (sign != 1 && sign != -1) throw DomainError("amb_conv_exp: sign must be +-1");
    if (sign > 0 && a == b)
        throw DomainError("amb_conv_exp: degenerate denominator at a = b, sign +1");

    const double ax = std::abs(z.x);
    const cplx u(a, kPi * z.xi);
    const cplx w = (sign > 0) ? cplx(b, kPi * z.xi) : cplx(b, -kPi * z.xi);
    const cplx denom = w * w - u * u;
    if (std::abs(denom) < 1e-10) {
        // (h(u) - h(w)) / (w^2 - u^2) -> -(h'(u) + h''(u) d/2 + h'''(u) d^2/6) / (w + u)
        const cplx d = w - u;
        const cplx series = h1(u, ax) + 0.5 * h2(u, ax) * d + h3(u, ax) * d * d / 6.0;
        return -series / (2.0 * (w + u));
    }
    return (h0(u, ax) - h0(w, ax)) / (2.0 * denom);
}

cplx amb_sym_exp(double a, PhaseSpacePoint z) {
    if (!(a > 0.0)) throw DomainError("amb_sym_exp: a must be > 0");
    const double ax = std::abs(z.x);
    const double eps = kPi * z.xi;
    const double damp = std::exp(-a * ax);
    if (std::abs(eps) < 1e-5) {
        const double corr = eps * eps * (a * ax * ax * ax / 6.0 + ax * ax / 2.0);
        return cplx(damp * a * (a * ax + 1.0 - corr) / (a * a + eps * eps), 0.0);
    }
    const double s = eps * ax;
    const double num = a * (a * std::sin(s) + eps * std::cos(s));
    return cplx(damp * num / (eps * (a * a + eps * eps)), 0.0);
}

cplx amb_sym_exp_zero_equation(double a, double x, double xi) {
    if (!(a > 0.0)) throw DomainError("amb_sym_exp_zero_equation: a must be > 0");
    if (xi == 0.0) throw DomainError("amb_sym_exp_zero_equation: xi must be nonzero");
    const cplx lhs = std::polar(1.0, -kTwoPi * xi * std::abs(x));
    const cplx rhs = cplx(a, kPi * xi) / cplx(a, -kPi * xi);
    return lhs - rhs;
}

cplx amb_teta_cross(double a, PhaseSpacePoint z) {
    if (!(a > 0.0)) throw DomainError("amb_teta_cross: a must be > 0");
    const cplx q(a, kPi * z.xi);
    const cplx q2 = 4.0 * q * q;
    if (z.x >= 0.0) return std::exp(-q * z.x) * (2.0 * z.x * q + 1.0) / q2;
    return std::exp(q * z.x) / q2;
}

cplx amb_gumbel(double a, double b, double c, double d, PhaseSpacePoint z) {
    if (!(a > 0.0 && b > 0.0 && c > 0.0 && d > 0.0))
        throw DomainError("amb_gumbel: parameters must be > 0");
    const double nu = b * std::exp(0.5 * z.x) + d * std::exp(-0.5 * z.x);
    const cplx expo(-(a + c), kTwoPi * z.xi);
    return std::exp(0.5 * (a - c) * z.x) * std::exp(expo * std::log(nu)) *
           gamma_complex(cplx(a + c, -kTwoPi * z.xi));
}

cplx amb_monomial(int n, PhaseSpacePoint z) {
    if (n < 0) throw DomainError("amb_monomial: n must be >= 0");
    const cplx two(2.0, kTwoPi * z.xi);
    const double ax = std::abs(z.x);
    const IntPolynomial an = build_An(n);
    const cplx damp = std::exp(cplx(-ax, -kPi * z.xi * ax));
    return damp * std::pow(two, -double(2 * n + 1)) * tfzero::evaluate(an, ax * two);
}

cplx amb_monomial_bessel(int n, PhaseSpacePoint z) {
    if (n < 0) throw DomainError("amb_monomial_bessel: n must be >= 0");
    if (z.x == 0.0) throw DomainError("amb_monomial_bessel: x = 0 (use amb_monomial)");
    const double ax = std::abs(z.x);
    const cplx one(1.0, kPi * z.xi);
    double fact = 1.0;
    for (int k = 2; k <= n; ++k) fact *= k;
    const cplx base = ax / (2.0 * one);
    return fact / std::sqrt(kPi) * std::pow(base, double(n) + 0.5) *
           bessel_k_half(HalfIntOrder(n), ax * one);
}

const char* to_string(FormulaId id) {
    switch (id) {
        case FormulaId::Gauss: return "gauss";
        case FormulaId::OneSided: return "one_sided";
        case FormulaId::ConvSameSign: return "conv_same_sign";
        case FormulaId::ConvMixedSign: return "conv_mixed_sign";
        case FormulaId::TEtaCross: return "t_eta_cross";
        case FormulaId::Gumbel: return "gumbel";
        case FormulaId::MonomialSelf: return "monomial_self";
    }
    return "?";
}

FormulaId formula_id_from_string(const std::string& name) {
    if (name == "gauss") return FormulaId::Gauss;
    if (name == "one_sided") return FormulaId::OneSided;
    if (name == "conv_same_sign") return FormulaId::ConvSameSign;
    if (name == "conv_mixed_sign") return FormulaId::ConvMixedSign;
    if (name == "t_eta_cross") return FormulaId::TEtaCross;
    if (name == "gumbel") return FormulaId::Gumbel;
    if (name == "monomial_self") return FormulaId::MonomialSelf;
    throw DomainError("formula_id_from_string: unknown formula '" + name + "'");
}

KernelPair KernelPair::gauss(cplx a, cplx b) {
    if (!(a.real() > 0.0) || !(b.real() > 0.0))
        throw DomainError("KernelPair::gauss: Re a, Re b must be > 0");
    KernelPair p;
    p.id = FormulaId::Gauss;
    p.ga = a;
    p.gb = b;
    return p;
}

KernelPair KernelPair::one_sided(double a, double b) {
    if (!(a > 0.0 && b > 0.0)) throw DomainError("KernelPair::one_sided: a, b must be > 0");
    KernelPair p;
    p.id = FormulaId::OneSided;
    p.a = a;
    p.b = b;
    return p;
}

KernelPair KernelPair::conv(double a, double b, int sign) {
    if (!(a > 0.0 && b > 0.0)) throw DomainError("KernelPair::conv: a, b must be > 0");
    if (sign != 1 && sign != -1) throw DomainError("KernelPair::conv: sign must be +-1");
    if (sign > 0 && a == b) throw DomainError("KernelPair::conv: same-sign needs a != b");
    KernelPair p;
    p.id = (sign > 0) ? FormulaId::ConvSameSign : FormulaId::ConvMixedSign;
    p.a = a;
    p.b = b;
    p.sign = sign;
    return p;
}

KernelPair KernelPair::t_eta_cross(double a) {
    if (!(a > 0.0)) throw DomainError("KernelPair::t_eta_cross: a must be > 0");
    KernelPair p;
    p.id = FormulaId::TEtaCross;
    p.a = a;
    return p;
}

KernelPair KernelPair::gumbel(double a, double b, double c, double d) {
    if (!(a > 0.0 && b > 0.0 && c > 0.0 && d > 0.0))
        throw DomainError("KernelPair::gumbel: parameters must be > 0");
    KernelPair p;
    p.id = FormulaId::Gumbel;
    p.a = a;
    p.b = b;
    p.c = c;
    p.d = d;
    return p;
}

KernelPair KernelPair::monomial_self(int n) {
    if (n < 0) throw DomainError("KernelPair::monomial_self: n must be >= 0");
    KernelPair p;
    p.id = FormulaId::MonomialSelf;
    p.n = n;
    return p;
}

FunctionSpec KernelPair::f() const {
    switch (id) {
        case FormulaId::Gauss: return GaussianSpec(ga);
        case FormulaId::OneSided: return OneSidedExpSpec(a, false);
        case FormulaId::ConvSameSign:
        case FormulaId::ConvMixedSign: return ConvExpExpSpec(a, b, sign);
        case FormulaId::TEtaCross: return MonomialExpSpec(1, a);
        case FormulaId::Gumbel: return GumbelExpSpec(a, b);
        case FormulaId::MonomialSelf: return MonomialExpSpec(n, 1.0);
    }
    throw DomainError("KernelPair::f: bad id");
}

FunctionSpec KernelPair::g() const {
    switch (id) {
        case FormulaId::Gauss: return GaussianSpec(gb);
        case FormulaId::OneSided: return OneSidedExpSpec(b, false);
        case FormulaId::ConvSameSign:
        case FormulaId::ConvMixedSign: return ConvExpExpSpec(a, b, sign);
        case FormulaId::TEtaCross: return OneSidedExpSpec(a, false);
        case FormulaId::Gumbel: return GumbelExpSpec(c, d);
        case FormulaId::MonomialSelf: return MonomialExpSpec(n, 1.0);
    }
    throw DomainError("KernelPair::g: bad id");
}

cplx evaluate(const KernelPair& pair, PhaseSpacePoint z) {
    switch (pair.id) {
        case FormulaId::Gauss: return amb_gauss(pair.ga, pair.gb, z);
        case FormulaId::OneSided: return amb_onesided(pair.a, pair.b, z);
        case FormulaId::ConvSameSign: return amb_conv_exp(pair.a, pair.b, +1, z);
        case FormulaId::ConvMixedSign: return amb_conv_exp(pair.a, pair.b, -1, z);
        case FormulaId::TEtaCross: return amb_teta_cross(pair.a, z);
        case FormulaId::Gumbel: return amb_gumbel(pair.a, pair.b, pair.c, pair.d, z);
        case FormulaId::MonomialSelf: return amb_monomial(pair.n, z);
    }
    throw DomainError("evaluate: bad formula id");
}

double analytic_modulus(const KernelPair& pair, PhaseSpacePoint z) {
    const double ax = std::abs(z.x);
    switch (pair.id) {
        case FormulaId::Gauss: {
            const cplx bc = std::conj(pair.gb);
            const cplx s = pair.ga + bc;
            const cplx w = -kPi * (pair.ga * bc * z.x * z.x + z.xi * z.xi) / s;
            const double re = w.real() - kPi * z.x * z.xi * ((pair.ga - bc) / s).imag();
            return std::exp(re) / std::sqrt(std::abs(s));
        }
        case FormulaId::OneSided: {
            const double eta = (z.x >= 0.0) ? std::exp(-pair.a * z.x) : std::exp(pair.b * z.x);
            return eta / std::hypot(pair.a + pair.b, kTwoPi * z.xi);
        }
        case FormulaId::ConvSameSign:
        case FormulaId::ConvMixedSign: {
            const double e = kPi * z.xi;
            const double mu = std::hypot(pair.a, e);
            const double mw = std::hypot(pair.b, e);
            const double arg_u = std::atan2(e, pair.a);
            const double arg_w = (pair.sign > 0) ? std::atan2(e, pair.b)
                                                 : std::atan2(-e, pair.b);
            const double ewi = (pair.sign > 0) ? e : -e;
            // A = e^{-u ax}/u, B = e^{-w ax}/w in polar pieces.
            const double ra = std::exp(-pair.a * ax) / mu;
            const double rb = std::exp(-pair.b * ax) / mw;
            const double pa = -e * ax - arg_u;
            const double pb = -ewi * ax - arg_w;
            const double num =
                std::sqrt(std::max(0.0, ra * ra + rb * rb - 2.0 * ra * rb * std::cos(pa - pb)));
            // |w^2 - u^2| in polar pieces as well.
            const cplx u(pair.a, e), w(pair.b, ewi);
            const double den = 2.0 * std::abs(w - u) * std::abs(w + u);
            if (den < 1e-10) return std::abs(amb_conv_exp(pair.a, pair.b, pair.sign, z));
            return num / den;
        }
        case FormulaId::TEtaCross: {
            const double m2 = pair.a * pair.a + kPi * kPi * z.xi * z.xi;
            if (z.x >= 0.0)
                return std::exp(-pair.a * z.x) *
                       std::hypot(2.0 * z.x * pair.a + 1.0, 2.0 * z.x * kPi * z.xi) /
                       (4.0 * m2);
            return std::exp(pair.a * z.x) / (4.0 * m2);
        }
        case FormulaId::Gumbel: {
            const double nu = pair.b * std::exp(0.5 * z.x) + pair.d * std::exp(-0.5 * z.x);
            return std::exp(0.5 * (pair.a - pair.c) * z.x) *
                   std::pow(nu, -(pair.a + pair.c)) *
                   std::abs(gamma_complex(cplx(pair.a + pair.c, -kTwoPi * z.xi)));
        }
        case FormulaId::MonomialSelf: {
            if (z.x == 0.0) {
                double fact = 1.0;
                for (int k = 2; k <= 2 * pair.n; ++k) fact *= k;
                return fact * std::pow(std::hypot(2.0, kTwoPi * z.xi), -double(2 * pair.n + 1));
            }
            return std::abs(amb_monomial_bessel(pair.n, z));
        }
    }
    throw DomainError("analytic_modulus: bad formula id");
}

std::vector<KernelPair> standard_zero_free_kernels() {
    return {
        KernelPair::gauss(cplx(1.0, 0.0), cplx(1.0, 0.0)),
        KernelPair::one_sided(1.0, 2.0),
        KernelPair::conv(1.0, 2.0, +1),
        KernelPair::conv(1.0, 2.0, -1),
        KernelPair::t_eta_cross(1.0),
        KernelPair::gumbel(1.0, 1.0, 1.0, 1.0),
        KernelPair::monomial_self(2),
    };
}

namespace {
using ordered_json = nlohmann::ordered_json;

ordered_json cnum(cplx v) { return ordered_json{{"re", v.real()}, {"im", v.imag()}}; }

cplx cnum_from(const ordered_json& j) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    return cplx(j.at("re").get<double>(), j.value("im", 0.0));
}
}  // namespace

std::string kernel_pair_to_json(const KernelPair& pair) {
    ordered_json j;
    j["formula"] = to_string(pair.id);
    switch (pair.id) {
        case FormulaId::Gauss:
            j["a"] = cnum(pair.ga);
            j["b"] = cnum(pair.gb);
            break;
        case FormulaId::OneSided:
            j["a"] = pair.a;
            j["b"] = pair.b;
            break;
        case FormulaId::ConvSameSign:
        case FormulaId::ConvMixedSign:
            j["a"] = pair.a;
            j["b"] = pair.b;
            break;
        case FormulaId::TEtaCross:
            j["a"] = pair.a;
            break;
        case FormulaId::Gumbel:
            j["a"] = pair.a;
            j["b"] = pair.b;
            j["c"] = pair.c;
            j["d"] = pair.d;
            break;
        case FormulaId::MonomialSelf:
            j["n"] = pair.n;
            break;
    }
    return j.dump();
}

KernelPair kernel_pair_from_json(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw DomainError(std::string("kernel_pair_from_json: parse error: ") + e.what());
    }
    const FormulaId id = formula_id_from_string(j.at("formula").get<std::string>());
    switch (id) {
        case FormulaId::Gauss:
            return KernelPair::gauss(cnum_from(j.at("a")), cnum_from(j.at("b")));
        case FormulaId::OneSided:
            return KernelPair::one_sided(j.at("a").get<double>(), j.at("b").get<double>());
        case FormulaId::ConvSameSign:
            return KernelPair::conv(j.at("a").get<double>(), j.at("b").get<double>(), +1);
        case FormulaId::ConvMixedSign:
            return KernelPair::conv(j.at("a").get<double>(), j.at("b").get<double>(), -1);
        case FormulaId::TEtaCross:
            return KernelPair::t_eta_cross(j.at("a").get<double>());
        case FormulaId::Gumbel:
            return KernelPair::gumbel(j.at("a").get<double>(), j.at("b").get<double>(),
                                      j.at("c").get<double>(), j.at("d").get<double>());
        case FormulaId::MonomialSelf:
            return KernelPair::monomial_self(j.at("n").get<int>());
    }
    throw DomainError("kernel_pair_from_json: bad formula");
}

}  // namespace tfzero
