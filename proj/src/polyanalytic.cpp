#include "tfzero/polyanalytic.hpp"

#include <algorithm>
#include <cmath>

namespace tfzero {

ComplexPolynomial::ComplexPolynomial(std::vector<cplx> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) coeffs.push_back(cplx(0.0, 0.0));
    // Trim exact-zero leading coefficients so degree() is honest.
    while (coeffs.size() > 1 && coeffs.back() == cplx(0.0, 0.0)) coeffs.pop_back();
}

int ComplexPolynomial::degree() const {
    if (coeffs.size() == 1 && coeffs[0] == cplx(0.0, 0.0)) return -1;
    return int(coeffs.size()) - 1;
}

cplx ComplexPolynomial::eval(cplx z) const {
    cplx acc(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

ComplexPolynomial ComplexPolynomial::derivative() const {
    if (coeffs.size() <= 1) return ComplexPolynomial({cplx(0.0, 0.0)});
    std::vector<cplx> d(coeffs.size() - 1);
    for (std::size_t k = 1; k < coeffs.size(); ++k) d[k - 1] = double(k) * coeffs[k];
    return ComplexPolynomial(std::move(d));
}

int PolyanalyticPolynomial::deg_z() const {
    int deg = -1;
    for (std::size_t j = 0; j < c.size(); ++j)
        for (const cplx& v : c[j])
            if (v != cplx(0.0, 0.0)) deg = std::max(deg, int(j));
    return deg;
}

int PolyanalyticPolynomial::deg_conj() const {
    int deg = -1;
    for (const auto& row : c)
        for (std::size_t k = 0; k < row.size(); ++k)
            if (row[k] != cplx(0.0, 0.0)) deg = std::max(deg, int(k));
    return deg;
}

int PolyanalyticPolynomial::total_degree() const {
    int deg = -1;
    for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t k = 0; k < c[j].size(); ++k)
            if (c[j][k] != cplx(0.0, 0.0)) deg = std::max(deg, int(j + k));
    return deg;
}

cplx PolyanalyticPolynomial::eval(cplx z) const {
    const cplx zc = std::conj(z);
    cplx acc(0.0, 0.0);
    cplx zj(1.0, 0.0);
    for (std::size_t j = 0; j < c.size(); ++j) {
        cplx inner(0.0, 0.0);
        for (auto it = c[j].rbegin(); it != c[j].rend(); ++it) inner = inner * zc + *it;
        acc += zj * inner;
        zj *= z;
    }
    return acc;
}

cplx PolyanalyticPolynomial::at(int j, int k) const {
    if (j < 0 || k < 0 || std::size_t(j) >= c.size() || std::size_t(k) >= c[std::size_t(j)].size())
        return cplx(0.0, 0.0);
    return c[std::size_t(j)][std::size_t(k)];
}

namespace {
cplx ipow(cplx base, int e) {
    cplx r(1.0, 0.0);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}
}  // namespace

cplx hermite_window_stft(int n, const ComplexPolynomial& bf, cplx z) {
    if (n < 0) throw DomainError("hermite_window_stft: n must be >= 0");
    const double x = z.real(), xi = z.imag();
    double norm = 1.0;
    for (int k = 1; k <= n; ++k) norm *= kPi * double(k);
    const cplx zc = std::conj(z);

    cplx sum(0.0, 0.0);
    ComplexPolynomial d = bf;
    double binom = 1.0;
    for (int k = 0; k <= n; ++k) {
        sum += binom * ipow(-kPi * zc, n - k) * d.eval(z);
        d = d.derivative();
        binom = binom * double(n - k) / double(k + 1);
    }
    return (1.0 / std::sqrt(norm)) * std::polar(1.0, kPi * x * xi) *
           std::exp(-0.5 * kPi * std::norm(z)) * sum;
}

PolyanalyticPolynomial polyanalytic_bargmann(const ComplexPolynomial& P,
                                             const ComplexPolynomial& Q) {
    if (P.is_zero() || Q.is_zero())
        throw DomainError("polyanalytic_bargmann: P and Q must be nonzero");
    const int dp = P.degree(), dq = Q.degree();
    PolyanalyticPolynomial out;
    out.c.assign(std::size_t(dq) + 1, std::vector<cplx>(std::size_t(dp) + 1, cplx(0.0, 0.0)));

    // Q^{(k)}(z) has coefficients q_{j+k} (j+k)!/j! at z^j;
    // conj(P^{(k)}(-pi z)) = sum_m conj(p_{m+k}) (m+k)!/m! (-pi)^m conj(z)^m.
    double kfact = 1.0;
    for (int k = 0; k <= std::min(dp, dq); ++k) {
        if (k > 0) kfact *= double(k);
        for (int j = 0; j + k <= dq; ++j) {
            double qfall = 1.0;  // (j+k)! / j!
            for (int t = j + 1; t <= j + k; ++t) qfall *= double(t);
            const cplx qc = Q.coeffs[std::size_t(j + k)] * qfall;
            if (qc == cplx(0.0, 0.0)) continue;
            for (int m = 0; m + k <= dp; ++m) {
                double pfall = 1.0;  // (m+k)! / m!
                for (int t = m + 1; t <= m + k; ++t) pfall *= double(t);
                const cplx pc = std::conj(P.coeffs[std::size_t(m + k)]) * pfall *
                                std::pow(-kPi, double(m));
                out.c[std::size_t(j)][std::size_t(m)] += qc * pc / kfact;
            }
        }
    }
    return out;
}

bool balk_degree_check(const PolyanalyticPolynomial& qp) {
    const int s = qp.total_degree();
    if (s < 0) throw DomainError("balk_degree_check: zero polynomial");
    const int nz = qp.deg_z(), nc = qp.deg_conj();
    return s > 2 * std::min(nz, nc);
}

std::pair<cplx, cplx> degree1_roots(cplx a, cplx b) {
    const cplx c = std::sqrt(kPi) * (std::conj(b) - std::conj(a));
    const double rho = std::abs(c);
    const double theta = (rho > 0.0) ? std::arg(c) : 0.0;
    auto back = [&](double xi_root) {
        const cplx zeta = xi_root * std::polar(1.0, -theta);
        return zeta / std::sqrt(kPi) - a;
    };
    const double disc = std::sqrt(rho * rho + 4.0);
    return {back(0.5 * (-rho + disc)), back(0.5 * (-rho - disc))};
}

ZeroReport polyanalytic_zero_search(const PolyanalyticPolynomial& qp,
                                    const GridSpec& box, double zero_tol) {
    return scan([&qp](PhaseSpacePoint z) { return qp.eval(cplx(z.x, z.xi)); }, box,
                zero_tol);
}

ZeroReport polyanalytic_zero_search_auto(const PolyanalyticPolynomial& qp,
                                         double zero_tol) {
    const int s = qp.total_degree();
    if (s < 0) throw DomainError("polyanalytic_zero_search_auto: zero polynomial");
    double lead = 0.0, total = 0.0;
    for (std::size_t j = 0; j < qp.c.size(); ++j)
        for (std::size_t k = 0; k < qp.c[j].size(); ++k) {
            const double m = std::abs(qp.c[j][k]);
            total += m;
            if (int(j + k) == s) lead = std::max(lead, m);
        }
    double r = 1.0 + total / lead;
    ZeroReport best;
    for (int attempt = 0; attempt <= 4; ++attempt) {
        const GridSpec box(-r, r, 161, -r, r, 161);
        ZeroReport rep = polyanalytic_zero_search(qp, box, zero_tol);
        if (!rep.zeros.empty()) return rep;
        best = rep;
        r *= 2.0;
    }
    return best;
}

}  // namespace tfzero
