#include "tfzero/hurwitz.hpp"

namespace tfzero {

IntPolynomial build_An(int n) {
    if (n < 0 || n > 64) throw DomainError("build_An: n must be in 0..64");
    // Coefficient of z^{n-k} is C(n,k) (n+k)!, accumulated exactly.
    BigInt binom = 1;       // C(n,0)
    BigInt fact = 1;        // n!
    for (int i = 2; i <= n; ++i) fact *= i;
    std::vector<BigInt> coeffs;
    coeffs.reserve(std::size_t(n) + 1);
    BigInt fact_nk = fact;  // (n+k)!
    for (int k = 0; k <= n; ++k) {
        coeffs.push_back(binom * fact_nk);
        binom = binom * (n - k) / (k + 1);
        fact_nk *= (n + k + 1);
    }
    return IntPolynomial(std::move(coeffs));
}

std::vector<std::vector<BigInt>> hurwitz_matrix(const IntPolynomial& p) {
    const int n = p.degree();
    if (n < 1) throw DomainError("hurwitz_matrix: constant polynomial");
    if (p.leading() <= 0) throw DomainError("hurwitz_matrix: leading coefficient must be > 0");
    std::vector<std::vector<BigInt>> h(std::size_t(n), std::vector<BigInt>(std::size_t(n), BigInt(0)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            h[std::size_t(i - 1)][std::size_t(j - 1)] = p.at(2 * j - i);
    return h;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

namespace {

// Leading principal minors via one fraction-free elimination pass.  The
// diagonal entry at step k equals Delta_{k+1} exactly.  A zero pivot stalls
// the pass; remaining minors are then computed as independent determinants.
std::vector<BigInt> leading_minors(const std::vector<std::vector<BigInt>>& h) {
    const std::size_t n = h.size();
    std::vector<std::vector<BigInt>> m = h;
    std::vector<BigInt> minors;
    minors.reserve(n);
    BigInt prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        minors.push_back(m[k][k]);
        if (m[k][k] == 0) {
            for (std::size_t r = k + 1; r < n; ++r) {
                std::vector<std::vector<BigInt>> sub(r + 1, std::vector<BigInt>(r + 1));
                for (std::size_t i = 0; i <= r; ++i)
                    for (std::size_t j = 0; j <= r; ++j) sub[i][j] = h[i][j];
                minors.push_back(bareiss_determinant(std::move(sub)));
            }
            return minors;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return minors;
}

}  // namespace

StabilityReport routh_hurwitz(const IntPolynomial& p) {
    if (p.leading() <= 0) throw DomainError("routh_hurwitz: leading coefficient must be > 0");
    const int n = p.degree();
    StabilityReport rep;
    if (n < 1) {
        // Positive constant: no roots at all, trivially stable.
        rep.is_hurwitz = true;
        rep.necessary_ok = true;
        rep.sufficient_ok = true;
        return rep;
    }

    rep.minors = leading_minors(hurwitz_matrix(p));
    rep.is_hurwitz = true;
    for (std::size_t i = 0; i < rep.minors.size(); ++i) {
        if (rep.minors[i] <= 0) {
            rep.is_hurwitz = false;
            rep.failing_index = int(i) + 1;
            break;
        }
    }

    rep.necessary_ok = true;
    rep.sufficient_ok = true;
    // gamma = 2.1479 held as the exact rational 21479/10000.
    const BigInt gamma_num = 21479, gamma_den = 10000;
    for (int j = 1; j + 2 <= n; ++j) {
        const BigInt lhs = p.at(j) * p.at(j + 1);
        const BigInt rhs = p.at(j - 1) * p.at(j + 2);
        if (lhs - rhs <= 0) rep.necessary_ok = false;
        if (gamma_den * lhs <= gamma_num * rhs) rep.sufficient_ok = false;
    }
    return rep;
}

cplx evaluate(const IntPolynomial& p, cplx z) {
    cplx acc(0.0, 0.0);
    for (const BigInt& c : p.coeffs) acc = acc * z + cplx(double(c), 0.0);
    return acc;
}

}  // namespace tfzero
