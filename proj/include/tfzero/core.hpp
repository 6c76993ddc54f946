// Core value types shared by every module: phase-space points, grids,
// transform tags, and the error hierarchy.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tfzero {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Thrown when a constructor or operation receives parameters outside its
// mathematical domain (e.g. Re a <= 0 for a Gaussian decay parameter).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Thrown when the quadrature engine cannot meet the requested tolerance
// (truncation budget failure, too many panels, non-convergence).
class OracleError : public std::runtime_error {
public:
    explicit OracleError(const std::string& what) : std::runtime_error(what) {}
};

// A point z = (x, xi) in the time-frequency plane.
struct PhaseSpacePoint {
    double x = 0.0;
    double xi = 0.0;

    PhaseSpacePoint() = default;
    PhaseSpacePoint(double x_, double xi_) : x(x_), xi(xi_) {
        if (!std::isfinite(x) || !std::isfinite(xi))
            throw DomainError("PhaseSpacePoint: coordinates must be finite");
    }

    friend bool operator==(const PhaseSpacePoint& a, const PhaseSpacePoint& b) {
        return a.x == b.x && a.xi == b.xi;
    }
};

// Identify (x, xi) with x + i*xi when moving to the Bargmann/Fock picture.
inline cplx to_complex(const PhaseSpacePoint& z) { return cplx(z.x, z.xi); }
inline PhaseSpacePoint from_complex(cplx z) { return PhaseSpacePoint(z.real(), z.imag()); }

// Rectangular evaluation grid: nx-by-nxi points, endpoints included.
struct GridSpec {
    double x0 = -1.0, x1 = 1.0;
    double xi0 = -1.0, xi1 = 1.0;
    int nx = 2, nxi = 2;

    GridSpec() = default;
    GridSpec(double x0_, double x1_, int nx_, double xi0_, double xi1_, int nxi_)
        : x0(x0_), x1(x1_), xi0(xi0_), xi1(xi1_), nx(nx_), nxi(nxi_) {
        if (!(std::isfinite(x0) && std::isfinite(x1) && std::isfinite(xi0) && std::isfinite(xi1)))
            throw DomainError("GridSpec: ranges must be finite");
        if (nx < 2 || nxi < 2)
            throw DomainError("GridSpec: need at least 2 points per axis");
        if (!(x0 < x1) || !(xi0 < xi1))
            throw DomainError("GridSpec: empty range");
    }

    double x_at(int i) const { return x0 + (x1 - x0) * double(i) / double(nx - 1); }
    double xi_at(int j) const { return xi0 + (xi1 - xi0) * double(j) / double(nxi - 1); }
};

enum class TransformKind { Wigner, Ambiguity, STFT };

inline const char* to_string(TransformKind k) {
    switch (k) {
        case TransformKind::Wigner: return "wigner";
        case TransformKind::Ambiguity: return "ambiguity";
        case TransformKind::STFT: return "stft";
    }
    return "?";
}

}  // namespace tfzero
