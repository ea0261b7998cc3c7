#pragma once

// Complex error-function stack: the Faddeeva function w(z) on the closed
// upper half plane, the tilted half-Gaussian integral Psi, and the Fourier
// factor of a Gaussian restricted to a half line.  These are the scalar
// kernels behind every half-space momentum transform in this library.
//
// Reference values for all three functions are generated to 25 digits by
// scripts/reference_erfc.py and frozen into the unit tests.

#include <array>
#include <cassert>
#include <cmath>
#include <complex>

namespace wedge {

namespace detail {

/// Degree of the rational expansion for the Faddeeva function.  N = 48
/// gives a worst-case relative error below 1e-13 on the strip
/// Re z in [-200, 200], Im z in [0, 12] including the real axis, which
/// covers every argument produced by the half-line transforms at the
/// reference grids with two refinements to spare.
inline constexpr int kFaddeevaOrder = 48;

struct FaddeevaTable {
    double L;
    std::array<double, kFaddeevaOrder> a;
};

/// Cosine-series coefficients of the rational approximation
/// (equilibrated Moebius map t -> L tan(theta/2), midpoint-free
/// trapezoidal quadrature with the half weight at theta = 0).
inline const FaddeevaTable& faddeeva_table() {
    static const FaddeevaTable table = [] {
        FaddeevaTable t{};
        constexpr int n_modes = kFaddeevaOrder;
        constexpr int m = 2 * n_modes;
        const double pi = std::acos(-1.0);
        t.L = std::sqrt(n_modes / std::sqrt(2.0));
        for (int n = 1; n <= n_modes; ++n) {
            double sum = t.L * t.L / 2.0;
            for (int j = 1; j < m; ++j) {
                const double theta = j * pi / m;
                const double tj = t.L * std::tan(theta / 2.0);
                sum += std::exp(-tj * tj) * (t.L * t.L + tj * tj) *
                       std::cos(n * theta);
            }
            t.a[static_cast<std::size_t>(n - 1)] = sum / m;
        }
        return t;
    }();
    return table;
}

/// exp(i t) evaluated through |t| so that negating t conjugates the result
/// bitwise; this makes mirror-parity identities of downstream sampled data
/// exact in floating point instead of relying on the sign symmetry of the
/// libm sin/cos.
inline std::complex<double> unit_phase(double t) {
    const double mag = std::fabs(t);
    const double s = std::sin(mag);
    return {std::cos(mag), t < 0.0 ? -s : s};
}

}  // namespace detail

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz) for Im z >= 0.
///
/// Evaluated with a single rational approximation in the Moebius variable
/// Z = (L + iz)/(L - iz); no branch switching, so the function is smooth
/// across the whole half plane (important: it feeds finite-difference
/// stencils downstream).
inline std::complex<double> faddeeva_w(std::complex<double> z) {
    assert(z.imag() >= -1e-12 && "faddeeva_w requires Im z >= 0");
    const auto& tab = detail::faddeeva_table();
    const std::complex<double> iz(-z.imag(), z.real());
    const std::complex<double> denom = tab.L - iz;
    const std::complex<double> big_z = (tab.L + iz) / denom;
    std::complex<double> poly = 0.0;
    for (int n = detail::kFaddeevaOrder - 1; n >= 0; --n) {
        poly = poly * big_z + tab.a[static_cast<std::size_t>(n)];
    }
    constexpr double inv_sqrt_pi = 0.5641895835477562869;
    return 2.0 * poly / (denom * denom) + inv_sqrt_pi / denom;
}

/// Tilted half-Gaussian integral
///
///     Psi(x0, y) = (1/2) exp(-y^2) erfc(x0 + i y)
///                = pi^{-1/2} exp(-y^2) Int_{x0}^inf exp(-(u - i y)^2) du,
///
/// evaluated without cancellation for either sign of x0 by routing through
/// the Faddeeva function on the closed upper half plane:
///
///     x0 >= 0:  (1/2) exp(-x0^2) exp(-2 i x0 y) w(-y + i x0)
///     x0 <  0:  exp(-y^2) - (1/2) exp(-x0^2) exp(-2 i x0 y) w(y - i x0).
inline std::complex<double> half_gaussian_psi(double x0, double y) {
    const double damp = std::exp(-x0 * x0);
    const std::complex<double> phase = detail::unit_phase(-2.0 * x0 * y);
    if (x0 >= 0.0) {
        return 0.5 * damp * phase * faddeeva_w({-y, x0});
    }
    return std::exp(-y * y) - 0.5 * damp * phase * faddeeva_w({y, -x0});
}

/// Fourier factor of a unit Gaussian bump restricted to the half line:
///
///     T(p; a, sigma) = (2 pi)^{-1/2} Int_0^inf exp(-(x-a)^2/sigma^2)
///                                    exp(+i p x) dx
///                    = (sigma/sqrt 2) exp(+i p a) Psi(-a/sigma, -p sigma/2).
///
/// For a >> sigma this approaches the full-line transform
/// (sigma/sqrt 2) exp(+i p a) exp(-p^2 sigma^2 / 4).
inline std::complex<double> halfline_gaussian_factor(double p, double a,
                                                     double sigma) {
    return (sigma / std::sqrt(2.0)) * detail::unit_phase(p * a) *
           half_gaussian_psi(-a / sigma, -0.5 * p * sigma);
}

}  // namespace wedge
