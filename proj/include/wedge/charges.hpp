#pragma once

// Concrete time-zero charges: finite sums of isotropic Gaussian bumps for
// the field smearing h and the momentum smearing k, their analytic
// derivatives, and the sampling of the associated one-particle vector on a
// momentum grid (optionally truncated to the half space x1 > 0).

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wedge/faddeeva.hpp"
#include "wedge/grid.hpp"

namespace wedge {

/// One Gaussian bump x -> c * exp(-|x - a|^2 / sigma^2).
struct GaussianTerm {
    double amplitude;            ///< c
    std::vector<double> center;  ///< a
    double width;                ///< sigma > 0
};

/// A pair of real test functions (h, k) on R^d: h couples to the time-zero
/// field, k to the time-zero momentum.  Either list may be empty.
struct TimeZeroCharge {
    int dimension;
    std::vector<GaussianTerm> field_terms;     ///< the function h
    std::vector<GaussianTerm> momentum_terms;  ///< the function k
};

enum class ChargePart { Field, Momentum };

/// Full: transform of the data on all of R^d.  WedgeHalfSpace: the data are
/// multiplied by the characteristic function of x1 > 0 first; the x1-factor
/// of each term's transform becomes the half-line Gaussian factor.
enum class TruncationMode { Full, WedgeHalfSpace };

inline void validate_charge(const TimeZeroCharge& charge) {
    if (charge.dimension < 1) {
        throw std::invalid_argument("charge dimension must be >= 1");
    }
    auto check_terms = [&](const std::vector<GaussianTerm>& terms,
                           const char* which) {
        for (const GaussianTerm& term : terms) {
            if (term.center.size() !=
                static_cast<std::size_t>(charge.dimension)) {
                throw std::invalid_argument(
                    std::string(which) +
                    " term center dimension does not match charge dimension");
            }
            if (!std::isfinite(term.width) || term.width <= 0.0) {
                throw std::invalid_argument(std::string(which) +
                                            " term width must be > 0");
            }
            if (!std::isfinite(term.amplitude)) {
                throw std::invalid_argument(std::string(which) +
                                            " term amplitude must be finite");
            }
            for (double c : term.center) {
                if (!std::isfinite(c)) {
                    throw std::invalid_argument(std::string(which) +
                                                " term center must be finite");
                }
            }
        }
    };
    check_terms(charge.field_terms, "field");
    check_terms(charge.momentum_terms, "momentum");
}

inline bool is_zero_charge(const TimeZeroCharge& charge) {
    return charge.field_terms.empty() && charge.momentum_terms.empty();
}

namespace detail {

inline const std::vector<GaussianTerm>& part_terms(const TimeZeroCharge& charge,
                                                   ChargePart part) {
    return part == ChargePart::Field ? charge.field_terms
                                     : charge.momentum_terms;
}

inline void require_point_dimension(const TimeZeroCharge& charge,
                                    std::span<const double> x) {
    if (x.size() != static_cast<std::size_t>(charge.dimension)) {
        throw std::invalid_argument(
            "evaluation point dimension does not match charge dimension");
    }
}

inline double term_value(const GaussianTerm& term, std::span<const double> x) {
    double r2 = 0.0;
    for (std::size_t a = 0; a < x.size(); ++a) {
        const double dxa = x[a] - term.center[a];
        r2 += dxa * dxa;
    }
    return term.amplitude * std::exp(-r2 / (term.width * term.width));
}

}  // namespace detail

/// Value of h (part = Field) or k (part = Momentum) at x.
inline double evaluate(const TimeZeroCharge& charge, ChargePart part,
                       std::span<const double> x) {
    validate_charge(charge);
    detail::require_point_dimension(charge, x);
    double sum = 0.0;
    for (const GaussianTerm& term : detail::part_terms(charge, part)) {
        sum += detail::term_value(term, x);
    }
    return sum;
}

/// Analytic gradient of k at x.
inline std::vector<double> gradient_k(const TimeZeroCharge& charge,
                                      std::span<const double> x) {
    validate_charge(charge);
    detail::require_point_dimension(charge, x);
    std::vector<double> grad(x.size(), 0.0);
    for (const GaussianTerm& term : charge.momentum_terms) {
        const double value = detail::term_value(term, x);
        const double scale = -2.0 / (term.width * term.width);
        for (std::size_t a = 0; a < x.size(); ++a) {
            grad[a] += scale * (x[a] - term.center[a]) * value;
        }
    }
    return grad;
}

/// Analytic Laplacian of k at x with the positive-operator sign convention
/// Delta = -sum_a d^2/dx_a^2 (so the Laplacian of a bump is positive at its
/// peak).
inline double laplacian_k(const TimeZeroCharge& charge,
                          std::span<const double> x) {
    validate_charge(charge);
    detail::require_point_dimension(charge, x);
    double sum = 0.0;
    for (const GaussianTerm& term : charge.momentum_terms) {
        const double s2 = term.width * term.width;
        double r2 = 0.0;
        for (std::size_t a = 0; a < x.size(); ++a) {
            const double dxa = x[a] - term.center[a];
            r2 += dxa * dxa;
        }
        sum += (2.0 * charge.dimension / s2 - 4.0 * r2 / (s2 * s2)) *
               detail::term_value(term, x);
    }
    return sum;
}

namespace detail {

/// Full-line Fourier factor of a unit Gaussian bump along one axis:
/// (2 pi)^{-1/2} Int exp(-(x-a)^2/sigma^2) exp(+i p x) dx.
inline std::complex<double> fullline_gaussian_factor(double p, double a,
                                                     double sigma) {
    const double damp = std::exp(-0.25 * p * p * sigma * sigma);
    return (sigma / std::sqrt(2.0)) * damp * unit_phase(p * a);
}

/// Per-axis factor table for one term on one grid.
inline std::vector<std::complex<double>> axis_factors(
    const MomentumGrid& grid, const GaussianTerm& term, int axis,
    TruncationMode mode) {
    std::vector<std::complex<double>> factors(
        static_cast<std::size_t>(grid.points_per_axis));
    const double a = term.center[static_cast<std::size_t>(axis)];
    for (int i = 0; i < grid.points_per_axis; ++i) {
        const double p = grid.axis_coordinate(i);
        factors[static_cast<std::size_t>(i)] =
            (axis == 0 && mode == TruncationMode::WedgeHalfSpace)
                ? halfline_gaussian_factor(p, a, term.width)
                : fullline_gaussian_factor(p, a, term.width);
    }
    return factors;
}

}  // namespace detail

/// Sample the one-particle vector of the charge on the grid:
///
///     F(p) = h^(p) + i omega(p) k^(p),
///
/// with h^ the exact analytic transform of the Gaussian sum (kernel
/// exp(+i p.x), factorized per axis).  In WedgeHalfSpace mode the data are
/// first truncated to x1 > 0, which replaces the x1-factor by the half-line
/// transform; the other axes are unchanged.  Accumulation is term by term,
/// so to_onshell of a concatenation of term lists equals the sample-wise sum
/// of the separate results, exactly.
inline OnShellData to_onshell(const TimeZeroCharge& charge,
                              const MomentumGrid& grid, TruncationMode mode) {
    validate_charge(charge);
    if (charge.dimension != grid.dimension) {
        throw std::invalid_argument(
            "charge dimension does not match grid dimension");
    }
    OnShellData data = zero_data(grid);
    const std::size_t count = grid.node_count();
    std::vector<std::vector<std::complex<double>>> factors(
        static_cast<std::size_t>(grid.dimension));
    for (ChargePart part : {ChargePart::Field, ChargePart::Momentum}) {
        for (const GaussianTerm& term : detail::part_terms(charge, part)) {
            for (int axis = 0; axis < grid.dimension; ++axis) {
                factors[static_cast<std::size_t>(axis)] =
                    detail::axis_factors(grid, term, axis, mode);
            }
            detail::NodeWalker walker(grid);
            for (std::size_t n = 0; n < count; ++n, walker.advance()) {
                std::complex<double> product = term.amplitude;
                for (int axis = 0; axis < grid.dimension; ++axis) {
                    const auto ua = static_cast<std::size_t>(axis);
                    product *= factors[ua][static_cast<std::size_t>(
                        walker.idx[ua])];
                }
                if (part == ChargePart::Momentum) {
                    product *= std::complex<double>(0.0, walker.energy());
                }
                data.samples[n] += product;
            }
        }
    }
    return data;
}

}  // namespace wedge
