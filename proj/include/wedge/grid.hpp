#pragma once

// Uniform cell-centered momentum grids on R^d, complex samples living on the
// mass hyperboloid above them, and the three invariant operations the
// entropy engine needs: the relativistic inner product, the symplectic form,
// and the tangential boost derivative omega * d/dp1.

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace wedge {

/// Relativistic single-particle energy omega(p) = sqrt(|p|^2 + m^2).
inline double omega(std::span<const double> p, double mass) {
    double q2 = mass * mass;
    for (double c : p) q2 += c * c;
    return std::sqrt(q2);
}

/// Uniform grid of N^d cell-centered nodes covering [-P, P]^d with spacing
/// dp = 2P/N.  N is required to be even so that the node set is mirror
/// symmetric (p a node implies -p a node, exactly, with no node at the
/// origin); this keeps omega > 0 in the massless case and makes the
/// conjugate-parity checks on sampled data exact rather than approximate.
struct MomentumGrid {
    int dimension;
    double mass;
    double half_extent;
    int points_per_axis;

    MomentumGrid(int d, double m, double extent, int n)
        : dimension(d), mass(m), half_extent(extent), points_per_axis(n) {
        if (d < 1) {
            throw std::invalid_argument("MomentumGrid: dimension must be >= 1");
        }
        if (!std::isfinite(m) || m < 0.0) {
            throw std::invalid_argument("MomentumGrid: mass must be >= 0");
        }
        if (d == 1 && m == 0.0) {
            throw std::invalid_argument(
                "MomentumGrid: d = 1 requires m > 0 (the massless line has an "
                "infrared-singular invariant measure)");
        }
        if (!std::isfinite(extent) || extent <= 0.0) {
            throw std::invalid_argument("MomentumGrid: half_extent must be > 0");
        }
        if (n < 8) {
            throw std::invalid_argument(
                "MomentumGrid: points_per_axis must be >= 8");
        }
        if (n % 2 != 0) {
            throw std::invalid_argument(
                "MomentumGrid: points_per_axis must be even (mirror-symmetric "
                "cell-centered nodes)");
        }
        if (std::pow(static_cast<double>(n), d) > 1.5e8) {
            throw std::length_error("MomentumGrid: more than 1.5e8 nodes");
        }
    }

    bool operator==(const MomentumGrid&) const = default;

    double spacing() const { return 2.0 * half_extent / points_per_axis; }

    std::size_t node_count() const {
        std::size_t count = 1;
        for (int axis = 0; axis < dimension; ++axis) {
            count *= static_cast<std::size_t>(points_per_axis);
        }
        return count;
    }

    /// i-th node coordinate along one axis.  Written as dp*(2i+1-N)/2 so the
    /// mirror identity coordinate(N-1-i) == -coordinate(i) holds exactly in
    /// floating point.
    double axis_coordinate(int i) const {
        return 0.5 * spacing() * (2 * i + 1 - points_per_axis);
    }

    /// Distance between flat indices of nodes adjacent along `axis`
    /// (axis 0 varies slowest).
    std::size_t axis_stride(int axis) const {
        std::size_t stride = 1;
        for (int a = axis + 1; a < dimension; ++a) {
            stride *= static_cast<std::size_t>(points_per_axis);
        }
        return stride;
    }

    /// Per-axis indices of a flat node index (axis 0 slowest).
    void unflatten(std::size_t flat, std::span<int> idx) const {
        for (int axis = dimension - 1; axis >= 0; --axis) {
            idx[static_cast<std::size_t>(axis)] =
                static_cast<int>(flat % static_cast<std::size_t>(points_per_axis));
            flat /= static_cast<std::size_t>(points_per_axis);
        }
    }

    /// Flat index of the mirror node -p (index i -> N-1-i on every axis).
    std::size_t mirror_index(std::size_t flat) const {
        std::size_t mirrored = 0;
        for (int axis = 0; axis < dimension; ++axis) {
            const auto n = static_cast<std::size_t>(points_per_axis);
            mirrored = mirrored * n + (n - 1 - flat / axis_stride(axis) % n);
        }
        return mirrored;
    }
};

/// Complex samples of a one-particle vector on the hyperboloid, parametrized
/// by the spatial momentum nodes of `grid`.
struct OnShellData {
    MomentumGrid grid;
    std::vector<std::complex<double>> samples;
};

inline OnShellData zero_data(const MomentumGrid& grid) {
    return {grid, std::vector<std::complex<double>>(grid.node_count())};
}

namespace detail {

inline void require_same_grid(const OnShellData& a, const OnShellData& b) {
    if (!(a.grid == b.grid)) {
        throw std::invalid_argument("on-shell data live on different grids");
    }
    if (a.samples.size() != a.grid.node_count() ||
        b.samples.size() != b.grid.node_count()) {
        throw std::invalid_argument("on-shell sample count does not match grid");
    }
}

/// Odometer over the per-axis indices of a grid, tracking coordinates and
/// omega incrementally is not worth the complexity here; it just avoids
/// re-dividing the flat index in hot loops.
struct NodeWalker {
    const MomentumGrid& grid;
    std::vector<int> idx;
    std::vector<double> coords;

    explicit NodeWalker(const MomentumGrid& g)
        : grid(g),
          idx(static_cast<std::size_t>(g.dimension), 0),
          coords(static_cast<std::size_t>(g.dimension)) {
        refresh();
    }

    void refresh() {
        for (int a = 0; a < grid.dimension; ++a) {
            const auto ua = static_cast<std::size_t>(a);
            coords[ua] = grid.axis_coordinate(idx[ua]);
        }
    }

    double energy() const { return omega(coords, grid.mass); }

    void advance() {
        for (int a = grid.dimension - 1; a >= 0; --a) {
            const auto ua = static_cast<std::size_t>(a);
            if (++idx[ua] < grid.points_per_axis) {
                coords[ua] = grid.axis_coordinate(idx[ua]);
                return;
            }
            idx[ua] = 0;
            coords[ua] = grid.axis_coordinate(0);
        }
    }
};

}  // namespace detail

/// Invariant inner product (F, G) = Int conj(F) G dp / (2 omega), midpoint
/// rule.  Conjugate symmetry inner_product(G, F) == conj(inner_product(F, G))
/// holds exactly in floating point (the summands are exact conjugates and
/// accumulate in the same order).
inline std::complex<double> inner_product(const OnShellData& F,
                                          const OnShellData& G) {
    detail::require_same_grid(F, G);
    const MomentumGrid& grid = F.grid;
    const double cell = std::pow(grid.spacing(), grid.dimension);
    detail::NodeWalker walker(grid);
    std::complex<double> sum = 0.0;
    const std::size_t count = grid.node_count();
    for (std::size_t n = 0; n < count; ++n, walker.advance()) {
        sum += std::conj(F.samples[n]) * G.samples[n] / (2.0 * walker.energy());
    }
    return sum * cell;
}

/// Symplectic form Im (F, G); antisymmetric exactly, and zero exactly on the
/// diagonal.
inline double symplectic_form(const OnShellData& F, const OnShellData& G) {
    return inner_product(F, G).imag();
}

/// Tangential boost derivative (D F)(p) = omega(p) * dF/dp1, the restriction
/// of the boost generator to on-shell data.  Second-order finite differences
/// in p1: 3-point central stencil in the interior, 3-point one-sided at the
/// two boundary layers.
inline OnShellData boost_derivative(const OnShellData& F) {
    detail::require_same_grid(F, F);
    const MomentumGrid& grid = F.grid;
    const int n = grid.points_per_axis;
    const std::size_t stride = grid.axis_stride(0);
    const double inv_2dp = 1.0 / (2.0 * grid.spacing());
    OnShellData out = zero_data(grid);
    detail::NodeWalker walker(grid);
    const std::size_t count = grid.node_count();
    for (std::size_t node = 0; node < count; ++node, walker.advance()) {
        const int i1 = walker.idx[0];
        std::complex<double> diff;
        // Grouped as differences so constant data is annihilated exactly.
        if (i1 == 0) {
            diff = 4.0 * (F.samples[node + stride] - F.samples[node]) -
                   (F.samples[node + 2 * stride] - F.samples[node]);
        } else if (i1 == n - 1) {
            diff = (F.samples[node - 2 * stride] - F.samples[node]) -
                   4.0 * (F.samples[node - stride] - F.samples[node]);
        } else {
            diff = F.samples[node + stride] - F.samples[node - stride];
        }
        out.samples[node] = walker.energy() * diff * inv_2dp;
    }
    return out;
}

}  // namespace wedge
