// Finite-dimensional modular-theory laboratory: explicit standard subspaces
// of R^{2n} carrying a complex structure, numerically constructed Tomita
// operators, and the entropy of a vector with respect to a standard
// subspace.  Everything here is small and dense (complex dimension <= 8 by
// contract); it exists to serve as an independent oracle for the wedge
// entropy concept, not as a scalable linear-algebra layer.
//
// Antilinear maps are represented as real 2n x 2n matrices that anticommute
// with the complex structure Jc; under this identification the complex
// adjoint of an antilinear map is the real transpose (unit-tested on 2x2
// cases in the suite before anything else relies on it).

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace wedge {

/// R^{2n} with a fixed orthogonal complex structure Jc (Jc^2 = -1).  The
/// complex inner product is <x,y> = x.y + i (Jc x).y, antilinear in the
/// first slot.
struct ComplexStructureSpace {
    int n = 0;          ///< complex dimension
    Eigen::MatrixXd Jc;  ///< 2n x 2n, multiplication by i
};

/// Hard cap on the complex dimension: this module is an oracle, not a
/// solver, and every routine is written for dense O(n^3) comfort.
inline constexpr int kMaxComplexDimension = 8;

/// The canonical complex structure on R^{2n}: coordinates (x, y) represent
/// x + i y componentwise and Jc (x, y) = (-y, x).
inline ComplexStructureSpace canonical_space(int n) {
    if (n < 1 || n > kMaxComplexDimension) {
        throw std::invalid_argument(
            "complex dimension must be between 1 and " +
            std::to_string(kMaxComplexDimension));
    }
    ComplexStructureSpace space;
    space.n = n;
    space.Jc = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    space.Jc.topRightCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
    space.Jc.bottomLeftCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
    return space;
}

/// <x,y> = x.y + i (Jc x).y, antilinear in x.
inline std::complex<double> complex_inner(const ComplexStructureSpace& space,
                                          const Eigen::VectorXd& x,
                                          const Eigen::VectorXd& y) {
    return {x.dot(y), (space.Jc * x).dot(y)};
}

/// A real subspace K of R^{2n}, stored through an orthonormal 2n x n basis.
/// Standardness (K totally real and generating: K intersect JcK = 0 and
/// K + JcK = R^{2n}) is a property of the span, measured by the condition
/// number of [basis | Jc basis].
struct FiniteStandardSubspace {
    ComplexStructureSpace space;
    Eigen::MatrixXd basis;  ///< 2n x n, orthonormal columns
};

/// Condition number of [basis | Jc basis]; infinite when K + JcK fails to
/// span.  Values above 1e8 are treated as standardness violations.
inline double standardness_condition(const FiniteStandardSubspace& K) {
    const Eigen::Index dim = K.basis.rows();
    Eigen::MatrixXd paired(dim, 2 * K.basis.cols());
    paired << K.basis, K.space.Jc * K.basis;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(paired);
    const double smallest = svd.singularValues()(svd.singularValues().size() - 1);
    if (smallest <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return svd.singularValues()(0) / smallest;
}

namespace detail {

inline constexpr double kStandardnessLimit = 1e8;

inline void require_standard(const FiniteStandardSubspace& K) {
    const double condition = standardness_condition(K);
    if (!(condition <= kStandardnessLimit)) {
        throw std::invalid_argument(
            "subspace is not (numerically) standard: condition number of "
            "[basis | Jc basis] is " +
            std::to_string(condition));
    }
}

}  // namespace detail

/// Orthonormalizes the given spanning columns (2n x n) and validates
/// standardness.  Throws if the columns are numerically dependent or the
/// span fails the standardness test.
inline FiniteStandardSubspace make_standard_subspace(
    ComplexStructureSpace space, const Eigen::MatrixXd& spanning_columns) {
    const int n = space.n;
    if (spanning_columns.rows() != 2 * n || spanning_columns.cols() != n) {
        throw std::invalid_argument(
            "a standard subspace of complex dimension n needs a 2n x n "
            "spanning matrix");
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(spanning_columns);
    const Eigen::VectorXd& sigma = svd.singularValues();
    if (sigma(sigma.size() - 1) <= 1e-12 * sigma(0)) {
        throw std::invalid_argument(
            "spanning columns are numerically dependent");
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(spanning_columns);
    Eigen::MatrixXd q =
        qr.householderQ() * Eigen::MatrixXd::Identity(2 * n, n);
    FiniteStandardSubspace K{std::move(space), std::move(q)};
    detail::require_standard(K);
    return K;
}

/// Tomita operator data: S (antilinear, S^2 = 1 on the nose), the modular
/// operator Delta = S^T S, and the modular conjugation J = S Delta^{-1/2}.
/// tomita_operator fills S_real; modular_operator completes the triple.
struct ModularData {
    Eigen::MatrixXd S_real;
    Eigen::MatrixXd Delta_real;
    Eigen::MatrixXd J_real;
};

/// The closure of h + i k -> h - i k on K + iK: fixes the basis columns,
/// negates their Jc images, and extends by real linearity.
inline ModularData tomita_operator(const FiniteStandardSubspace& K) {
    detail::require_standard(K);
    const Eigen::Index dim = K.basis.rows();
    const Eigen::Index n = K.basis.cols();
    Eigen::MatrixXd from(dim, 2 * n);
    Eigen::MatrixXd to(dim, 2 * n);
    from << K.basis, K.space.Jc * K.basis;
    to << K.basis, -(K.space.Jc * K.basis);
    // S * from = to, solved through the transposed system.
    ModularData data;
    data.S_real =
        from.transpose().partialPivLu().solve(to.transpose()).transpose();
    return data;
}

/// Polar pieces of S: Delta = S^T S (the real transpose implements the
/// complex adjoint of the antilinear S) and J = S Delta^{-1/2}.
inline ModularData modular_operator(ModularData data) {
    if (data.S_real.rows() == 0 ||
        data.S_real.rows() != data.S_real.cols()) {
        throw std::invalid_argument("modular_operator needs a square S_real");
    }
    Eigen::MatrixXd delta = data.S_real.transpose() * data.S_real;
    // Symmetrize away the round-off skew part before the eigensolve.
    delta = 0.5 * (delta + delta.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eigensolver(delta);
    const Eigen::VectorXd& eigenvalues = eigensolver.eigenvalues();
    const double largest = eigenvalues(eigenvalues.size() - 1);
    if (eigenvalues(0) <= 0.0 || largest / eigenvalues(0) > 1e16) {
        throw std::runtime_error(
            "modular operator is numerically singular: condition number " +
            std::to_string(largest / std::max(eigenvalues(0), 0.0)));
    }
    const Eigen::MatrixXd inv_sqrt =
        eigensolver.eigenvectors() *
        eigenvalues.array().rsqrt().matrix().asDiagonal() *
        eigensolver.eigenvectors().transpose();
    data.Delta_real = std::move(delta);
    data.J_real = data.S_real * inv_sqrt;
    return data;
}

/// Entropy of a vector h in K with respect to K: -(h, log Delta h).  The
/// sesquilinear form's imaginary part -(Jc h).(log Delta h) must vanish;
/// it is checked as a numerical self-test.
inline double vector_entropy(const FiniteStandardSubspace& K,
                             const Eigen::VectorXd& h) {
    if (h.size() != K.basis.rows()) {
        throw std::invalid_argument("vector length does not match the space");
    }
    const double norm = h.norm();
    if (norm == 0.0) {
        return 0.0;
    }
    const Eigen::VectorXd residual = h - K.basis * (K.basis.transpose() * h);
    if (residual.norm() > 1e-10 * std::max(1.0, norm)) {
        throw std::invalid_argument(
            "vector is not in the subspace (projection residual " +
            std::to_string(residual.norm()) + ")");
    }
    const ModularData data = modular_operator(tomita_operator(K));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eigensolver(
        data.Delta_real);
    const Eigen::MatrixXd log_delta =
        eigensolver.eigenvectors() *
        eigensolver.eigenvalues().array().log().matrix().asDiagonal() *
        eigensolver.eigenvectors().transpose();
    const Eigen::VectorXd image = log_delta * h;
    const double value = -h.dot(image);
    const double imaginary_part = -(K.space.Jc * h).dot(image);
    if (std::fabs(imaginary_part) > 1e-10 * (1.0 + std::fabs(value))) {
        throw std::runtime_error(
            "entropy form developed an imaginary part: " +
            std::to_string(imaginary_part));
    }
    return value;
}

/// Standard subspace with prescribed modular spectrum: each lambda in (0,1)
/// contributes a complex-2-dimensional block {(z, sqrt(lambda) conj z)}
/// whose modular operator is diag(lambda, 1/lambda) as a complex operator
/// (each eigenvalue doubled in the real representation).  Built on the
/// canonical complex structure in paired coordinates.
inline FiniteStandardSubspace subspace_from_modular_data(
    const std::vector<double>& lambdas, ComplexStructureSpace space) {
    if (lambdas.empty()) {
        throw std::invalid_argument(
            "at least one modular eigenvalue is required");
    }
    for (double lambda : lambdas) {
        if (!(lambda > 0.0) || !(lambda < 1.0)) {
            throw std::invalid_argument(
                "modular eigenvalues must lie strictly inside (0,1)");
        }
    }
    const int n = 2 * static_cast<int>(lambdas.size());
    if (space.n != n) {
        throw std::invalid_argument(
            "space must have complex dimension 2 * len(lambdas)");
    }
    if (!space.Jc.isApprox(canonical_space(n).Jc, 0.0)) {
        throw std::invalid_argument(
            "paired-coordinate construction requires the canonical complex "
            "structure");
    }
    Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(2 * n, n);
    for (std::size_t block = 0; block < lambdas.size(); ++block) {
        const double root = std::sqrt(lambdas[block]);
        const double scale = 1.0 / std::sqrt(1.0 + lambdas[block]);
        const int re1 = static_cast<int>(2 * block);      // Re z_1
        const int re2 = re1 + 1;                          // Re z_2
        const int im1 = n + re1;                          // Im z_1
        const int im2 = n + re2;                          // Im z_2
        // z = 1: (1, sqrt(lambda));  z = i: (i, -i sqrt(lambda)).
        basis(re1, 2 * block) = scale;
        basis(re2, 2 * block) = scale * root;
        basis(im1, 2 * block + 1) = scale;
        basis(im2, 2 * block + 1) = -scale * root;
    }
    FiniteStandardSubspace K{std::move(space), std::move(basis)};
    detail::require_standard(K);
    return K;
}

inline FiniteStandardSubspace subspace_from_modular_data(
    const std::vector<double>& lambdas) {
    return subspace_from_modular_data(
        lambdas, canonical_space(2 * static_cast<int>(lambdas.size())));
}

namespace detail {

/// Deterministic uniform double in [-1, 1) from the raw engine stream
/// (std::*_distribution is implementation-defined; this is portable).
inline double signed_uniform(std::mt19937_64& engine) {
    return 2.0 * std::ldexp(static_cast<double>(engine() >> 11), -53) - 1.0;
}

}  // namespace detail

/// Seeded random standard subspace: draws spanning columns until the
/// standardness condition number is comfortable, so the Tomita relations
/// hold at tight tolerances for every accepted draw.
inline FiniteStandardSubspace random_standard_subspace(int n,
                                                       std::uint64_t seed) {
    ComplexStructureSpace space = canonical_space(n);
    std::mt19937_64 engine(seed);
    for (int attempt = 0; attempt < 256; ++attempt) {
        Eigen::MatrixXd columns(2 * n, n);
        for (int r = 0; r < 2 * n; ++r) {
            for (int c = 0; c < n; ++c) {
                columns(r, c) = detail::signed_uniform(engine);
            }
        }
        try {
            FiniteStandardSubspace K =
                make_standard_subspace(space, columns);
            if (standardness_condition(K) <= 50.0) {
                return K;
            }
        } catch (const std::invalid_argument&) {
            // dependent draw; try again
        }
    }
    throw std::runtime_error(
        "failed to draw a well-conditioned standard subspace");
}

/// Real 2n x 2n representation of a complex-linear map on C^n (canonical
/// complex structure): commutes with Jc; orthogonal iff the map is unitary.
inline Eigen::MatrixXd real_representation(const Eigen::MatrixXcd& map) {
    if (map.rows() != map.cols()) {
        throw std::invalid_argument("real_representation needs a square map");
    }
    const Eigen::Index n = map.rows();
    Eigen::MatrixXd real(2 * n, 2 * n);
    real.topLeftCorner(n, n) = map.real();
    real.topRightCorner(n, n) = -map.imag();
    real.bottomLeftCorner(n, n) = map.imag();
    real.bottomRightCorner(n, n) = map.real();
    return real;
}

/// Seeded Haar-ish complex unitary via QR of a random complex matrix.
inline Eigen::MatrixXcd random_complex_unitary(int n, std::uint64_t seed) {
    if (n < 1 || n > kMaxComplexDimension) {
        throw std::invalid_argument("unitary dimension out of oracle range");
    }
    std::mt19937_64 engine(seed);
    Eigen::MatrixXcd raw(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const double re = detail::signed_uniform(engine);
            const double im = detail::signed_uniform(engine);
            raw(r, c) = {re, im};
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(raw);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
}

}  // namespace wedge
