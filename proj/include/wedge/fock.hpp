// Brute-force relative entropy of displaced thermal states in a truncated
// Fock space.  One effective bosonic mode suffices to cross-check the
// one-particle vector entropy: a standard-subspace block with modular
// spectrum (lambda, 1/lambda) purifies to a two-mode squeezed vacuum whose
// reduction to one mode is thermal with mean-occupation parameter
// mu = lambda, and the coherent excitation of the one-particle vector
// h = (z, sqrt(lambda) conj z) reduces to the displacement
// beta = sqrt(1 - lambda) z of that thermal state (docs/fock_reduction.md
// records the derivation and the sign convention).

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "wedge/modular.hpp"

namespace wedge {

/// Density matrix in the number basis {|0>, ..., |cutoff>}.  States built
/// by thermal_state are renormalized to unit trace; the geometric tail mass
/// that renormalization absorbed is reported as truncation_deficit.
struct TruncatedFockState {
    int cutoff = 0;
    Eigen::MatrixXcd matrix;
    double truncation_deficit = 0.0;
};

/// exp(alpha a^dag - conj(alpha) a) on the truncated space, together with
/// the measured unitarity deficit |D^dag D - 1|.  The truncated generator
/// is exactly anti-Hermitian, so the deficit is round-off sized; the
/// physical validity condition is |alpha|^2 well below the cutoff.
struct DisplacementResult {
    Eigen::MatrixXcd matrix;
    double unitarity_deficit = 0.0;
};

namespace detail {

inline void validate_cutoff(int cutoff) {
    if (cutoff < 2) {
        throw std::invalid_argument("Fock cutoff must be at least 2");
    }
    if (cutoff > 4096) {
        throw std::invalid_argument("Fock cutoff is unreasonably large");
    }
}

/// Annihilation operator: a |n> = sqrt(n) |n-1>.
inline Eigen::MatrixXcd lowering_operator(int cutoff) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
    for (int n = 1; n <= cutoff; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return a;
}

/// log of a Hermitian positive-semidefinite matrix through its
/// eigendecomposition, with eigenvalues floored at 1e-300 (the floor is
/// harmless for trace-normalized states passing the deficit guard, and
/// turns exact zeros into large-but-finite logarithms).
inline Eigen::MatrixXcd hermitian_log(const Eigen::MatrixXcd& matrix) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eigensolver(matrix);
    Eigen::VectorXd eigenvalues = eigensolver.eigenvalues();
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
        if (eigenvalues(i) < -1e-10) {
            throw std::invalid_argument(
                "density matrix has a negative eigenvalue: " +
                std::to_string(eigenvalues(i)));
        }
        eigenvalues(i) = std::max(eigenvalues(i), 1e-300);
    }
    return eigensolver.eigenvectors() *
           eigenvalues.array().log().matrix().asDiagonal() *
           eigensolver.eigenvectors().adjoint();
}

inline void validate_density_matrix(const TruncatedFockState& state) {
    validate_cutoff(state.cutoff);
    const Eigen::Index dim = state.cutoff + 1;
    if (state.matrix.rows() != dim || state.matrix.cols() != dim) {
        throw std::invalid_argument(
            "density matrix size does not match the cutoff");
    }
    if ((state.matrix - state.matrix.adjoint()).norm() >
        1e-12 * std::max(1.0, state.matrix.norm())) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    const double trace_deviation = std::abs(state.matrix.trace() - 1.0);
    if (trace_deviation > 1e-4) {
        throw std::runtime_error(
            "density matrix trace deviates from 1 by " +
            std::to_string(trace_deviation) +
            ": cutoff too small for this state");
    }
}

}  // namespace detail

/// Renormalized geometric thermal state (1 - mu) diag(mu^n) / (1 - mu^{N+1}),
/// with the absorbed tail mass mu^{N+1} reported as the truncation deficit.
inline TruncatedFockState thermal_state(double mu, int cutoff) {
    detail::validate_cutoff(cutoff);
    if (!(mu >= 0.0) || !(mu < 1.0)) {
        throw std::invalid_argument(
            "thermal parameter must satisfy 0 <= mu < 1");
    }
    TruncatedFockState state;
    state.cutoff = cutoff;
    state.truncation_deficit = std::pow(mu, cutoff + 1);
    state.matrix = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
    const double normalization =
        (1.0 - mu) / (1.0 - state.truncation_deficit);
    double weight = normalization;
    for (int n = 0; n <= cutoff; ++n) {
        state.matrix(n, n) = weight;
        weight *= mu;
    }
    return state;
}

/// Displacement unitary from the exponential of the truncated generator
/// alpha a^dag - conj(alpha) a, computed through the Hermitian
/// eigendecomposition of i (alpha a^dag - conj(alpha) a).
inline DisplacementResult displacement_matrix(std::complex<double> alpha,
                                              int cutoff) {
    detail::validate_cutoff(cutoff);
    const Eigen::MatrixXcd a = detail::lowering_operator(cutoff);
    const std::complex<double> i(0.0, 1.0);
    const Eigen::MatrixXcd hermitian_generator =
        i * (alpha * a.adjoint() - std::conj(alpha) * a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eigensolver(
        hermitian_generator);
    const Eigen::VectorXcd phases =
        (-i * eigensolver.eigenvalues().array().cast<std::complex<double>>())
            .exp()
            .matrix();
    DisplacementResult result;
    result.matrix = eigensolver.eigenvectors() * phases.asDiagonal() *
                    eigensolver.eigenvectors().adjoint();
    result.unitarity_deficit =
        (result.matrix.adjoint() * result.matrix -
         Eigen::MatrixXcd::Identity(cutoff + 1, cutoff + 1))
            .norm();
    return result;
}

/// Araki relative entropy S(D rho D^dag || rho) = Tr rho_alpha (log
/// rho_alpha - log rho), evaluated by honest matrix logarithms of both
/// density matrices.  Guarded by the trace-deviation check: a state whose
/// trace has drifted from 1 by more than 1e-4 indicates a cutoff too small
/// for the requested excitation.
inline double relative_entropy_displaced(const TruncatedFockState& state,
                                         std::complex<double> alpha) {
    detail::validate_density_matrix(state);
    const Eigen::MatrixXcd d =
        displacement_matrix(alpha, state.cutoff).matrix;
    TruncatedFockState displaced;
    displaced.cutoff = state.cutoff;
    displaced.matrix = d * state.matrix * d.adjoint();
    displaced.truncation_deficit = state.truncation_deficit;
    detail::validate_density_matrix(displaced);
    const Eigen::MatrixXcd log_displaced =
        detail::hermitian_log(displaced.matrix);
    const Eigen::MatrixXcd log_state = detail::hermitian_log(state.matrix);
    return (displaced.matrix * (log_displaced - log_state)).trace().real();
}

inline double displaced_thermal_relative_entropy(double mu,
                                                 std::complex<double> alpha,
                                                 int cutoff) {
    return relative_entropy_displaced(thermal_state(mu, cutoff), alpha);
}

/// Relative entropy of the coherent excitation of the one-particle vector
/// h = (z, sqrt(lambda) conj z) in the squeezed standard subspace K_lambda,
/// computed in Fock space: reduce to one mode (mu = lambda, displacement
/// beta = sqrt(1 - lambda) z) and run the Araki formula.  Must agree with
/// the one-particle vector_entropy (1 - lambda)(-log lambda)|z|^2 within
/// truncation tolerance.
inline double coherent_araki_entropy(double lambda, std::complex<double> z,
                                     int cutoff = 30) {
    if (!(lambda > 0.0) || !(lambda < 1.0)) {
        throw std::invalid_argument(
            "modular eigenvalue must lie strictly inside (0,1)");
    }
    const std::complex<double> beta = std::sqrt(1.0 - lambda) * z;
    return displaced_thermal_relative_entropy(lambda, beta, cutoff);
}

}  // namespace wedge
