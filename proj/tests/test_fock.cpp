// Tests for the truncated-Fock relative-entropy oracle: thermal states,
// displacement unitaries, the Araki formula for displaced thermal states,
// and agreement with the one-particle vector entropy.

#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <vector>

#include "wedge/fock.hpp"
#include "wedge/modular.hpp"

namespace {

using Catch::Approx;
using cplx = std::complex<double>;

double mean_photon_number(const wedge::TruncatedFockState& state) {
    double total = 0.0;
    for (int n = 0; n <= state.cutoff; ++n) {
        total += n * state.matrix(n, n).real();
    }
    return total;
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
    double entropy = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double p = es.eigenvalues()(i);
        if (p > 1e-300) {
            entropy -= p * std::log(p);
        }
    }
    return entropy;
}

}  // namespace

TEST_CASE("thermal states", "[fock]") {
    SECTION("vacuum limit") {
        const wedge::TruncatedFockState vacuum = wedge::thermal_state(0.0, 8);
        CHECK(vacuum.matrix(0, 0) == cplx(1.0, 0.0));
        CHECK(vacuum.matrix.trace() == cplx(1.0, 0.0));
        CHECK((vacuum.matrix.diagonal().tail(8)).norm() == 0.0);
        CHECK(vacuum.truncation_deficit == 0.0);
    }

    SECTION("unit trace and reported deficit") {
        const wedge::TruncatedFockState state =
            wedge::thermal_state(0.6, 25);
        CHECK(std::abs(state.matrix.trace() - 1.0) <= 1e-14);
        CHECK(state.truncation_deficit ==
              Approx(std::pow(0.6, 26)).epsilon(1e-14));
    }

    SECTION("mean photon number mu / (1 - mu)") {
        const wedge::TruncatedFockState state =
            wedge::thermal_state(0.25, 20);
        CHECK(mean_photon_number(state) ==
              Approx(0.25 / 0.75).epsilon(1e-6));
    }

    SECTION("Gibbs entropy of the geometric distribution") {
        const double mu = 0.25;
        const wedge::TruncatedFockState state = wedge::thermal_state(mu, 30);
        const double binary_entropy =
            -mu * std::log(mu) - (1.0 - mu) * std::log(1.0 - mu);
        CHECK(von_neumann_entropy(state.matrix) ==
              Approx(binary_entropy / (1.0 - mu)).epsilon(1e-6));
    }

    SECTION("validation") {
        CHECK_THROWS_AS(wedge::thermal_state(1.0, 10),
                        std::invalid_argument);
        CHECK_THROWS_AS(wedge::thermal_state(-0.1, 10),
                        std::invalid_argument);
        CHECK_THROWS_AS(wedge::thermal_state(0.5, 1),
                        std::invalid_argument);
    }
}

TEST_CASE("displacement matrices", "[fock]") {
    SECTION("zero displacement is the identity") {
        const wedge::DisplacementResult d =
            wedge::displacement_matrix(cplx(0.0, 0.0), 12);
        CHECK((d.matrix - Eigen::MatrixXcd::Identity(13, 13)).norm() <=
              1e-13);
    }

    SECTION("vacuum column is a coherent state with Poisson statistics") {
        const cplx alpha(0.8, 0.0);
        const wedge::DisplacementResult d =
            wedge::displacement_matrix(alpha, 25);
        const Eigen::VectorXcd coherent = d.matrix.col(0);
        const double intensity = std::norm(alpha);
        double log_factorial = 0.0;
        for (int n = 0; n <= 25; ++n) {
            if (n > 0) log_factorial += std::log(static_cast<double>(n));
            const double poisson = std::exp(
                -intensity + n * std::log(intensity) - log_factorial);
            CHECK(std::abs(std::norm(coherent(n)) - poisson) <= 1e-6);
        }
        // Vacuum overlap <0|D|0> = exp(-|alpha|^2 / 2).
        CHECK(std::abs(d.matrix(0, 0) - std::exp(-intensity / 2.0)) <= 1e-8);
    }

    SECTION("unitarity deficit stays tiny") {
        for (const cplx alpha : {cplx(0.8, 0.0), cplx(1.0, -1.0),
                                 cplx(0.0, 1.5)}) {
            const wedge::DisplacementResult d =
                wedge::displacement_matrix(alpha, 30);
            CHECK(d.unitarity_deficit < 1e-6);
        }
    }
}

TEST_CASE("displaced thermal relative entropy", "[fock]") {
    SECTION("identical states give zero") {
        CHECK(std::fabs(wedge::displaced_thermal_relative_entropy(
                  0.3, cplx(0.0, 0.0), 25)) <= 1e-11);
    }

    SECTION("frozen value (-log mu) |alpha|^2") {
        CHECK(wedge::displaced_thermal_relative_entropy(0.25, cplx(1.0, 0.0),
                                                        30) ==
              Approx(std::log(4.0)).epsilon(1e-4));
        CHECK(wedge::displaced_thermal_relative_entropy(0.25, cplx(1.0, 0.0),
                                                        30) ==
              Approx(1.3862944).epsilon(1e-4));
    }

    SECTION("small-mu growth follows |alpha|^2 (-log mu)") {
        double previous = 0.0;
        for (const double mu : {1e-2, 1e-4, 1e-6}) {
            const double value = wedge::displaced_thermal_relative_entropy(
                mu, cplx(1.0, 0.0), 30);
            CHECK(value > previous);
            CHECK(value == Approx(-std::log(mu)).epsilon(1e-3));
            previous = value;
        }
    }

    SECTION("nonnegativity") {
        for (const double mu : {0.1, 0.5, 0.9}) {
            for (const cplx alpha :
                 {cplx(0.0, 0.0), cplx(0.3, 0.1), cplx(0.0, -1.0)}) {
                CHECK(wedge::displaced_thermal_relative_entropy(
                          mu, alpha, 30) >= -1e-10);
            }
        }
    }

    SECTION("monotone convergence in the cutoff") {
        std::vector<double> values;
        for (const int cutoff : {15, 20, 25, 30, 35}) {
            values.push_back(wedge::displaced_thermal_relative_entropy(
                0.6, cplx(1.0, 0.0), cutoff));
        }
        double previous_difference = 1.0;
        for (std::size_t i = 1; i < values.size(); ++i) {
            const double difference =
                std::fabs(values[i] - values[i - 1]);
            CHECK(difference < 0.5 * previous_difference);
            previous_difference = difference;
        }
        // Truncation error scales like (N+1) mu^N; at mu = 0.6 the last
        // increment (cutoff 30 -> 35) is ~8e-6.
        CHECK(previous_difference < 2e-5);
    }

    SECTION("trace guard rejects unnormalized states") {
        wedge::TruncatedFockState bad = wedge::thermal_state(0.3, 10);
        bad.matrix *= 0.9;
        CHECK_THROWS_WITH(
            wedge::relative_entropy_displaced(bad, cplx(0.5, 0.0)),
            Catch::Matchers::ContainsSubstring("cutoff too small"));
    }

    SECTION("non-Hermitian states are rejected") {
        wedge::TruncatedFockState bad = wedge::thermal_state(0.3, 10);
        bad.matrix(0, 1) = cplx(0.5, 0.0);
        CHECK_THROWS_AS(
            wedge::relative_entropy_displaced(bad, cplx(0.5, 0.0)),
            std::invalid_argument);
    }
}

TEST_CASE("coherent-state entropy matches the one-particle oracle",
          "[fock]") {
    SECTION("zero excitation") {
        CHECK(std::fabs(wedge::coherent_araki_entropy(0.25, cplx(0.0, 0.0),
                                                      20)) <= 1e-11);
    }

    SECTION("frozen values") {
        CHECK(wedge::coherent_araki_entropy(0.25, cplx(1.0, 0.0), 30) ==
              Approx(0.75 * std::log(4.0)).epsilon(1e-4));
        CHECK(wedge::coherent_araki_entropy(0.25, cplx(1.0, 0.0), 30) ==
              Approx(1.0397208).epsilon(1e-4));
        CHECK(wedge::coherent_araki_entropy(0.5, cplx(0.0, 2.0), 40) ==
              Approx(4.0 * 0.5 * std::log(2.0)).epsilon(1e-4));
        CHECK(wedge::coherent_araki_entropy(0.5, cplx(0.0, 2.0), 40) ==
              Approx(1.3862944).epsilon(1e-4));
    }

    SECTION("agreement with vector_entropy across the grid") {
        for (const double lambda : {0.1, 0.25, 0.5, 0.8}) {
            // The geometric tail converges slowly for lambda near 1, so the
            // brute-force side earns its keep with a deeper cutoff there.
            const int cutoff = lambda > 0.5 ? 60 : 30;
            const wedge::FiniteStandardSubspace K =
                wedge::subspace_from_modular_data({lambda});
            for (const double magnitude : {0.5, 1.0, 1.5}) {
                const cplx z = magnitude * std::polar(1.0, 0.37);
                Eigen::VectorXd h(4);
                const double root = std::sqrt(lambda);
                h << z.real(), root * z.real(), z.imag(), -root * z.imag();
                const double one_particle = wedge::vector_entropy(K, h);
                const double fock =
                    wedge::coherent_araki_entropy(lambda, z, cutoff);
                const double deficit = std::pow(lambda, cutoff + 1);
                CAPTURE(lambda, magnitude, one_particle, fock, deficit);
                CHECK(std::fabs(fock - one_particle) <=
                      std::max(1e-4, deficit));
                // Both routes evaluate (1-lambda)(-log lambda)|z|^2.
                CHECK(one_particle ==
                      Approx((1.0 - lambda) * (-std::log(lambda)) *
                             magnitude * magnitude)
                          .epsilon(1e-9));
            }
        }
    }

    SECTION("validation") {
        CHECK_THROWS_AS(wedge::coherent_araki_entropy(0.0, cplx(1.0, 0.0)),
                        std::invalid_argument);
        CHECK_THROWS_AS(wedge::coherent_araki_entropy(1.0, cplx(1.0, 0.0)),
                        std::invalid_argument);
    }
}
