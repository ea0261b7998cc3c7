// Tests for the wedge entropy engine: closed-form anchors frozen from the
// committed reference quadrature script (scripts/reference_quadrature.py),
// the integration-by-parts decomposition, route equivalence against the
// momentum-space quadrature, and the structural report invariants.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <utility>
#include <vector>

#include "quad_oracle.hpp"
#include "wedge/entropy.hpp"

namespace {

const double kPi = std::acos(-1.0);

wedge::TimeZeroCharge h_charge(double c, double a, double sigma) {
    return {1, {{c, {a}, sigma}}, {}};
}

wedge::TimeZeroCharge k_charge(double c, double a, double sigma) {
    return {1, {}, {{c, {a}, sigma}}};
}

// Fixture set shared with scripts/reference_quadrature.py.
wedge::TimeZeroCharge interior_h() { return h_charge(1.0, 2.0, 1.0); }
wedge::TimeZeroCharge interior_k() { return k_charge(1.0, 2.5, 0.8); }
wedge::TimeZeroCharge boundary_k() { return k_charge(1.0, 0.0, 1.0); }
wedge::TimeZeroCharge mixed_hk() {
    return {1, {{1.0, {2.0}, 1.0}}, {{0.5, {1.2}, 0.7}}};
}
wedge::TimeZeroCharge shift_h() { return h_charge(1.0, 3.0, 0.5); }

wedge::TimeZeroCharge interior_h_d2() { return {2, {{1.0, {2.0, 0.0}, 1.0}}, {}}; }
wedge::TimeZeroCharge interior_k_d2() { return {2, {}, {{1.0, {2.5, 0.0}, 0.8}}}; }

void check_relative(double actual, double expected, double tol) {
    CAPTURE(actual, expected, tol);
    CHECK(std::fabs(actual - expected) <= tol * std::fabs(expected));
}

void check_absolute(double actual, double expected, double tol) {
    CAPTURE(actual, expected, tol);
    CHECK(std::fabs(actual - expected) <= tol);
}

}  // namespace

TEST_CASE("closed form reproduces the frozen quadrature anchors",
          "[entropy]") {
    SECTION("interior field bump, one dimension") {
        const wedge::EntropyReport report =
            wedge::entropy_closed_form(interior_h(), 1.0);
        check_relative(report.total, 7.87481903974037, 1e-10);
        check_relative(report.field_term, 7.87481903974037, 1e-10);
        CHECK(report.momentum_total == 0.0);
        CHECK(report.boundary_term == 0.0);

        // Independent in-test oracle: pi * Int_0^inf x exp(-2(x-2)^2) dx.
        const double oracle =
            kPi * testutil::integrate(
                      [](double x) { return x * std::exp(-2.0 * (x - 2.0) * (x - 2.0)); },
                      0.0, 20.0, 1e-12);
        check_relative(report.total, oracle, 1e-9);

        // The full-line moment pi * 2 * sqrt(pi/2) differs only by the
        // sub-1e-4-relative left tail.
        check_relative(report.total, 2.0 * kPi * std::sqrt(kPi / 2.0), 2e-5);
    }

    SECTION("interior momentum bump, one dimension") {
        const wedge::EntropyReport report =
            wedge::entropy_closed_form(interior_k(), 1.0);
        check_relative(report.total, 20.1791877456449, 1e-10);
        CHECK(report.field_term == 0.0);
        check_relative(report.momentum_bulk, 20.1791877352974, 1e-10);
        check_relative(report.boundary_term, 1.03475080519627e-08, 1e-7);
    }

    SECTION("boundary-centered momentum bump, one dimension") {
        const wedge::EntropyReport report =
            wedge::entropy_closed_form(boundary_k(), 1.0);
        check_absolute(report.total, 0.75 * kPi, 1e-10);
        check_absolute(report.boundary_term, kPi, 1e-10);
        check_absolute(report.momentum_bulk, -0.25 * kPi, 1e-10);

        // Independent in-test oracle:
        // pi * Int_0^inf x (exp(-2x^2) + 4 x^2 exp(-2x^2)) dx = 3 pi / 4.
        const double oracle =
            kPi * testutil::integrate(
                      [](double x) {
                          const double g = std::exp(-2.0 * x * x);
                          return x * (g + 4.0 * x * x * g);
                      },
                      0.0, 12.0, 1e-12);
        check_relative(report.total, oracle, 1e-9);
    }

    SECTION("mixed charge, one dimension") {
        const wedge::EntropyReport report =
            wedge::entropy_closed_form(mixed_hk(), 1.0);
        check_relative(report.total, 10.3897387194098, 1e-10);
        check_relative(report.field_term, 7.87481903974037, 1e-10);
        check_relative(report.momentum_bulk, 2.51271927830237, 1e-10);
        check_relative(report.boundary_term, 0.00220040136707444, 1e-9);
    }

    SECTION("two dimensions") {
        check_relative(wedge::entropy_closed_form(interior_h_d2(), 1.0).total,
                       9.86962203130788, 1e-8);
        check_relative(wedge::entropy_closed_form(interior_k_d2(), 1.0).total,
                       32.5696945263519, 1e-8);
    }

    SECTION("transverse axes factorize into Gaussian norms") {
        const double d1 = wedge::entropy_closed_form(interior_h(), 1.0).total;
        const double d2 =
            wedge::entropy_closed_form(interior_h_d2(), 1.0).total;
        const wedge::TimeZeroCharge d3_charge{
            3, {{1.0, {2.0, 0.0, 0.0}, 1.0}}, {}};
        const double d3 = wedge::entropy_closed_form(d3_charge, 1.0).total;
        const double transverse_norm = std::sqrt(kPi / 2.0);  // sigma = 1
        check_relative(d2, d1 * transverse_norm, 1e-12);
        check_relative(d3, d2 * transverse_norm, 1e-12);
    }
}

TEST_CASE("entropy reports satisfy their structural invariants", "[entropy]") {
    const std::vector<std::pair<wedge::TimeZeroCharge, double>> fixtures = {
        {interior_h(), 1.0},  {interior_k(), 1.0},    {boundary_k(), 1.0},
        {mixed_hk(), 1.0},    {interior_h_d2(), 1.0}, {interior_k_d2(), 0.5},
        {interior_k_d2(), 1.0}};
    for (const auto& [charge, mass] : fixtures) {
        const wedge::EntropyReport report =
            wedge::entropy_closed_form(charge, mass);
        CAPTURE(charge.dimension, mass);

        // total = field + momentum is the definition.
        CHECK(report.total == report.field_term + report.momentum_total);

        // Decomposition identity of the momentum part at 1e-8 relative.
        if (!charge.momentum_terms.empty()) {
            check_relative(report.momentum_bulk + report.boundary_term,
                           report.momentum_total, 1e-8);
        }

        // Positivity of the physical sums (the bulk column alone may be
        // negative).
        CHECK(report.field_term >= -1e-12);
        CHECK(report.momentum_total >= -1e-12);
        CHECK(report.boundary_term >= -1e-12);
        CHECK(report.total > 0.0);

        CHECK(report.route == wedge::EntropyRoute::ClosedForm);
        CHECK(report.dimension == charge.dimension);
        CHECK(report.mass == mass);
        CHECK(report.error_estimate <= 1e-12 * report.total);
    }
}

TEST_CASE("zero charges short-circuit to zero reports", "[entropy]") {
    const wedge::TimeZeroCharge zero{1, {}, {}};
    const wedge::EntropyReport closed = wedge::entropy_closed_form(zero, 1.0);
    CHECK(closed.total == 0.0);
    CHECK(closed.field_term == 0.0);
    CHECK(closed.momentum_total == 0.0);
    CHECK(closed.boundary_term == 0.0);

    const wedge::MomentumGrid grid(1, 1.0, 8.0, 128);
    const wedge::EntropyReport momentum =
        wedge::entropy_momentum_route(zero, grid);
    CHECK(momentum.total == 0.0);

    const wedge::EntropyReport raw =
        wedge::entropy_momentum_route(wedge::zero_data(grid));
    CHECK(raw.total == 0.0);
    CHECK(raw.error_estimate == 0.0);
}

TEST_CASE("closed form scales quadratically in the charge", "[entropy]") {
    for (double factor : {3.0, 0.5}) {
        wedge::TimeZeroCharge scaled = mixed_hk();
        for (auto* terms : {&scaled.field_terms, &scaled.momentum_terms}) {
            for (wedge::GaussianTerm& term : *terms) {
                term.amplitude *= factor;
            }
        }
        const double base = wedge::entropy_closed_form(mixed_hk(), 1.0).total;
        const double value = wedge::entropy_closed_form(scaled, 1.0).total;
        check_relative(value, factor * factor * base, 1e-12);
    }
}

TEST_CASE("totals are affine in the squared mass with the pinned slope",
          "[entropy]") {
    const double s0 =
        wedge::entropy_closed_form(interior_k_d2(), 0.0).total;
    const double s05 =
        wedge::entropy_closed_form(interior_k_d2(), 0.5).total;
    const double s1 =
        wedge::entropy_closed_form(interior_k_d2(), 1.0).total;
    check_relative(s0, 24.6740110054408, 1e-8);
    check_relative(s05, 26.6479318856686, 1e-8);
    check_relative(s1, 32.5696945263519, 1e-8);

    // Slope in m^2 is the weighted norm pi * Int x1 k^2 > 0: finite
    // differences at the two spacings must agree.
    const double slope = 7.8956835209112;
    check_relative(s1 - s0, slope, 1e-9);
    check_relative((s05 - s0) / 0.25, slope, 1e-9);
    CHECK(s0 < s05);
    CHECK(s05 < s1);
}

TEST_CASE("wedge offsets obey the shift identity and monotonicity",
          "[entropy]") {
    SECTION("interior charge: exact linear decrease") {
        const double density =
            wedge::entropy_density_integral(shift_h(), 1.0);
        check_relative(density, 1.9687012432153, 1e-9);
        // Single-term analytic value pi * c^2 sigma sqrt(pi/2).
        check_relative(density, kPi * 0.5 * std::sqrt(kPi / 2.0), 1e-12);

        const auto scan = wedge::wedge_monotonicity_scan(shift_h(), 1.0,
                                                         {0.0, 1.0, 2.0});
        REQUIRE(scan.size() == 3);
        check_relative(scan[0].second, 5.90610372964591, 1e-9);
        check_relative(scan[1].second, 3.93740248643061, 1e-9);
        check_relative(scan[0].second - scan[1].second, density, 1e-6);
        check_relative(scan[0].second - scan[2].second, 2.0 * density, 1e-6);
    }

    SECTION("translated wedge equals translated charge") {
        const double direct =
            wedge::entropy_closed_form(mixed_hk(), 1.0, 0.7).total;
        const double shifted =
            wedge::entropy_closed_form(wedge::shift_charge(mixed_hk(), 0.7),
                                       1.0, 0.0)
                .total;
        check_relative(direct, shifted, 1e-13);
    }

    SECTION("boundary charge: strictly decreasing scan") {
        const auto scan = wedge::wedge_monotonicity_scan(boundary_k(), 1.0,
                                                         {0.0, 0.5, 1.0});
        REQUIRE(scan.size() == 3);
        CHECK(scan[0].second > scan[1].second);
        CHECK(scan[1].second > scan[2].second);
        CHECK(scan[2].second > 0.0);
    }

    SECTION("offset validation") {
        CHECK_THROWS_AS(
            wedge::wedge_monotonicity_scan(shift_h(), 1.0, {1.0, 0.5}),
            std::invalid_argument);
        CHECK_THROWS_AS(
            wedge::wedge_monotonicity_scan(shift_h(), 1.0, {-0.5, 1.0}),
            std::invalid_argument);
        CHECK_THROWS_AS(
            wedge::entropy_closed_form(
                shift_h(), 1.0, std::numeric_limits<double>::quiet_NaN()),
            std::invalid_argument);
    }
}

TEST_CASE("momentum route matches the closed form on interior charges",
          "[entropy][momentum]") {
    const wedge::EntropyReport closed =
        wedge::entropy_closed_form(interior_h(), 1.0);

    SECTION("pinned example grid: half-percent agreement") {
        const wedge::MomentumGrid grid(1, 1.0, 16.0, 2048);
        const wedge::EntropyReport momentum =
            wedge::entropy_momentum_route(interior_h(), grid);
        check_relative(momentum.total, closed.total, 5e-3);
        CHECK(std::fabs(momentum.total - closed.total) <=
              momentum.error_estimate);
        CHECK(momentum.route == wedge::EntropyRoute::Momentum);
        CHECK(momentum.grid_extent == 16.0);
        CHECK(momentum.grid_points == 2048);
    }

    SECTION("reference grid and the refinement ladder") {
        double previous_error = std::numeric_limits<double>::infinity();
        for (const auto& [extent, points] :
             std::vector<std::pair<double, int>>{{16.0, 2048},
                                                 {24.0, 4096},
                                                 {48.0, 8192}}) {
            const wedge::MomentumGrid grid(1, 1.0, extent, points);
            const wedge::EntropyReport momentum =
                wedge::entropy_momentum_route(interior_h(), grid);
            const double error = std::fabs(momentum.total - closed.total);
            CAPTURE(extent, points, error, momentum.error_estimate);
            CHECK(error <= momentum.error_estimate);
            CHECK(error <= previous_error);
            previous_error = error;
        }
        CHECK(previous_error <= 0.01 * closed.total);
    }

    SECTION("two-dimensional interior charges") {
        const wedge::MomentumGrid grid(2, 1.0, 16.0, 512);
        const wedge::EntropyReport h2 =
            wedge::entropy_momentum_route(interior_h_d2(), grid);
        check_relative(h2.total,
                       wedge::entropy_closed_form(interior_h_d2(), 1.0).total,
                       1e-2);
        CHECK(std::fabs(h2.total -
                        wedge::entropy_closed_form(interior_h_d2(), 1.0)
                            .total) <= h2.error_estimate);

        const wedge::EntropyReport k2 =
            wedge::entropy_momentum_route(interior_k_d2(), grid);
        check_relative(k2.total,
                       wedge::entropy_closed_form(interior_k_d2(), 1.0).total,
                       1e-2);
        CHECK(std::fabs(k2.total -
                        wedge::entropy_closed_form(interior_k_d2(), 1.0)
                            .total) <= k2.error_estimate);
    }
}

TEST_CASE("momentum route handles boundary-crossing and mixed charges",
          "[entropy][momentum]") {
    SECTION("boundary-centered momentum bump") {
        const double expected = 0.75 * kPi;
        const wedge::MomentumGrid grid(1, 1.0, 48.0, 8192);
        const wedge::EntropyReport momentum =
            wedge::entropy_momentum_route(boundary_k(), grid);
        check_relative(momentum.total, expected, 2e-2);
        CHECK(std::fabs(momentum.total - expected) <=
              momentum.error_estimate);

        // Refinement (doubled extent, quadrupled points) must improve.
        const wedge::MomentumGrid fine(1, 1.0, 96.0, 32768);
        const wedge::EntropyReport refined =
            wedge::entropy_momentum_route(boundary_k(), fine);
        CHECK(std::fabs(refined.total - expected) <
              std::fabs(momentum.total - expected));

        // Decomposition columns stay analytic in the momentum report.
        check_absolute(momentum.boundary_term, kPi, 1e-10);
        check_absolute(momentum.momentum_bulk, -0.25 * kPi, 1e-10);
    }

    SECTION("mixed charge agrees and splits additively") {
        const wedge::MomentumGrid grid(1, 1.0, 48.0, 8192);
        const wedge::EntropyReport momentum =
            wedge::entropy_momentum_route(mixed_hk(), grid);
        const wedge::EntropyReport closed =
            wedge::entropy_closed_form(mixed_hk(), 1.0);
        check_relative(momentum.total, closed.total, 1e-2);
        CHECK(std::fabs(momentum.total - closed.total) <=
              momentum.error_estimate);
        CHECK(momentum.total ==
              momentum.field_term + momentum.momentum_total);

        // Part-wise evaluation differs only by truncation-mode systematics
        // inside the quoted error budgets.
        const wedge::TimeZeroCharge h_only{1, mixed_hk().field_terms, {}};
        const wedge::TimeZeroCharge k_only{1, {}, mixed_hk().momentum_terms};
        const wedge::EntropyReport h_part =
            wedge::entropy_momentum_route(h_only, grid);
        const wedge::EntropyReport k_part =
            wedge::entropy_momentum_route(k_only, grid);
        CHECK(std::fabs(momentum.total - (h_part.total + k_part.total)) <=
              momentum.error_estimate + h_part.error_estimate +
                  k_part.error_estimate);
    }
}

TEST_CASE("raw on-shell data route", "[entropy][momentum]") {
    const wedge::MomentumGrid grid(1, 1.0, 16.0, 2048);
    const wedge::TimeZeroCharge both{
        1, {{1.0, {2.0}, 1.0}}, {{1.0, {2.0}, 1.0}}};

    const wedge::OnShellData data =
        wedge::to_onshell(both, grid, wedge::TruncationMode::Full);
    const wedge::EntropyReport raw = wedge::entropy_momentum_route(data);
    const wedge::EntropyReport aware =
        wedge::entropy_momentum_route(both, grid);

    // The combined quadrature equals the part-wise sum up to the (tiny)
    // discretization residue of the cross term.
    check_relative(raw.total, aware.total, 1e-9);
    CHECK(std::isnan(raw.momentum_bulk));
    CHECK(std::isnan(raw.boundary_term));
    CHECK(raw.grid_points == 2048);

    wedge::OnShellData truncated = data;
    truncated.samples.pop_back();
    CHECK_THROWS_AS(wedge::entropy_momentum_route(truncated),
                    std::invalid_argument);
}

TEST_CASE("cross term vanishes for real charges", "[entropy][momentum]") {
    const wedge::MomentumGrid grid(1, 1.0, 48.0, 8192);

    SECTION("single-part charges are exactly zero") {
        CHECK(wedge::cross_term(interior_h(), grid) == 0.0);
        CHECK(wedge::cross_term(interior_k(), grid) == 0.0);
    }

    SECTION("interior pair") {
        const wedge::TimeZeroCharge both{
            1, {{1.0, {2.0}, 1.0}}, {{1.0, {2.0}, 1.0}}};
        const double total = wedge::entropy_closed_form(both, 1.0).total;
        CHECK(std::fabs(wedge::cross_term(both, grid)) < 1e-6 * total);
    }

    SECTION("boundary-centered pair") {
        const wedge::TimeZeroCharge both{
            1, {{1.0, {0.0}, 1.0}}, {{1.0, {0.0}, 1.0}}};
        const double total = wedge::entropy_closed_form(both, 1.0).total;
        CHECK(std::fabs(wedge::cross_term(both, grid)) < 1e-3 * total);
    }

    SECTION("dimension mismatch") {
        CHECK_THROWS_AS(wedge::cross_term(interior_h_d2(), grid),
                        std::invalid_argument);
    }
}

TEST_CASE("relative entropy between two coherent charges", "[entropy]") {
    SECTION("identical charges give exactly zero") {
        CHECK(wedge::relative_entropy_between(mixed_hk(), mixed_hk(), 1.0) ==
              0.0);
    }

    SECTION("vacuum target reduces to the vacuum entropy") {
        const wedge::TimeZeroCharge vacuum{1, {}, {}};
        CHECK(wedge::relative_entropy_between(interior_h(), vacuum, 1.0) ==
              wedge::entropy_closed_form(interior_h(), 1.0).total);
    }

    SECTION("translated bump pair, cross-checked by the momentum route") {
        const wedge::TimeZeroCharge at2 = h_charge(1.0, 2.0, 1.0);
        const wedge::TimeZeroCharge at3 = h_charge(1.0, 3.0, 1.0);
        const double value =
            wedge::relative_entropy_between(at2, at3, 1.0);

        const wedge::TimeZeroCharge difference{
            1, {{1.0, {3.0}, 1.0}, {-1.0, {2.0}, 1.0}}, {}};
        CHECK(value ==
              wedge::entropy_closed_form(difference, 1.0).total);

        const wedge::MomentumGrid grid(1, 1.0, 48.0, 8192);
        const wedge::EntropyReport momentum =
            wedge::entropy_momentum_route(difference, grid);
        check_relative(momentum.total, value, 1e-2);
        CHECK(std::fabs(momentum.total - value) <= momentum.error_estimate);
        CHECK(value > 0.0);
    }

    SECTION("dimension mismatch") {
        CHECK_THROWS_AS(
            wedge::relative_entropy_between(interior_h(), interior_h_d2(),
                                            1.0),
            std::invalid_argument);
    }
}

TEST_CASE("boundary decomposition of momentum-only charges", "[entropy]") {
    SECTION("zero charge") {
        const auto [bulk, boundary] =
            wedge::boundary_decomposition({1, {}, {}}, 1.0);
        CHECK(bulk == 0.0);
        CHECK(boundary == 0.0);
    }

    SECTION("unit Gaussian on the edge") {
        const auto [bulk, boundary] =
            wedge::boundary_decomposition(boundary_k(), 1.0);
        check_absolute(boundary, kPi, 1e-10);
        check_absolute(bulk, -0.25 * kPi, 1e-10);
        check_absolute(bulk + boundary, 0.75 * kPi, 1e-10);
    }

    SECTION("interior charge: sum reproduces the gradient form") {
        const auto [bulk, boundary] =
            wedge::boundary_decomposition(interior_k(), 1.0);
        const double gradient_form =
            wedge::entropy_closed_form(interior_k(), 1.0).momentum_total;
        check_relative(bulk + boundary, gradient_form, 1e-8);
    }

    SECTION("field part rejected") {
        CHECK_THROWS_AS(wedge::boundary_decomposition(mixed_hk(), 1.0),
                        std::invalid_argument);
    }
}

TEST_CASE("truncation recommendation follows the two-width rule",
          "[entropy]") {
    CHECK(wedge::recommended_truncation(interior_h()) ==
          wedge::TruncationMode::Full);
    CHECK(wedge::recommended_truncation(boundary_k()) ==
          wedge::TruncationMode::WedgeHalfSpace);
    CHECK(wedge::recommended_truncation(mixed_hk()) ==
          wedge::TruncationMode::WedgeHalfSpace);
    CHECK(wedge::recommended_truncation(h_charge(1.0, 1.9, 1.0)) ==
          wedge::TruncationMode::WedgeHalfSpace);
    // Translating the wedge moves an interior charge onto the edge.
    CHECK(wedge::recommended_truncation(
              wedge::shift_charge(interior_h(), 1.5)) ==
          wedge::TruncationMode::WedgeHalfSpace);
}

TEST_CASE("mass and dimension validation", "[entropy]") {
    CHECK_THROWS_AS(wedge::entropy_closed_form(interior_h(), 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(wedge::entropy_closed_form(interior_h(), -1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(wedge::entropy_density_integral(interior_h(), 0.0),
                    std::invalid_argument);
    CHECK_NOTHROW(wedge::entropy_closed_form(interior_k_d2(), 0.0));

    const wedge::MomentumGrid grid(1, 1.0, 8.0, 128);
    CHECK_THROWS_AS(wedge::entropy_momentum_route(interior_h_d2(), grid),
                    std::invalid_argument);
}
