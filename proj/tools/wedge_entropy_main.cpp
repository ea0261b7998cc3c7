// Batch front end: `entropy` runs the closed-form and momentum routes over
// the configured offsets and writes JSON + CSV reports; `validate` runs the
// property suites on the configured charge; `oracle` cross-checks the
// one-particle vector entropy against the truncated-Fock Araki value and
// the closed form; `sweep` tabulates closed-form totals over a swept
// parameter.  Exit codes: 0 success, 2 invalid input or config, 3 a
// computed result failed its agreement guard.  stdout carries deterministic
// summaries; stderr carries diagnostics only.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "wedge/entropy.hpp"
#include "wedge/fock.hpp"
#include "wedge/io.hpp"
#include "wedge/modular.hpp"
#include "wedge/scenario.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitGuardFailed = 3;

/// --grid-scale s multiplies the half extent by s and the per-axis point
/// count by s^2 (so the spacing shrinks by 1/s while the box grows by s),
/// rounding the point count up to the next even integer.
wedge::MomentumGrid scaled_grid(const wedge::ScenarioConfig& config,
                                double scale) {
    long long points = std::llround(
        static_cast<double>(config.points_per_axis) * scale * scale);
    if (points % 2 != 0) ++points;
    points = std::max<long long>(points, 8);
    return wedge::MomentumGrid(config.dimension, config.mass,
                               config.half_extent * scale,
                               static_cast<int>(points));
}

std::string output_path(const std::string& out_dir,
                        const std::string& name) {
    std::filesystem::create_directories(out_dir);
    return (std::filesystem::path(out_dir) / name).string();
}

void print_report_line(const wedge::EntropyReport& report) {
    std::cout << "offset=" << wedge::io::format_json_number(report.wedge_offset)
              << " route=" << wedge::io::route_name(report.route)
              << " total=" << wedge::io::format_json_number(report.total)
              << " error_estimate="
              << wedge::io::format_json_number(report.error_estimate) << "\n";
}

int run_entropy(const wedge::ScenarioConfig& config,
                const std::string& out_dir, double grid_scale) {
    std::vector<wedge::EntropyReport> reports;
    bool disagreement = false;
    std::string disagreement_detail;

    for (double offset : config.wedge_offsets) {
        wedge::EntropyReport closed;
        wedge::EntropyReport momentum;
        if (config.run_closed_form) {
            closed = wedge::entropy_closed_form(config.charge, config.mass,
                                                offset);
            reports.push_back(closed);
        }
        if (config.run_momentum) {
            const wedge::MomentumGrid grid = scaled_grid(config, grid_scale);
            momentum =
                wedge::entropy_momentum_route(config.charge, grid, offset);
            reports.push_back(momentum);
        }
        if (config.run_closed_form && config.run_momentum) {
            const double difference =
                std::fabs(closed.total - momentum.total);
            const double tolerance =
                std::max(momentum.error_estimate,
                         0.01 * std::fabs(closed.total)) +
                1e-12;
            if (difference > tolerance) {
                disagreement = true;
                disagreement_detail =
                    "offset " + wedge::io::format_json_number(offset) +
                    ": |closed - momentum| = " +
                    wedge::io::format_json_number(difference) +
                    " exceeds tolerance " +
                    wedge::io::format_json_number(tolerance);
            }
        }
    }

    std::string json = "{\n  \"schema\": 1,\n  \"reports\": [\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        json += "    " + wedge::io::entropy_report_json(reports[i], "    ");
        json += (i + 1 < reports.size()) ? ",\n" : "\n";
    }
    json += "  ]\n}\n";
    wedge::io::write_file(output_path(out_dir, config.report_name), json);

    wedge::io::CsvTable table;
    table.header = wedge::io::entropy_csv_header();
    for (const wedge::EntropyReport& report : reports) {
        table.rows.push_back(wedge::io::entropy_report_csv_row(report));
    }
    wedge::io::write_file(output_path(out_dir, config.table_name),
                          table.serialize());

    for (const wedge::EntropyReport& report : reports) {
        print_report_line(report);
    }
    if (disagreement) {
        std::cerr << "route disagreement: " << disagreement_detail << "\n";
        return kExitGuardFailed;
    }
    return kExitSuccess;
}

int run_sweep(const wedge::ScenarioConfig& config,
              const std::string& out_dir) {
    if (config.sweep_parameter == wedge::SweepParameter::None) {
        std::cerr << "config error: sweep command needs a sweep section\n";
        return kExitBadInput;
    }
    const double offset = config.wedge_offsets.front();
    wedge::io::CsvTable table;
    table.header = {"value",         "field_term", "momentum_bulk",
                    "boundary_term", "total",      "error_estimate"};
    for (double value : config.sweep_values) {
        wedge::TimeZeroCharge charge = config.charge;
        double mass = config.mass;
        if (config.sweep_parameter == wedge::SweepParameter::Center1) {
            for (auto* terms : {&charge.field_terms, &charge.momentum_terms}) {
                for (wedge::GaussianTerm& term : *terms) {
                    term.center[0] = value;
                }
            }
        } else {
            mass = value;
        }
        const wedge::EntropyReport report =
            wedge::entropy_closed_form(charge, mass, offset);
        table.rows.push_back({wedge::io::format_csv_number(value),
                              wedge::io::format_csv_number(report.field_term),
                              wedge::io::format_csv_number(report.momentum_bulk),
                              wedge::io::format_csv_number(report.boundary_term),
                              wedge::io::format_csv_number(report.total),
                              wedge::io::format_csv_number(
                                  report.error_estimate)});
        std::cout << "value=" << wedge::io::format_json_number(value)
                  << " total=" << wedge::io::format_json_number(report.total)
                  << "\n";
    }
    wedge::io::write_file(output_path(out_dir, config.table_name),
                          table.serialize());
    return kExitSuccess;
}

struct PropertyResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = true;
};

int run_validate(const wedge::ScenarioConfig& config, double grid_scale,
                 std::uint64_t seed) {
    std::vector<PropertyResult> results;
    auto add = [&results](const std::string& name, double residual,
                          double tolerance) {
        results.push_back({name, residual, tolerance,
                           residual <= tolerance});
    };

    const wedge::TimeZeroCharge& charge = config.charge;
    const double mass = config.mass;
    const wedge::EntropyReport baseline =
        wedge::entropy_closed_form(charge, mass, 0.0);

    // Quadratic scaling: tripled amplitudes must give 9x the total.
    {
        wedge::TimeZeroCharge scaled = charge;
        for (auto* terms : {&scaled.field_terms, &scaled.momentum_terms}) {
            for (wedge::GaussianTerm& term : *terms) {
                term.amplitude *= 3.0;
            }
        }
        const double expected = 9.0 * baseline.total;
        const double actual =
            wedge::entropy_closed_form(scaled, mass, 0.0).total;
        const double residual =
            expected == 0.0 ? std::fabs(actual)
                            : std::fabs(actual - expected) / expected;
        add("quadratic_scaling", residual, 1e-12);
    }

    // Additivity of the field-only and momentum-only entropies.
    {
        const wedge::TimeZeroCharge h_only{config.dimension,
                                           charge.field_terms, {}};
        const wedge::TimeZeroCharge k_only{config.dimension,
                                           {},
                                           charge.momentum_terms};
        const double parts =
            wedge::entropy_closed_form(h_only, mass, 0.0).total +
            wedge::entropy_closed_form(k_only, mass, 0.0).total;
        const double scale = std::max(baseline.total, 1e-30);
        add("additivity", std::fabs(baseline.total - parts) / scale, 1e-10);
    }

    // Integration-by-parts identity on the momentum part.
    if (!charge.momentum_terms.empty()) {
        const double decomposed =
            baseline.momentum_bulk + baseline.boundary_term;
        add("boundary_identity",
            std::fabs(decomposed - baseline.momentum_total) /
                std::max(baseline.momentum_total, 1e-30),
            1e-8);
    }

    // Totals nonincreasing across the configured offsets.
    {
        std::vector<double> offsets = config.wedge_offsets;
        std::sort(offsets.begin(), offsets.end());
        const auto scan =
            wedge::wedge_monotonicity_scan(charge, mass, offsets);
        double worst_increase = 0.0;
        for (std::size_t i = 1; i < scan.size(); ++i) {
            worst_increase = std::max(
                worst_increase, scan[i].second - scan[i - 1].second);
        }
        add("wedge_monotonicity", worst_increase,
            1e-10 * std::max(1.0, baseline.total));
    }

    if (config.run_momentum) {
        for (double offset : config.wedge_offsets) {
            const wedge::MomentumGrid grid = scaled_grid(config, grid_scale);
            const wedge::EntropyReport closed =
                wedge::entropy_closed_form(charge, mass, offset);
            const wedge::EntropyReport momentum =
                wedge::entropy_momentum_route(charge, grid, offset);
            add("route_equivalence(offset=" +
                    std::string(wedge::io::format_json_number(offset)) + ")",
                std::fabs(closed.total - momentum.total),
                std::max(momentum.error_estimate,
                         0.01 * std::fabs(closed.total)) +
                    1e-12);
        }
        if (!charge.field_terms.empty() && !charge.momentum_terms.empty()) {
            const wedge::MomentumGrid grid = scaled_grid(config, grid_scale);
            add("cross_term",
                std::fabs(wedge::cross_term(charge, grid)),
                1e-3 * std::max(baseline.total, 1e-30));
        }
        if (config.refinement_ladder.size() >= 2) {
            std::vector<double> estimates;
            for (double ladder_scale : config.refinement_ladder) {
                const wedge::MomentumGrid grid =
                    scaled_grid(config, grid_scale * ladder_scale);
                estimates.push_back(
                    wedge::entropy_momentum_route(charge, grid, 0.0)
                        .error_estimate);
            }
            double worst = -1e300;
            for (std::size_t i = 1; i < estimates.size(); ++i) {
                worst = std::max(worst, estimates[i] - estimates[i - 1]);
            }
            add("error_ladder", worst, 0.0);
        }
    }

    // Tomita-relation suite on seeded random standard subspaces.
    {
        double worst = 0.0;
        for (std::uint64_t draw = 0; draw < 50; ++draw) {
            const int n = 1 + static_cast<int>(draw % 4);
            const wedge::FiniteStandardSubspace K =
                wedge::random_standard_subspace(n, seed + draw);
            const wedge::ModularData data =
                wedge::modular_operator(wedge::tomita_operator(K));
            const Eigen::MatrixXd identity =
                Eigen::MatrixXd::Identity(2 * n, 2 * n);
            worst = std::max(
                worst, (data.S_real * data.S_real - identity).norm());
            worst = std::max(worst,
                             (data.Delta_real * K.space.Jc -
                              K.space.Jc * data.Delta_real)
                                     .norm() /
                                 data.Delta_real.norm());
            const Eigen::MatrixXd delta_inverse = data.Delta_real.inverse();
            worst = std::max(worst, (data.J_real * data.Delta_real *
                                         data.J_real -
                                     delta_inverse)
                                        .norm() /
                                        delta_inverse.norm());
        }
        add("tomita_relations", worst, 1e-8);
    }

    // Positivity across the configured offsets (strict for nonzero charges).
    {
        double min_total = baseline.total;
        for (double offset : config.wedge_offsets) {
            min_total = std::min(
                min_total,
                wedge::entropy_closed_form(charge, mass, offset).total);
        }
        double violation = 0.0;
        if (wedge::is_zero_charge(charge)) {
            violation = std::fabs(min_total);
        } else if (!(min_total > 0.0)) {
            violation = std::max(-min_total, 1e-300);
        }
        add("positivity", violation, 0.0);
    }

    bool all_pass = true;
    for (const PropertyResult& result : results) {
        std::cout << "property=" << result.name
                  << " status=" << (result.pass ? "pass" : "fail")
                  << " residual="
                  << wedge::io::format_json_number(result.residual)
                  << " tolerance="
                  << wedge::io::format_json_number(result.tolerance) << "\n";
        all_pass = all_pass && result.pass;
    }
    return all_pass ? kExitSuccess : kExitGuardFailed;
}

int run_oracle(double lambda, std::complex<double> z, int cutoff) {
    const wedge::FiniteStandardSubspace K =
        wedge::subspace_from_modular_data({lambda});
    Eigen::VectorXd h(4);
    const double root = std::sqrt(lambda);
    h << z.real(), root * z.real(), z.imag(), -root * z.imag();
    const double vector_value = wedge::vector_entropy(K, h);
    const double araki_value =
        wedge::coherent_araki_entropy(lambda, z, cutoff);
    const double closed_value =
        (1.0 - lambda) * (-std::log(lambda)) * std::norm(z);

    const double residual_va = std::fabs(vector_value - araki_value);
    const double residual_vc = std::fabs(vector_value - closed_value);
    const double residual_ac = std::fabs(araki_value - closed_value);
    const bool pass =
        residual_va < 1e-3 && residual_vc < 1e-3 && residual_ac < 1e-3;

    std::cout << "lambda=" << wedge::io::format_json_number(lambda) << "\n"
              << "z_re=" << wedge::io::format_json_number(z.real()) << "\n"
              << "z_im=" << wedge::io::format_json_number(z.imag()) << "\n"
              << "cutoff=" << cutoff << "\n"
              << "vector_entropy="
              << wedge::io::format_json_number(vector_value) << "\n"
              << "araki_entropy="
              << wedge::io::format_json_number(araki_value) << "\n"
              << "closed_form=" << wedge::io::format_json_number(closed_value)
              << "\n"
              << "residual_vector_araki="
              << wedge::io::format_json_number(residual_va) << "\n"
              << "residual_vector_closed="
              << wedge::io::format_json_number(residual_vc) << "\n"
              << "residual_araki_closed="
              << wedge::io::format_json_number(residual_ac) << "\n"
              << "agreement=" << (pass ? "pass" : "fail") << "\n";
    return pass ? kExitSuccess : kExitGuardFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vacuum relative entropy of coherent scalar-field states "
                 "on wedge regions"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    double grid_scale = 1.0;
    std::uint64_t seed = 24601;
    double lambda = 0.25;
    double z_re = 1.0;
    double z_im = 0.0;
    int cutoff = 30;

    CLI::App* entropy_cmd = app.add_subcommand(
        "entropy", "Entropy reports for a scenario (JSON + CSV)");
    entropy_cmd->add_option("--config", config_path, "scenario JSON file")
        ->required();
    entropy_cmd->add_option("--out", out_dir, "output directory");
    entropy_cmd
        ->add_option("--grid-scale", grid_scale,
                     "scale factor s: extent x s, points x s^2")
        ->check(CLI::PositiveNumber);

    CLI::App* validate_cmd = app.add_subcommand(
        "validate", "Property suites on the configured charge");
    validate_cmd->add_option("--config", config_path, "scenario JSON file")
        ->required();
    validate_cmd
        ->add_option("--grid-scale", grid_scale,
                     "scale factor s: extent x s, points x s^2")
        ->check(CLI::PositiveNumber);
    validate_cmd->add_option("--seed", seed,
                             "seed for the random standard subspaces");

    CLI::App* oracle_cmd = app.add_subcommand(
        "oracle",
        "Cross-check vector entropy, Fock-space Araki value, closed form");
    oracle_cmd->add_option("--lambda", lambda,
                           "modular eigenvalue in (0,1)");
    oracle_cmd->add_option("--z-re", z_re, "real part of the excitation");
    oracle_cmd->add_option("--z-im", z_im, "imaginary part of the excitation");
    oracle_cmd->add_option("--cutoff", cutoff, "Fock truncation level");

    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "Closed-form totals over a swept parameter (CSV)");
    sweep_cmd->add_option("--config", config_path, "scenario JSON file")
        ->required();
    sweep_cmd->add_option("--out", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return kExitBadInput;
    }

    try {
        if (entropy_cmd->parsed()) {
            return run_entropy(wedge::load_scenario(config_path), out_dir,
                               grid_scale);
        }
        if (validate_cmd->parsed()) {
            return run_validate(wedge::load_scenario(config_path),
                                grid_scale, seed);
        }
        if (oracle_cmd->parsed()) {
            return run_oracle(lambda, {z_re, z_im}, cutoff);
        }
        if (sweep_cmd->parsed()) {
            return run_sweep(wedge::load_scenario(config_path), out_dir);
        }
    } catch (const wedge::ScenarioError& error) {
        std::cerr << "config error: " << error.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& error) {
        std::cerr << "invalid input: " << error.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
