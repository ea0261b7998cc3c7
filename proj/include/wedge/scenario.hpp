// Scenario configuration: a versioned JSON schema describing a charge, a
// momentum grid with an optional refinement ladder, translated-wedge
// offsets, requested routes, optional sweep instructions, and output file
// names.  Parsing is strict: unknown keys anywhere in the document are
// rejected so committed fixtures cannot silently rot.

#pragma once

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wedge/charges.hpp"
#include "wedge/entropy.hpp"
#include "wedge/grid.hpp"

namespace wedge {

/// Raised for any malformed, unknown-key, or precondition-violating config.
class ScenarioError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class SweepParameter { None, Center1, Mass };

struct ScenarioConfig {
    int dimension = 1;
    double mass = 1.0;
    TimeZeroCharge charge;
    double half_extent = 0.0;
    int points_per_axis = 0;
    std::vector<double> refinement_ladder = {1.0};
    std::vector<double> wedge_offsets = {0.0};
    bool run_closed_form = true;
    bool run_momentum = true;
    std::string report_name = "entropy_report.json";
    std::string table_name = "entropy_table.csv";
    SweepParameter sweep_parameter = SweepParameter::None;
    std::vector<double> sweep_values;
};

namespace detail {

using json = nlohmann::json;

inline void require_keys(const json& object, const std::string& where,
                         const std::set<std::string>& allowed) {
    if (!object.is_object()) {
        throw ScenarioError(where + " must be a JSON object");
    }
    for (const auto& item : object.items()) {
        if (allowed.find(item.key()) == allowed.end()) {
            throw ScenarioError("unknown key \"" + item.key() + "\" in " +
                                where);
        }
    }
}

inline double finite_number(const json& value, const std::string& where) {
    if (!value.is_number()) {
        throw ScenarioError(where + " must be a number");
    }
    const double number = value.get<double>();
    if (!std::isfinite(number)) {
        throw ScenarioError(where + " must be finite");
    }
    return number;
}

inline int integer_number(const json& value, const std::string& where) {
    if (!value.is_number_integer()) {
        throw ScenarioError(where + " must be an integer");
    }
    return value.get<int>();
}

inline std::vector<double> number_list(const json& value,
                                       const std::string& where) {
    if (!value.is_array()) {
        throw ScenarioError(where + " must be an array of numbers");
    }
    std::vector<double> numbers;
    numbers.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
        numbers.push_back(
            finite_number(value[i], where + "[" + std::to_string(i) + "]"));
    }
    return numbers;
}

inline std::vector<GaussianTerm> term_list(const json& value, int dimension,
                                           const std::string& where) {
    if (!value.is_array()) {
        throw ScenarioError(where + " must be an array of terms");
    }
    std::vector<GaussianTerm> terms;
    terms.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
        const std::string label = where + "[" + std::to_string(i) + "]";
        const json& entry = value[i];
        require_keys(entry, label, {"amplitude", "center", "width"});
        if (!entry.contains("amplitude") || !entry.contains("center") ||
            !entry.contains("width")) {
            throw ScenarioError(label +
                                " needs amplitude, center, and width");
        }
        GaussianTerm term;
        term.amplitude = finite_number(entry["amplitude"],
                                       label + ".amplitude");
        term.center = number_list(entry["center"], label + ".center");
        term.width = finite_number(entry["width"], label + ".width");
        if (static_cast<int>(term.center.size()) != dimension) {
            throw ScenarioError(label + ".center must have " +
                                std::to_string(dimension) + " components");
        }
        terms.push_back(std::move(term));
    }
    return terms;
}

}  // namespace detail

/// Parses and fully validates a scenario document.  Every module
/// precondition (charge validity, grid constraints, the excluded
/// one-dimensional massless case) is checked here, before any computation.
inline ScenarioConfig parse_scenario(const nlohmann::json& document) {
    using detail::finite_number;
    using detail::integer_number;
    using detail::number_list;
    using detail::require_keys;

    require_keys(document, "scenario",
                 {"schema", "dimension", "mass", "charge", "grid",
                  "wedge_offsets", "routes", "output", "sweep"});
    if (!document.contains("schema") ||
        !document["schema"].is_number_integer() ||
        document["schema"].get<int>() != 1) {
        throw ScenarioError("config must declare \"schema\": 1");
    }

    ScenarioConfig config;
    if (!document.contains("dimension") || !document.contains("mass")) {
        throw ScenarioError("config needs dimension and mass");
    }
    config.dimension = integer_number(document["dimension"], "dimension");
    config.mass = finite_number(document["mass"], "mass");

    config.charge.dimension = config.dimension;
    if (document.contains("charge")) {
        const auto& charge = document["charge"];
        require_keys(charge, "charge", {"field_terms", "momentum_terms"});
        if (charge.contains("field_terms")) {
            config.charge.field_terms = detail::term_list(
                charge["field_terms"], config.dimension, "field_terms");
        }
        if (charge.contains("momentum_terms")) {
            config.charge.momentum_terms = detail::term_list(
                charge["momentum_terms"], config.dimension,
                "momentum_terms");
        }
    }

    if (!document.contains("grid")) {
        throw ScenarioError("config needs a grid section");
    }
    const auto& grid = document["grid"];
    require_keys(grid, "grid",
                 {"half_extent", "points_per_axis", "refinement_ladder"});
    if (!grid.contains("half_extent") || !grid.contains("points_per_axis")) {
        throw ScenarioError("grid needs half_extent and points_per_axis");
    }
    config.half_extent = finite_number(grid["half_extent"],
                                       "grid.half_extent");
    config.points_per_axis =
        integer_number(grid["points_per_axis"], "grid.points_per_axis");
    if (grid.contains("refinement_ladder")) {
        config.refinement_ladder =
            number_list(grid["refinement_ladder"], "grid.refinement_ladder");
        if (config.refinement_ladder.empty()) {
            throw ScenarioError("refinement_ladder must not be empty");
        }
        for (double scale : config.refinement_ladder) {
            if (!(scale > 0.0)) {
                throw ScenarioError("refinement scales must be positive");
            }
        }
    }

    if (document.contains("wedge_offsets")) {
        config.wedge_offsets =
            number_list(document["wedge_offsets"], "wedge_offsets");
        if (config.wedge_offsets.empty()) {
            throw ScenarioError("wedge_offsets must not be empty");
        }
    }

    if (document.contains("routes")) {
        const auto& routes = document["routes"];
        if (!routes.is_array() || routes.empty()) {
            throw ScenarioError("routes must be a non-empty array");
        }
        config.run_closed_form = false;
        config.run_momentum = false;
        for (const auto& route : routes) {
            if (!route.is_string()) {
                throw ScenarioError("routes entries must be strings");
            }
            const std::string name = route.get<std::string>();
            if (name == "closed_form") {
                config.run_closed_form = true;
            } else if (name == "momentum") {
                config.run_momentum = true;
            } else {
                throw ScenarioError("unknown route \"" + name + "\"");
            }
        }
    }

    if (document.contains("output")) {
        const auto& output = document["output"];
        require_keys(output, "output", {"report", "table"});
        if (output.contains("report")) {
            if (!output["report"].is_string()) {
                throw ScenarioError("output.report must be a string");
            }
            config.report_name = output["report"].get<std::string>();
        }
        if (output.contains("table")) {
            if (!output["table"].is_string()) {
                throw ScenarioError("output.table must be a string");
            }
            config.table_name = output["table"].get<std::string>();
        }
    }

    if (document.contains("sweep")) {
        const auto& sweep = document["sweep"];
        require_keys(sweep, "sweep", {"parameter", "values"});
        if (!sweep.contains("parameter") || !sweep["parameter"].is_string()) {
            throw ScenarioError("sweep needs a string parameter");
        }
        const std::string parameter = sweep["parameter"].get<std::string>();
        if (parameter == "center1") {
            config.sweep_parameter = SweepParameter::Center1;
        } else if (parameter == "mass") {
            config.sweep_parameter = SweepParameter::Mass;
        } else {
            throw ScenarioError("unknown sweep parameter \"" + parameter +
                                "\"");
        }
        if (!sweep.contains("values")) {
            throw ScenarioError("sweep needs a values array");
        }
        config.sweep_values = number_list(sweep["values"], "sweep.values");
    }

    // Module preconditions, checked before any computation: charge
    // validity, the excluded one-dimensional massless case, and the grid
    // constraints (probed by constructing the base grid once).
    try {
        validate_charge(config.charge);
        detail::validate_mass_dimension(config.dimension, config.mass);
        const MomentumGrid probe(config.dimension, config.mass,
                                 config.half_extent,
                                 config.points_per_axis);
        (void)probe;
    } catch (const std::invalid_argument& error) {
        throw ScenarioError(error.what());
    } catch (const std::length_error& error) {
        throw ScenarioError(error.what());
    }
    return config;
}

/// Loads a scenario file from disk.
inline ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) {
        throw ScenarioError("cannot open config file: " + path);
    }
    nlohmann::json document;
    try {
        document = nlohmann::json::parse(stream);
    } catch (const nlohmann::json::parse_error& error) {
        throw ScenarioError(std::string("config is not valid JSON: ") +
                            error.what());
    }
    return parse_scenario(document);
}

}  // namespace wedge
