#pragma once

#include "infotransfer/bayes_engine.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace infotransfer {

/// A model space paired with its observation model, plus free-form
/// annotations.
struct Scenario {
    /// Throws InvariantError if the likelihood columns do not match the models.
    Scenario(std::string name, ModelSpace model_space, ObservationModel observation_model,
             std::map<std::string, std::string> metadata = {});

    std::string name;
    ModelSpace model_space;
    ObservationModel observation_model;
    std::map<std::string, std::string> metadata;

    bool is_exact() const { return model_space.prior().is_exact() && observation_model.is_exact(); }

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

enum class HostPolicy {
    standard,  ///< host knows where the car is and always reveals a goat
    forgetful, ///< host opens a non-picked door at random
};

std::string_view to_string(HostPolicy p);
/// Throws ParseError for anything but "standard" / "forgetful".
HostPolicy parse_host_policy(std::string_view text);

/// Door labels: "A", "B", "C", then "D4", "D5", ...
std::vector<std::string> door_labels(int door_count);

struct MhpConfig {
    int door_count = 3;
    Distribution prior = Distribution::uniform(door_labels(3));
    std::string contestant_pick = "A";
    HostPolicy host_policy = HostPolicy::standard;
};

/// Observation label for the host opening `door`: "Monty_<door>", with a
/// "_car" suffix for the forgetful host revealing the car.
std::string host_opens(std::string_view door, bool reveals_car = false);

/// Models are car locations, observations are host actions. Throws
/// InvariantError for fewer than 3 doors, a prior over other labels, or an
/// unknown pick.
Scenario mhp_scenario(const MhpConfig& cfg);

/// Uniform prior, standard host, pick A.
Scenario traditional_mhp();
/// Car placed by a die roll: prior (1/2, 1/3, 1/6), standard host, pick A.
Scenario biased_mhp();
/// Uniform prior, forgetful host, pick A.
Scenario forgetful_mhp();

/// Serializes to the JSON scenario format. Exact probabilities are written
/// as "num/den" strings, floats as shortest round-trip JSON numbers.
std::string scenario_to_json(const Scenario& s);

/// Throws ParseError (with a line number for syntax errors and a field path
/// for structural ones) or InvariantError.
Scenario scenario_from_json(std::string_view text);

void save_scenario(const Scenario& s, const std::filesystem::path& path);
Scenario load_scenario(const std::filesystem::path& path);

} // namespace infotransfer
