#include "infotransfer/scenario.hpp"

#include "infotransfer/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace infotransfer {

using Json = nlohmann::ordered_json;

Scenario::Scenario(std::string name_, ModelSpace model_space_, ObservationModel observation_model_,
                   std::map<std::string, std::string> metadata_)
    : name(std::move(name_)),
      model_space(std::move(model_space_)),
      observation_model(std::move(observation_model_)),
      metadata(std::move(metadata_)) {
    require_compatible(model_space, observation_model);
}

std::string_view to_string(HostPolicy p) {
    return p == HostPolicy::standard ? "standard" : "forgetful";
}

HostPolicy parse_host_policy(std::string_view text) {
    if (text == "standard") return HostPolicy::standard;
    if (text == "forgetful") return HostPolicy::forgetful;
    throw ParseError("unknown host policy '" + std::string(text) + "' (expected standard or forgetful)");
}

std::vector<std::string> door_labels(int door_count) {
    std::vector<std::string> labels;
    for (int d = 1; d <= door_count; ++d) {
        labels.push_back(d <= 3 ? std::string(1, static_cast<char>('A' + d - 1)) : "D" + std::to_string(d));
    }
    return labels;
}

std::string host_opens(std::string_view door, bool reveals_car) {
    return "Monty_" + std::string(door) + (reveals_car ? "_car" : "");
}

Scenario mhp_scenario(const MhpConfig& cfg) {
    if (cfg.door_count < 3) {
        throw InvariantError("Monty Hall needs at least 3 doors, got " + std::to_string(cfg.door_count));
    }
    const auto doors = door_labels(cfg.door_count);
    if (cfg.prior.labels() != doors) {
        throw InvariantError("prior must be over doors " + doors.front() + ".." + doors.back() + " in order");
    }
    const auto pick_it = std::find(doors.begin(), doors.end(), cfg.contestant_pick);
    if (pick_it == doors.end()) {
        throw InvariantError("contestant pick '" + cfg.contestant_pick + "' is not a door");
    }
    const std::size_t pick = static_cast<std::size_t>(pick_it - doors.begin());
    const std::size_t n = doors.size();

    std::vector<std::string> observations;
    std::vector<std::vector<Probability>> likelihood;
    // rows: host opens door d (d != pick) revealing a goat
    for (std::size_t d = 0; d < n; ++d) {
        if (d == pick) continue;
        std::vector<Probability> row;
        for (std::size_t car = 0; car < n; ++car) {
            if (car == d) {
                row.emplace_back(0, 1);
            } else if (cfg.host_policy == HostPolicy::forgetful || car == pick) {
                row.emplace_back(1, static_cast<long long>(n - 1));
            } else {
                row.emplace_back(1, static_cast<long long>(n - 2));
            }
        }
        observations.push_back(host_opens(doors[d]));
        likelihood.push_back(std::move(row));
    }
    if (cfg.host_policy == HostPolicy::forgetful) {
        for (std::size_t d = 0; d < n; ++d) {
            if (d == pick) continue;
            std::vector<Probability> row;
            for (std::size_t car = 0; car < n; ++car) {
                row.emplace_back(car == d ? 1 : 0, static_cast<long long>(car == d ? n - 1 : 1));
            }
            observations.push_back(host_opens(doors[d], true));
            likelihood.push_back(std::move(row));
        }
    }

    std::map<std::string, std::string> metadata{
        {"doors", std::to_string(n)},
        {"pick", cfg.contestant_pick},
        {"policy", std::string(to_string(cfg.host_policy))},
    };
    return Scenario("mhp-" + std::to_string(n) + "-doors", ModelSpace(cfg.prior),
                    ObservationModel(std::move(observations), doors, std::move(likelihood)), std::move(metadata));
}

namespace {

Scenario named(Scenario s, std::string name, std::string variant) {
    s.name = std::move(name);
    s.metadata["variant"] = std::move(variant);
    return s;
}

} // namespace

Scenario traditional_mhp() { return named(mhp_scenario(MhpConfig{}), "traditional-mhp", "traditional"); }

Scenario biased_mhp() {
    MhpConfig cfg;
    cfg.prior = Distribution(door_labels(3), {Probability(1, 2), Probability(1, 3), Probability(1, 6)});
    return named(mhp_scenario(cfg), "biased-mhp", "biased");
}

Scenario forgetful_mhp() {
    MhpConfig cfg;
    cfg.host_policy = HostPolicy::forgetful;
    return named(mhp_scenario(cfg), "forgetful-mhp", "forgetful");
}

namespace {

Json probability_to_json(const Probability& p) {
    if (p.is_exact()) return p.to_string();
    return p.to_double();
}

std::size_t line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

void require_keys(const Json& obj, const std::string& where, const std::set<std::string>& allowed,
                  const std::set<std::string>& required) {
    if (!obj.is_object()) {
        throw ParseError(where + ": expected an object");
    }
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.count(key)) {
            throw ParseError(where + ": unknown key '" + key + "'");
        }
    }
    for (const auto& key : required) {
        if (!obj.contains(key)) {
            throw ParseError(where + ": missing key '" + key + "'");
        }
    }
}

std::string string_field(const Json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": expected a string");
    return j.get<std::string>();
}

const Json& array_field(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    return j;
}

Probability probability_field(const Json& j, const std::string& where) {
    try {
        if (j.is_number()) return Probability(Number(j.get<double>()));
        if (j.is_string()) return Probability(parse_number(j.get<std::string>()));
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    } catch (const DomainError& e) {
        throw InvariantError(where + ": " + e.what());
    }
    throw ParseError(where + ": expected a number or a \"num/den\" string");
}

} // namespace

std::string scenario_to_json(const Scenario& s) {
    Json doc;
    doc["name"] = s.name;
    Json models = Json::array();
    const auto& prior = s.model_space.prior();
    for (std::size_t m = 0; m < prior.size(); ++m) {
        models.push_back(Json{{"label", prior.labels()[m]}, {"prior", probability_to_json(prior[m])}});
    }
    doc["models"] = std::move(models);
    doc["observations"] = s.observation_model.observation_labels();
    Json rows = Json::array();
    for (const auto& row : s.observation_model.likelihood()) {
        Json r = Json::array();
        for (const auto& p : row) r.push_back(probability_to_json(p));
        rows.push_back(std::move(r));
    }
    doc["likelihood"] = std::move(rows);
    Json meta = Json::object();
    for (const auto& [k, v] : s.metadata) meta[k] = v;
    doc["metadata"] = std::move(meta);
    return doc.dump(2) + "\n";
}

Scenario scenario_from_json(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), line_of(text, e.byte == 0 ? 0 : e.byte - 1));
    }
    require_keys(doc, "scenario", {"name", "models", "observations", "likelihood", "metadata"},
                 {"name", "models", "observations", "likelihood"});

    std::string name = string_field(doc["name"], "name");

    std::vector<std::string> model_labels;
    std::vector<Probability> priors;
    const auto& models = array_field(doc["models"], "models");
    for (std::size_t i = 0; i < models.size(); ++i) {
        const std::string where = "models[" + std::to_string(i) + "]";
        require_keys(models[i], where, {"label", "prior"}, {"label", "prior"});
        model_labels.push_back(string_field(models[i]["label"], where + ".label"));
        priors.push_back(probability_field(models[i]["prior"], where + ".prior"));
    }

    std::vector<std::string> observations;
    const auto& obs = array_field(doc["observations"], "observations");
    for (std::size_t i = 0; i < obs.size(); ++i) {
        observations.push_back(string_field(obs[i], "observations[" + std::to_string(i) + "]"));
    }

    std::vector<std::vector<Probability>> likelihood;
    const auto& rows = array_field(doc["likelihood"], "likelihood");
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string where = "likelihood[" + std::to_string(r) + "]";
        const auto& row = array_field(rows[r], where);
        std::vector<Probability> parsed;
        for (std::size_t c = 0; c < row.size(); ++c) {
            parsed.push_back(probability_field(row[c], where + "[" + std::to_string(c) + "]"));
        }
        likelihood.push_back(std::move(parsed));
    }

    std::map<std::string, std::string> metadata;
    if (doc.contains("metadata")) {
        const auto& meta = doc["metadata"];
        if (!meta.is_object()) throw ParseError("metadata: expected an object");
        for (const auto& [k, v] : meta.items()) {
            if (v.is_string()) {
                metadata[k] = v.get<std::string>();
            } else if (v.is_primitive() && !v.is_null()) {
                metadata[k] = v.dump();
            } else {
                throw ParseError("metadata." + k + ": expected a scalar value");
            }
        }
    }

    try {
        ModelSpace ms(Distribution(model_labels, std::move(priors)));
        ObservationModel om(std::move(observations), std::move(model_labels), std::move(likelihood));
        return Scenario(std::move(name), std::move(ms), std::move(om), std::move(metadata));
    } catch (const InvariantError& e) {
        throw InvariantError("scenario '" + name + "': " + e.what());
    }
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path.string() + "' for writing");
    out << scenario_to_json(s);
    if (!out) throw Error("failed writing '" + path.string() + "'");
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return scenario_from_json(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

} // namespace infotransfer
