#include "infotransfer/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace infotransfer::report {

const char* const kCsvHeader =
    "model,prior,prior_bits,evidence_bits,likelihood_bits,tic_bits,sign,posterior_bits,posterior_prob";

namespace {

using Json = nlohmann::ordered_json;

Json json_number(double v) {
    if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
    return v;
}

Json json_number(const std::optional<double>& v) {
    if (!v) return nullptr;
    return json_number(*v);
}

double clamp_display(double v) { return v < 0.0 ? 0.0 : v; }

/// Left-aligned columns separated by two spaces.
std::string align(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> widths;
    for (const auto& row : cells) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    std::string out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line.append(widths[c] - row[c].size() + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

} // namespace

std::string format_fixed(double v, int precision) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[512];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
    std::string s(buf, res.ptr);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

std::string format_full(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

ReportDocument solve(const Scenario& s, std::string_view observation) {
    const auto& ms = s.model_space;
    const auto& om = s.observation_model;
    const TransferReport tr = transfer_report(ms, om, observation);

    ReportDocument doc;
    doc.scenario = s.name;
    doc.observation = tr.observation;
    doc.evidence = tr.evidence.to_double();
    doc.evidence_bits = tr.evidence_info.value();
    for (const auto& e : tr.entries) {
        ReportRow row;
        row.model = e.model;
        row.prior = e.prior.to_double();
        row.prior_bits = e.prior_info.value();
        row.evidence_bits = tr.evidence_info.value();
        row.likelihood_bits = e.likelihood_info.value();
        if (e.tic) row.tic_bits = e.tic->value();
        row.sign = std::string(to_string(e.sign));
        row.posterior_bits = e.posterior_info.value();
        row.posterior_prob = e.posterior_prob.to_double();
        doc.rows.push_back(std::move(row));
    }
    doc.kl_expected_tic = kl_expected_tic(ms, om, observation).value;
    doc.kl_classical = kl_classical(ms, om, observation).value();
    doc.mutual_information = mutual_information(ms, om).value;
    return doc;
}

std::string render_table(const ReportDocument& doc, int precision) {
    std::ostringstream out;
    out << "scenario: " << doc.scenario << "\n";
    out << "observation: " << doc.observation << "\n";
    out << "evidence: " << format_fixed(doc.evidence, precision) << " (" << format_fixed(doc.evidence_bits, precision)
        << " bits)\n\n";

    std::vector<std::vector<std::string>> cells{{"model", "prior", "prior_bits", "evidence_bits", "likelihood_bits",
                                                 "tic_bits", "sign", "posterior_bits", "posterior_prob"}};
    for (const auto& r : doc.rows) {
        cells.push_back({r.model, format_fixed(r.prior, precision), format_fixed(r.prior_bits, precision),
                         format_fixed(r.evidence_bits, precision), format_fixed(r.likelihood_bits, precision),
                         r.tic_bits ? format_fixed(*r.tic_bits, precision) : "undefined", r.sign,
                         format_fixed(r.posterior_bits, precision), format_fixed(r.posterior_prob, precision)});
    }
    out << align(cells) << "\n";
    out << align({{"kl_expected_tic", format_fixed(clamp_display(doc.kl_expected_tic), precision), "bits"},
                  {"kl_classical", format_fixed(clamp_display(doc.kl_classical), precision), "bits"},
                  {"mutual_information", format_fixed(clamp_display(doc.mutual_information), precision), "bits"}});
    return out.str();
}

std::string render_json(const ReportDocument& doc) {
    Json j;
    j["scenario"] = doc.scenario;
    j["observation"] = doc.observation;
    j["evidence"] = json_number(doc.evidence);
    j["evidence_bits"] = json_number(doc.evidence_bits);
    Json rows = Json::array();
    for (const auto& r : doc.rows) {
        rows.push_back(Json{{"model", r.model},
                            {"prior", json_number(r.prior)},
                            {"prior_bits", json_number(r.prior_bits)},
                            {"evidence_bits", json_number(r.evidence_bits)},
                            {"likelihood_bits", json_number(r.likelihood_bits)},
                            {"tic_bits", json_number(r.tic_bits)},
                            {"sign", r.sign},
                            {"posterior_bits", json_number(r.posterior_bits)},
                            {"posterior_prob", json_number(r.posterior_prob)}});
    }
    j["rows"] = std::move(rows);
    j["kl_expected_tic"] = json_number(clamp_display(doc.kl_expected_tic));
    j["kl_expected_tic_raw"] = json_number(doc.kl_expected_tic);
    j["kl_classical"] = json_number(doc.kl_classical);
    j["mutual_information"] = json_number(clamp_display(doc.mutual_information));
    return j.dump(2) + "\n";
}

std::string render_csv(const ReportDocument& doc) {
    std::string out = std::string(kCsvHeader) + "\n";
    for (const auto& r : doc.rows) {
        out += r.model + "," + format_full(r.prior) + "," + format_full(r.prior_bits) + "," +
               format_full(r.evidence_bits) + "," + format_full(r.likelihood_bits) + "," +
               (r.tic_bits ? format_full(*r.tic_bits) : "undefined") + "," + r.sign + "," +
               format_full(r.posterior_bits) + "," + format_full(r.posterior_prob) + "\n";
    }
    return out;
}

KlDocument kl(const Scenario& s, std::string_view observation) {
    return {s.name, kl_expected_tic(s.model_space, s.observation_model, observation),
            kl_classical(s.model_space, s.observation_model, observation).value()};
}

std::string render_table(const KlDocument& doc, int precision) {
    std::ostringstream out;
    out << "scenario: " << doc.scenario << "\n";
    out << "observation: " << doc.expected_tic.observation << "\n\n";
    std::vector<std::vector<std::string>> cells{{"model", "posterior", "tic_bits", "weighted_bits"}};
    for (const auto& t : doc.expected_tic.per_model_terms) {
        const double w = t.weight.to_double();
        cells.push_back({t.model, format_fixed(w, precision), format_fixed(t.tic.value(), precision),
                         format_fixed(w == 0.0 ? 0.0 : w * t.tic.value(), precision)});
    }
    out << align(cells) << "\n";
    out << align({{"kl_expected_tic", format_fixed(doc.expected_tic.displayed().value(), precision), "bits"},
                  {"kl_classical", format_fixed(clamp_display(doc.classical), precision), "bits"},
                  {"difference", format_full(doc.expected_tic.value - doc.classical), "bits"}});
    return out.str();
}

std::string render_json(const KlDocument& doc) {
    Json j;
    j["scenario"] = doc.scenario;
    j["observation"] = doc.expected_tic.observation;
    Json terms = Json::array();
    for (const auto& t : doc.expected_tic.per_model_terms) {
        terms.push_back(Json{{"model", t.model}, {"posterior", json_number(t.weight.to_double())},
                             {"tic_bits", json_number(t.tic.value())}});
    }
    j["terms"] = std::move(terms);
    j["kl_expected_tic"] = json_number(doc.expected_tic.displayed().value());
    j["kl_expected_tic_raw"] = json_number(doc.expected_tic.value);
    j["kl_classical"] = json_number(doc.classical);
    j["difference"] = json_number(doc.expected_tic.value - doc.classical);
    return j.dump(2) + "\n";
}

std::string render_csv(const KlDocument& doc) {
    std::string out = "model,posterior,tic_bits\n";
    for (const auto& t : doc.expected_tic.per_model_terms) {
        out += t.model + "," + format_full(t.weight.to_double()) + "," + format_full(t.tic.value()) + "\n";
    }
    return out;
}

MiDocument mi(const Scenario& s) {
    return {s.name, mutual_information(s.model_space, s.observation_model),
            mutual_information_classical(s.model_space, s.observation_model).value()};
}

std::string render_table(const MiDocument& doc, int precision) {
    std::ostringstream out;
    out << "scenario: " << doc.scenario << "\n\n";
    std::vector<std::vector<std::string>> cells{{"observation", "evidence", "kl_bits"}};
    for (const auto& o : doc.expected_tic.per_observation_kl) {
        cells.push_back({o.observation, format_fixed(o.evidence.to_double(), precision),
                         format_fixed(o.kl.displayed().value(), precision)});
    }
    out << align(cells) << "\n";
    out << align({{"mutual_information_expected_tic", format_fixed(doc.expected_tic.displayed().value(), precision),
                   "bits"},
                  {"mutual_information_classical", format_fixed(clamp_display(doc.classical), precision), "bits"},
                  {"difference", format_full(doc.expected_tic.value - doc.classical), "bits"}});
    return out.str();
}

std::string render_json(const MiDocument& doc) {
    Json j;
    j["scenario"] = doc.scenario;
    Json per = Json::array();
    for (const auto& o : doc.expected_tic.per_observation_kl) {
        per.push_back(Json{{"observation", o.observation},
                           {"evidence", json_number(o.evidence.to_double())},
                           {"kl_bits", json_number(o.kl.value)}});
    }
    j["per_observation"] = std::move(per);
    j["mutual_information_expected_tic"] = json_number(doc.expected_tic.displayed().value());
    j["mutual_information_expected_tic_raw"] = json_number(doc.expected_tic.value);
    j["mutual_information_classical"] = json_number(doc.classical);
    j["difference"] = json_number(doc.expected_tic.value - doc.classical);
    return j.dump(2) + "\n";
}

std::string render_csv(const MiDocument& doc) {
    std::string out = "observation,evidence,kl_bits\n";
    for (const auto& o : doc.expected_tic.per_observation_kl) {
        out += o.observation + "," + format_full(o.evidence.to_double()) + "," + format_full(o.kl.value) + "\n";
    }
    return out;
}

} // namespace infotransfer::report
