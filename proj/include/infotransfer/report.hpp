#pragma once

// Rendering of transfer reports and aggregate results for the command line.
// Output is locale independent and byte-for-byte deterministic.

#include "infotransfer/aggregates.hpp"
#include "infotransfer/scenario.hpp"

#include <optional>
#include <string>
#include <vector>

namespace infotransfer::report {

inline constexpr int kDefaultPrecision = 6;

/// Fixed notation with `precision` decimals, "inf"/"-inf" for infinities and
/// no "-0.000" artefacts.
std::string format_fixed(double v, int precision = kDefaultPrecision);

/// 17 significant digits, "inf"/"-inf" for infinities.
std::string format_full(double v);

struct ReportRow {
    std::string model;
    double prior = 0.0;
    double prior_bits = 0.0;
    double evidence_bits = 0.0;
    double likelihood_bits = 0.0;
    std::optional<double> tic_bits; ///< nullopt renders as "undefined"
    std::string sign;
    double posterior_bits = 0.0;
    double posterior_prob = 0.0;
};

struct ReportDocument {
    std::string scenario;
    std::string observation;
    double evidence = 0.0;
    double evidence_bits = 0.0;
    std::vector<ReportRow> rows;
    double kl_expected_tic = 0.0; ///< raw value, clamped at 0 when rendered
    double kl_classical = 0.0;
    double mutual_information = 0.0;
};

/// Throws ImpossibleObservationError / UnknownLabelError from the engine.
ReportDocument solve(const Scenario& s, std::string_view observation);

std::string render_table(const ReportDocument& doc, int precision = kDefaultPrecision);
std::string render_json(const ReportDocument& doc);
/// Per-model rows under the header
/// model,prior,prior_bits,evidence_bits,likelihood_bits,tic_bits,sign,posterior_bits,posterior_prob
std::string render_csv(const ReportDocument& doc);

extern const char* const kCsvHeader;

struct KlDocument {
    std::string scenario;
    KlResult expected_tic;
    double classical = 0.0;
};

KlDocument kl(const Scenario& s, std::string_view observation);
std::string render_table(const KlDocument& doc, int precision = kDefaultPrecision);
std::string render_json(const KlDocument& doc);
std::string render_csv(const KlDocument& doc);

struct MiDocument {
    std::string scenario;
    MiResult expected_tic;
    double classical = 0.0;
};

MiDocument mi(const Scenario& s);
std::string render_table(const MiDocument& doc, int precision = kDefaultPrecision);
std::string render_json(const MiDocument& doc);
std::string render_csv(const MiDocument& doc);

} // namespace infotransfer::report
