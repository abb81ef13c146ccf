#include "infotransfer/verify.hpp"

#include "infotransfer/aggregates.hpp"
#include "infotransfer/oracle.hpp"
#include "infotransfer/report.hpp"

#include <cmath>

namespace infotransfer {

namespace {

double deviation(double a, double b) {
    if (std::isinf(a) || std::isinf(b)) {
        return a == b ? 0.0 : Bits::infinity;
    }
    return std::abs(a - b);
}

void record(VerificationReport& r, std::string quantity, double engine, double oracle) {
    const double d = deviation(engine, oracle);
    if (r.comparisons.empty() || d > r.max_deviation) {
        r.max_deviation = d;
        r.worst_quantity = quantity;
    }
    r.comparisons.push_back({std::move(quantity), engine, oracle, d});
}

} // namespace

VerificationReport verify_against_oracle(const Scenario& s) {
    const auto table = oracle::enumerate_joint(s);
    const auto& ms = s.model_space;
    const auto& om = s.observation_model;

    VerificationReport r;
    r.scenario = s.name;
    for (const auto& x : om.observation_labels()) {
        const Probability ev = evidence(ms, om, x);
        const Rational exact_ev = table.observation_marginal(table.observation_index(x));
        record(r, "evidence[" + x + "]", ev.to_double(), exact_ev.convert_to<double>());
        if (exact_ev == 0) continue;

        const auto truth = oracle::oracle_metrics(table, x);
        for (std::size_t m = 0; m < ms.size(); ++m) {
            const std::string& theta = ms.labels()[m];
            const std::string at = "[" + x + "," + theta + "]";
            const double post = truth.posteriors[m].convert_to<double>();
            record(r, "posterior_info_form" + at, posterior_prob_info_form(ms, om, x, theta).to_double(), post);
            record(r, "posterior_oracle" + at, posterior_prob_oracle(ms, om, x, theta).to_double(), post);
            if (truth.tics[m]) {
                record(r, "tic" + at, tic(ms, om, x, theta).value(), *truth.tics[m]);
                record(r, "local_transfer_entropy" + at, local_transfer_entropy(ms, om, x, theta).value(),
                       *truth.tics[m]);
            }
        }
        record(r, "kl_expected_tic[" + x + "]", kl_expected_tic(ms, om, x).value, truth.kl);
        record(r, "kl_classical[" + x + "]", kl_classical(ms, om, x).value(), truth.kl);
    }
    const double mi = oracle::oracle_mi(table);
    record(r, "mutual_information", mutual_information(ms, om).value, mi);
    record(r, "mutual_information_classical", mutual_information_classical(ms, om).value(), mi);
    return r;
}

std::string render_verification(const VerificationReport& r) {
    std::string out = "scenario: " + r.scenario + "\n";
    out += "quantities compared: " + std::to_string(r.comparisons.size()) + "\n";
    out += "max deviation: " + report::format_full(r.max_deviation) + " (" + r.worst_quantity + ")\n";
    out += "tolerance: " + report::format_full(kVerifyTolerance) + "\n";
    out += std::string("result: ") + (r.passed() ? "PASS" : "FAIL") + "\n";
    return out;
}

} // namespace infotransfer
