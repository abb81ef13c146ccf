// infotransfer: generate Monty Hall scenarios, solve them in information
// space, and check the results against the exact oracle.
//
// Exit codes: 0 success, 2 usage/parse error, 3 impossible observation,
// 4 verification failure.

#include "infotransfer/errors.hpp"
#include "infotransfer/report.hpp"
#include "infotransfer/scenario.hpp"
#include "infotransfer/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace infotransfer;

constexpr int kExitUsage = 2;
constexpr int kExitImpossible = 3;
constexpr int kExitVerifyFailed = 4;

struct UsageError : Error {
    using Error::Error;
};

std::vector<Probability> parse_prior_list(const std::string& text) {
    std::vector<Probability> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.emplace_back(parse_number(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

struct MhpOptions {
    std::string variant;
    std::optional<int> doors;
    std::optional<std::string> pick;
    std::optional<std::string> prior;
    std::optional<std::string> policy;
    std::string output;
};

Scenario build_mhp(const MhpOptions& o) {
    const bool customized = o.doors || o.pick || o.prior || o.policy;
    if (o.variant == "traditional" || o.variant == "biased" || o.variant == "forgetful") {
        if (customized) {
            throw UsageError("--doors/--pick/--prior/--policy only apply to custom-N");
        }
        if (o.variant == "traditional") return traditional_mhp();
        if (o.variant == "biased") return biased_mhp();
        return forgetful_mhp();
    }
    if (o.variant.rfind("custom-", 0) != 0) {
        throw UsageError("unknown variant '" + o.variant + "' (traditional, biased, forgetful, custom-N)");
    }
    int doors = 3;
    const std::string suffix = o.variant.substr(7);
    if (suffix != "N") {
        try {
            std::size_t used = 0;
            doors = std::stoi(suffix, &used);
            if (used != suffix.size()) throw std::invalid_argument(suffix);
        } catch (const std::logic_error&) {
            throw UsageError("bad door count in variant '" + o.variant + "'");
        }
        if (o.doors && *o.doors != doors) {
            throw UsageError("--doors disagrees with variant '" + o.variant + "'");
        }
    }
    if (o.doors) doors = *o.doors;
    if (doors < 3) throw UsageError("--doors must be at least 3");

    MhpConfig cfg;
    cfg.door_count = doors;
    const auto labels = door_labels(doors);
    cfg.prior = o.prior ? Distribution(labels, parse_prior_list(*o.prior)) : Distribution::uniform(labels);
    if (o.pick) cfg.contestant_pick = *o.pick;
    if (o.policy) cfg.host_policy = parse_host_policy(*o.policy);

    Scenario s = mhp_scenario(cfg);
    s.name = "custom-mhp-" + std::to_string(doors);
    s.metadata["variant"] = "custom";
    return s;
}

int run(int argc, char** argv) {
    CLI::App app{"Bayesian inference in information space: transfer information content reports"};
    app.require_subcommand(1);

    MhpOptions mhp_opts;
    auto* mhp = app.add_subcommand("mhp", "Emit a Monty Hall scenario file");
    mhp->add_option("variant", mhp_opts.variant, "traditional | biased | forgetful | custom-N")->required();
    mhp->add_option("--doors", mhp_opts.doors, "Door count for custom-N (>= 3)");
    mhp->add_option("--pick", mhp_opts.pick, "Contestant's door label (default A)");
    mhp->add_option("--prior", mhp_opts.prior, "Comma-separated prior over doors, e.g. 1/2,1/3,1/6");
    mhp->add_option("--policy", mhp_opts.policy, "Host policy: standard | forgetful");
    mhp->add_option("-o,--output", mhp_opts.output, "Write to this file instead of stdout");

    std::string path;
    std::string observe;
    std::string format = "table";
    int precision = report::kDefaultPrecision;

    auto add_common = [&](CLI::App* cmd, bool needs_observation) {
        cmd->add_option("scenario", path, "Scenario file")->required();
        if (needs_observation) {
            cmd->add_option("--observe", observe, "Observation label")->required();
        }
        cmd->add_option("--format", format, "table | json | csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        cmd->add_option("--precision", precision, "Decimals in table output")->check(CLI::Range(0, 17));
    };

    auto* solve = app.add_subcommand("solve", "Transfer report for one observation");
    add_common(solve, true);
    auto* kl = app.add_subcommand("kl", "KL divergence of posterior from prior for one observation");
    add_common(kl, true);
    auto* mi = app.add_subcommand("mi", "Mutual information between models and observations");
    add_common(mi, false);
    auto* verify = app.add_subcommand("verify", "Compare the engine against the exact oracle");
    verify->add_option("scenario", path, "Scenario file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (mhp->parsed()) {
            const Scenario s = build_mhp(mhp_opts);
            if (mhp_opts.output.empty()) {
                std::cout << scenario_to_json(s);
            } else {
                save_scenario(s, mhp_opts.output);
            }
            return 0;
        }
        const Scenario s = load_scenario(path);
        if (solve->parsed()) {
            const auto doc = report::solve(s, observe);
            std::cout << (format == "json"  ? report::render_json(doc)
                          : format == "csv" ? report::render_csv(doc)
                                            : report::render_table(doc, precision));
        } else if (kl->parsed()) {
            const auto doc = report::kl(s, observe);
            std::cout << (format == "json"  ? report::render_json(doc)
                          : format == "csv" ? report::render_csv(doc)
                                            : report::render_table(doc, precision));
        } else if (mi->parsed()) {
            const auto doc = report::mi(s);
            std::cout << (format == "json"  ? report::render_json(doc)
                          : format == "csv" ? report::render_csv(doc)
                                            : report::render_table(doc, precision));
        } else if (verify->parsed()) {
            const auto r = verify_against_oracle(s);
            std::cout << render_verification(r);
            return r.passed() ? 0 : kExitVerifyFailed;
        }
        return 0;
    } catch (const ImpossibleObservationError& e) {
        std::cerr << "impossible observation: " << e.what() << "\n";
        return kExitImpossible;
    } catch (const NonRationalInputError&) {
        std::cerr << "error: oracle requires exact rationals\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
