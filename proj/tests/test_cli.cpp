#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli_runner.hpp"
#include "infotransfer/scenario.hpp"

#include <fstream>

using namespace infotransfer;
using testing::run_cli;

namespace {

const std::filesystem::path& dir() {
    static const auto d = testing::scratch_dir("cli");
    return d;
}

std::string fixture(const std::string& variant) {
    const auto path = (dir() / (variant + ".json")).string();
    const auto r = run_cli("mhp " + variant + " --output '" + path + "'");
    REQUIRE(r.exit_code == 0);
    return "'" + path + "'";
}

std::string line_starting(const std::string& text, const std::string& prefix) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto end = text.find('\n', pos);
        const auto line = text.substr(pos, end - pos);
        if (line.rfind(prefix, 0) == 0) return line;
        if (end == std::string::npos) break;
        pos = end + 1;
    }
    return {};
}

} // namespace

TEST_CASE("mhp emits the paper's variants") {
    const auto trad = run_cli("mhp traditional");
    REQUIRE(trad.exit_code == 0);
    CHECK(scenario_from_json(trad.out) == traditional_mhp());

    const auto biased = run_cli("mhp biased");
    REQUIRE(biased.exit_code == 0);
    const auto s = scenario_from_json(biased.out);
    CHECK(s.model_space.prior()[0] == Probability(1, 2));
    CHECK(s.model_space.prior()[1] == Probability(1, 3));
    CHECK(s.model_space.prior()[2] == Probability(1, 6));

    CHECK(run_cli("mhp traditional").out == trad.out);
}

TEST_CASE("mhp custom-N") {
    const auto r = run_cli("mhp custom-N --doors 5 --pick A");
    REQUIRE(r.exit_code == 0);
    const auto s = scenario_from_json(r.out);
    CHECK(s.model_space.labels() == door_labels(5));
    CHECK(s.observation_model.observation_count() == 4);

    const auto forgetful = run_cli("mhp custom-4 --policy forgetful --pick D4 --prior 1/10,2/10,3/10,4/10");
    REQUIRE(forgetful.exit_code == 0);
    const auto f = scenario_from_json(forgetful.out);
    CHECK(f.metadata.at("policy") == "forgetful");
    CHECK(f.model_space.prior()[3] == Probability(2, 5));
}

TEST_CASE("mhp usage errors exit 2") {
    CHECK(run_cli("mhp").exit_code == 2);
    CHECK(run_cli("mhp quantum").exit_code == 2);
    CHECK(run_cli("mhp custom-N --doors 2").exit_code == 2);
    CHECK(run_cli("mhp custom-N --doors 3 --pick Q").exit_code == 2);
    CHECK(run_cli("mhp custom-N --doors 3 --prior 1/2,1/2").exit_code == 2);
    CHECK(run_cli("mhp custom-N --doors 3 --prior 1/2,1/4,1/5").exit_code == 2);
    CHECK(run_cli("mhp custom-N --doors 3 --policy lazy").exit_code == 2);
    CHECK(run_cli("mhp traditional --doors 4").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("solve reports") {
    const auto trad = run_cli("solve " + fixture("traditional") + " --observe Monty_B");
    REQUIRE(trad.exit_code == 0);
    const auto c = line_starting(trad.out, "C ");
    CHECK(c.find("1.000000") != std::string::npos);
    CHECK(c.find("0.666667") != std::string::npos);

    const auto biased = run_cli("solve " + fixture("biased") + " --observe Monty_C");
    REQUIRE(biased.exit_code == 0);
    const auto a = line_starting(biased.out, "A ");
    CHECK(a.find("-0.222392") != std::string::npos);
    CHECK(a.find("misleads") != std::string::npos);

    const auto forgetful = run_cli("solve " + fixture("forgetful") + " --observe Monty_B");
    REQUIRE(forgetful.exit_code == 0);
    CHECK(line_starting(forgetful.out, "A ").find("0.584963") != std::string::npos);
    CHECK(line_starting(forgetful.out, "C ").find("0.584963") != std::string::npos);

    const auto csv = run_cli("solve " + fixture("traditional") + " --observe Monty_B --format csv");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out.rfind("model,prior,prior_bits,evidence_bits,likelihood_bits,tic_bits,sign,posterior_bits,"
                        "posterior_prob\n",
                        0) == 0);

    const auto json = run_cli("solve " + fixture("traditional") + " --observe Monty_B --format json");
    REQUIRE(json.exit_code == 0);
    CHECK(json.out.find("\"-Infinity\"") != std::string::npos);

    const auto precise = run_cli("solve " + fixture("traditional") + " --observe Monty_B --precision 3");
    CHECK(line_starting(precise.out, "C ").find("0.667") != std::string::npos);
}

TEST_CASE("solve errors") {
    const auto trad = fixture("traditional");
    CHECK(run_cli("solve " + trad).exit_code == 2);
    CHECK(run_cli("solve " + trad + " --observe Monty_Z").exit_code == 2);
    CHECK(run_cli("solve " + trad + " --observe Monty_B --format xml").exit_code == 2);
    CHECK(run_cli("solve /nonexistent/file.json --observe Monty_B").exit_code == 2);

    const auto impossible = (dir() / "impossible.json").string();
    REQUIRE(run_cli("mhp custom-3 --prior 1,0,0 --pick B --output '" + impossible + "'").exit_code == 0);
    CHECK(run_cli("solve '" + impossible + "' --observe Monty_A").exit_code == 3);
    CHECK(run_cli("kl '" + impossible + "' --observe Monty_A").exit_code == 3);

    const auto broken = dir() / "broken.json";
    std::ofstream(broken) << "{\"name\": \"x\",\n \"models\": }";
    CHECK(run_cli("solve '" + broken.string() + "' --observe x").exit_code == 2);
}

TEST_CASE("mi and kl") {
    const auto mi = run_cli("mi " + fixture("traditional"));
    REQUIRE(mi.exit_code == 0);
    CHECK(line_starting(mi.out, "mutual_information_expected_tic").find("0.666667") != std::string::npos);
    CHECK(line_starting(mi.out, "mutual_information_classical").find("0.666667") != std::string::npos);
    CHECK(!line_starting(mi.out, "difference").empty());

    const auto kl = run_cli("kl " + fixture("biased") + " --observe Monty_C --format json");
    REQUIRE(kl.exit_code == 0);
    CHECK(kl.out.find("\"kl_classical\": 0.349036") != std::string::npos);
}

TEST_CASE("verify") {
    for (const auto* v : {"traditional", "biased", "forgetful"}) {
        const auto r = run_cli(std::string("verify ") + fixture(v));
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("result: PASS") != std::string::npos);
    }
    const auto decimal = dir() / "decimal.json";
    std::ofstream(decimal) << R"({"name": "d", "models": [{"label": "a", "prior": 0.5}, {"label": "b", "prior": 0.5}],
        "observations": ["x"], "likelihood": [[1, 1]]})";
    CHECK(run_cli("verify '" + decimal.string() + "'").exit_code == 2);
}
