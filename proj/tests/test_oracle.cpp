#include "infotransfer/errors.hpp"
#include "infotransfer/oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace infotransfer;

TEST_CASE("joint table of the traditional game") {
    const auto t = oracle::enumerate_joint(traditional_mhp());
    CHECK(t.rows.size() == 6);
    const auto b = t.observation_index("Monty_B");
    CHECK(t.joint(0, b) == Rational(1, 6));
    CHECK(t.joint(1, b) == 0);
    CHECK(t.joint(2, b) == Rational(1, 3));
    CHECK(t.observation_marginal(b) == Rational(1, 2));
    Rational total = 0;
    for (const auto& r : t.rows) total += r.probability;
    CHECK(total == 1);
    for (std::size_t m = 0; m < 3; ++m) CHECK(t.model_marginal(m) == Rational(1, 3));
}

TEST_CASE("degenerate prior keeps all mass in one model") {
    MhpConfig cfg;
    cfg.prior = Distribution(door_labels(3), {Probability(1, 1), Probability(0, 1), Probability(0, 1)});
    const auto t = oracle::enumerate_joint(mhp_scenario(cfg));
    for (const auto& r : t.rows) {
        if (r.model != "A") CHECK(r.probability == 0);
    }
    CHECK(t.model_marginal(0) == 1);
}

TEST_CASE("biased marginal") {
    const auto t = oracle::enumerate_joint(biased_mhp());
    CHECK(t.observation_marginal(t.observation_index("Monty_C")) == Rational(7, 12));
}

TEST_CASE("oracle metrics") {
    SUBCASE("traditional") {
        const auto m = oracle::oracle_metrics(oracle::enumerate_joint(traditional_mhp()), "Monty_B");
        CHECK(m.posteriors == std::vector<Rational>{Rational(1, 3), Rational(0), Rational(2, 3)});
        CHECK(*m.tics[0] == 0.0);
        CHECK(*m.tics[1] == -std::numeric_limits<double>::infinity());
        CHECK(*m.tics[2] == 1.0);
        CHECK(std::abs(m.kl - 2.0 / 3.0) < 1e-15);
    }
    SUBCASE("biased, host opens B") {
        const auto m = oracle::oracle_metrics(oracle::enumerate_joint(biased_mhp()), "Monty_B");
        CHECK(m.posteriors == std::vector<Rational>{Rational(3, 5), Rational(0), Rational(2, 5)});
    }
    SUBCASE("mutual information") {
        CHECK(std::abs(oracle::oracle_mi(oracle::enumerate_joint(traditional_mhp())) - 2.0 / 3.0) < 1e-15);
    }
}

TEST_CASE("oracle preconditions") {
    auto s = traditional_mhp();
    const Scenario floats(s.name, ModelSpace(Distribution::uniform({"A", "B", "C"})),
                          ObservationModel({"x"}, {"A", "B", "C"},
                                           {{Probability::approx(1.0), Probability(1, 1), Probability(1, 1)}}));
    CHECK_THROWS_WITH_AS(oracle::enumerate_joint(floats), "oracle requires exact rationals", NonRationalInputError);

    MhpConfig cfg;
    cfg.prior = Distribution(door_labels(3), {Probability(1, 1), Probability(0, 1), Probability(0, 1)});
    cfg.contestant_pick = "B";
    const auto t = oracle::enumerate_joint(mhp_scenario(cfg));
    CHECK_THROWS_AS(oracle::oracle_metrics(t, "Monty_A"), ImpossibleObservationError);
    CHECK_THROWS_AS(oracle::oracle_metrics(t, "nope"), UnknownLabelError);
}

TEST_CASE("zero-prior models have no oracle TIC") {
    MhpConfig cfg;
    cfg.prior = Distribution(door_labels(3), {Probability(1, 2), Probability(1, 2), Probability(0, 1)});
    const auto m = oracle::oracle_metrics(oracle::enumerate_joint(mhp_scenario(cfg)), "Monty_B");
    CHECK_FALSE(m.tics[2].has_value());
    CHECK(m.posteriors[2] == 0);
}

TEST_CASE("log2 of rationals beyond binary64 range") {
    CHECK(oracle::log2_rational(Rational(8)) == 3.0);
    CHECK(oracle::log2_rational(Rational(1, 1024)) == -10.0);
    const Rational tiny(BigInt(3), BigInt(1) << 2000);
    CHECK(std::abs(oracle::log2_rational(tiny) - (std::log2(3.0) - 2000.0)) < 1e-9);
    const Rational huge(BigInt(5) << 1500, BigInt(1));
    CHECK(std::abs(oracle::log2_rational(huge) - (std::log2(5.0) + 1500.0)) < 1e-9);
    CHECK(oracle::log2_rational(Rational(0)) == -std::numeric_limits<double>::infinity());
}
