#pragma once

// Random exact-rational scenarios for property tests.

#include "infotransfer/scenario.hpp"

#include <random>
#include <string>
#include <vector>

namespace infotransfer::testing {

/// Positive integer weights (some zero when allow_zero) normalized exactly.
inline std::vector<Probability> random_rational_distribution(std::mt19937_64& rng, std::size_t n, bool allow_zero) {
    std::uniform_int_distribution<int> weight(allow_zero ? 0 : 1, 12);
    std::vector<long long> w(n);
    long long total = 0;
    do {
        total = 0;
        for (auto& v : w) {
            v = weight(rng);
            total += v;
        }
    } while (total == 0);
    std::vector<Probability> out;
    out.reserve(n);
    for (auto v : w) out.emplace_back(v, total);
    return out;
}

inline Scenario random_scenario(std::mt19937_64& rng, std::size_t max_models = 8, std::size_t max_observations = 8) {
    std::uniform_int_distribution<std::size_t> models_dist(1, max_models);
    std::uniform_int_distribution<std::size_t> obs_dist(1, max_observations);
    std::bernoulli_distribution zero_prior(0.2);
    const std::size_t n = models_dist(rng);
    const std::size_t m = obs_dist(rng);

    std::vector<std::string> model_labels;
    std::vector<std::string> obs_labels;
    for (std::size_t i = 0; i < n; ++i) model_labels.push_back("t" + std::to_string(i));
    for (std::size_t i = 0; i < m; ++i) obs_labels.push_back("x" + std::to_string(i));

    auto prior = random_rational_distribution(rng, n, zero_prior(rng));
    std::vector<std::vector<Probability>> likelihood(m, std::vector<Probability>(n));
    for (std::size_t t = 0; t < n; ++t) {
        const auto column = random_rational_distribution(rng, m, true);
        for (std::size_t x = 0; x < m; ++x) likelihood[x][t] = column[x];
    }
    return Scenario("random", ModelSpace(Distribution(model_labels, std::move(prior))),
                    ObservationModel(obs_labels, model_labels, std::move(likelihood)));
}

/// Same scenario with every probability converted to binary64.
inline Scenario to_float_form(const Scenario& s) {
    const auto& prior = s.model_space.prior();
    std::vector<Probability> p;
    for (const auto& v : prior.probabilities()) p.push_back(Probability::approx(v.to_double()));
    std::vector<std::vector<Probability>> lik;
    for (const auto& row : s.observation_model.likelihood()) {
        std::vector<Probability> r;
        for (const auto& v : row) r.push_back(Probability::approx(v.to_double()));
        lik.push_back(std::move(r));
    }
    return Scenario(s.name, ModelSpace(Distribution(prior.labels(), std::move(p))),
                    ObservationModel(s.observation_model.observation_labels(), s.observation_model.model_labels(),
                                     std::move(lik)),
                    s.metadata);
}

} // namespace infotransfer::testing
