#include "infotransfer/aggregates.hpp"

#include "infotransfer/info_core.hpp"

#include <cmath>

namespace infotransfer {

namespace {

std::vector<Probability> posterior_distribution(const ModelSpace& ms, const ObservationModel& om,
                                                std::string_view x) {
    std::vector<Probability> post;
    post.reserve(ms.size());
    for (const auto& theta : ms.labels()) {
        post.push_back(posterior_prob_oracle(ms, om, x, theta));
    }
    return post;
}

} // namespace

KlResult kl_expected_tic(const ModelSpace& ms, const ObservationModel& om, std::string_view x) {
    KlResult result{std::string(x), 0.0, {}};
    result.per_model_terms.reserve(ms.size());
    for (const auto& theta : ms.labels()) {
        KlTerm term{theta, posterior_prob_oracle(ms, om, x, theta), tic(ms, om, x, theta)};
        if (!term.weight.is_zero()) {
            result.value += term.weight.to_double() * term.tic.value();
        }
        result.per_model_terms.push_back(std::move(term));
    }
    return result;
}

Bits kl_classical(const ModelSpace& ms, const ObservationModel& om, std::string_view x) {
    const auto post = posterior_distribution(ms, om, x);
    double total = 0.0;
    for (std::size_t m = 0; m < ms.size(); ++m) {
        if (post[m].is_zero()) continue;
        const Number ratio = post[m].number() / ms.prior()[m].number();
        total += post[m].to_double() * std::log2(ratio.to_double());
    }
    return Bits(total);
}

MiResult mutual_information(const ModelSpace& ms, const ObservationModel& om) {
    MiResult result;
    for (const auto& x : om.observation_labels()) {
        Probability ev = evidence(ms, om, x);
        if (ev.is_zero()) continue;
        KlResult kl = kl_expected_tic(ms, om, x);
        result.value += ev.to_double() * kl.value;
        result.per_observation_kl.push_back({x, std::move(ev), std::move(kl)});
    }
    return result;
}

Bits mutual_information_classical(const ModelSpace& ms, const ObservationModel& om) {
    double conditional = 0.0;
    for (const auto& x : om.observation_labels()) {
        const Probability ev = evidence(ms, om, x);
        if (ev.is_zero()) continue;
        double h = 0.0;
        for (const auto& p : posterior_distribution(ms, om, x)) {
            if (!p.is_zero()) h += p.to_double() * info_content(p).value();
        }
        conditional += ev.to_double() * h;
    }
    return Bits(entropy(ms.prior()).value() - conditional);
}

} // namespace infotransfer
