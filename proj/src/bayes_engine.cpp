#include "infotransfer/bayes_engine.hpp"

#include "infotransfer/errors.hpp"
#include "infotransfer/info_core.hpp"

#include <algorithm>
#include <cmath>

namespace infotransfer {

namespace {

struct Indices {
    std::size_t observation;
    std::size_t model;
};

Indices resolve(const ModelSpace& ms, const ObservationModel& om, std::string_view x, std::string_view theta) {
    require_compatible(ms, om);
    return {om.observation_index(x), ms.index_of(theta)};
}

Probability evidence_at(const ModelSpace& ms, const ObservationModel& om, std::size_t x) {
    Number total(0);
    for (std::size_t m = 0; m < ms.size(); ++m) {
        total = total + om.likelihood(x, m).number() * ms.prior()[m].number();
    }
    // Float rounding may leave the marginal a hair above 1.
    if (!total.is_exact() && total.to_double() > 1.0) total = Number(1.0);
    return Probability(total);
}

Probability require_evidence(const ModelSpace& ms, const ObservationModel& om, std::size_t x) {
    Probability p = evidence_at(ms, om, x);
    if (p.is_zero()) {
        throw ImpossibleObservationError("observation '" + om.observation_labels()[x] +
                                         "' has zero evidence under the prior");
    }
    return p;
}

Bits tic_at(const ObservationModel& om, std::size_t x, std::size_t m, const Probability& ev) {
    return info_content(ev) - info_content(om.likelihood(x, m));
}

Bits posterior_info_at(const ModelSpace& ms, Bits transfer, std::size_t m) {
    return info_content(ms.prior()[m]) - transfer;
}

Probability info_form_posterior(Bits post_info) {
    if (post_info.value() < 0.0 && post_info.value() >= -kTicTolerance) {
        post_info = Bits(0.0);
    }
    return prob_from_info(post_info);
}

Probability oracle_posterior_at(const ModelSpace& ms, const ObservationModel& om, std::size_t x, std::size_t m,
                                const Probability& ev) {
    Number post = om.likelihood(x, m).number() * ms.prior()[m].number() / ev.number();
    if (!post.is_exact() && post.to_double() > 1.0) post = Number(1.0);
    return Probability(post);
}

double log2_of(const Number& n) {
    if (n.is_zero()) return -Bits::infinity;
    if (n.is_one()) return 0.0;
    return std::log2(n.to_double());
}

} // namespace

ObservationModel::ObservationModel(std::vector<std::string> observation_labels,
                                   std::vector<std::string> model_labels,
                                   std::vector<std::vector<Probability>> likelihood)
    : observation_labels_(std::move(observation_labels)),
      model_labels_(std::move(model_labels)),
      likelihood_(std::move(likelihood)) {
    if (observation_labels_.empty()) {
        throw InvariantError("observation model needs at least one observation");
    }
    if (model_labels_.empty()) {
        throw InvariantError("observation model needs at least one model");
    }
    require_unique_labels(observation_labels_, "observations");
    require_unique_labels(model_labels_, "models");
    if (likelihood_.size() != observation_labels_.size()) {
        throw InvariantError("likelihood has " + std::to_string(likelihood_.size()) + " rows for " +
                             std::to_string(observation_labels_.size()) + " observations");
    }
    for (std::size_t x = 0; x < likelihood_.size(); ++x) {
        if (likelihood_[x].size() != model_labels_.size()) {
            throw InvariantError("likelihood row x=" + observation_labels_[x] + " has " +
                                 std::to_string(likelihood_[x].size()) + " entries for " +
                                 std::to_string(model_labels_.size()) + " models");
        }
    }
    for (std::size_t m = 0; m < model_labels_.size(); ++m) {
        Number total(0);
        for (const auto& row : likelihood_) total = total + row[m].number();
        const bool ok = total.is_exact() ? total.exact() == 1
                                         : std::abs(total.to_double() - 1.0) <= kNormalizationTolerance;
        if (!ok) {
            throw InvariantError("column θ=" + model_labels_[m] + " sums to " + total.to_string());
        }
    }
}

std::size_t ObservationModel::observation_index(std::string_view label) const {
    auto it = std::find(observation_labels_.begin(), observation_labels_.end(), label);
    if (it == observation_labels_.end()) {
        throw UnknownLabelError("unknown observation '" + std::string(label) + "'");
    }
    return static_cast<std::size_t>(it - observation_labels_.begin());
}

std::size_t ObservationModel::model_index(std::string_view label) const {
    auto it = std::find(model_labels_.begin(), model_labels_.end(), label);
    if (it == model_labels_.end()) {
        throw UnknownLabelError("unknown model '" + std::string(label) + "'");
    }
    return static_cast<std::size_t>(it - model_labels_.begin());
}

bool ObservationModel::is_exact() const {
    for (const auto& row : likelihood_) {
        for (const auto& p : row) {
            if (!p.is_exact()) return false;
        }
    }
    return true;
}

void require_compatible(const ModelSpace& ms, const ObservationModel& om) {
    if (ms.labels() != om.model_labels()) {
        throw InvariantError("likelihood columns do not match the model space labels");
    }
}

std::string_view to_string(SignClass c) {
    switch (c) {
    case SignClass::informs: return "informs";
    case SignClass::neutral: return "neutral";
    case SignClass::misleads: return "misleads";
    case SignClass::undefined: return "undefined";
    }
    return "undefined";
}

SignClass classify_tic(Bits t) {
    if (t.value() > kTicTolerance) return SignClass::informs;
    if (t.value() < -kTicTolerance) return SignClass::misleads;
    return SignClass::neutral;
}

Probability evidence(const ModelSpace& ms, const ObservationModel& om, std::string_view x) {
    require_compatible(ms, om);
    return evidence_at(ms, om, om.observation_index(x));
}

Bits tic(const ModelSpace& ms, const ObservationModel& om, std::string_view x, std::string_view theta) {
    const auto [xi, m] = resolve(ms, om, x, theta);
    return tic_at(om, xi, m, require_evidence(ms, om, xi));
}

Bits posterior_info(const ModelSpace& ms, const ObservationModel& om, std::string_view x,
                    std::string_view theta) {
    const auto [xi, m] = resolve(ms, om, x, theta);
    return posterior_info_at(ms, tic_at(om, xi, m, require_evidence(ms, om, xi)), m);
}

Probability posterior_prob_info_form(const ModelSpace& ms, const ObservationModel& om, std::string_view x,
                                     std::string_view theta) {
    return info_form_posterior(posterior_info(ms, om, x, theta));
}

Probability posterior_prob_oracle(const ModelSpace& ms, const ObservationModel& om, std::string_view x,
                                  std::string_view theta) {
    const auto [xi, m] = resolve(ms, om, x, theta);
    return oracle_posterior_at(ms, om, xi, m, require_evidence(ms, om, xi));
}

Bits local_transfer_entropy(const ModelSpace& ms, const ObservationModel& om, std::string_view x,
                            std::string_view theta) {
    const auto [xi, m] = resolve(ms, om, x, theta);
    const Probability ev = require_evidence(ms, om, xi);
    const Probability& prior = ms.prior()[m];
    if (prior.is_zero()) {
        throw UndefinedLogError("local transfer entropy of model '" + std::string(theta) +
                                "' with zero prior");
    }
    const Probability post = oracle_posterior_at(ms, om, xi, m, ev);
    return Bits(log2_of(post.number() / prior.number()));
}

const Number& BayesFactor::ratio() const {
    if (!ratio_) {
        throw DivisionByZeroError("Bayes factor denominator likelihood is zero");
    }
    return *ratio_;
}

BayesFactor bayes_factor(const ObservationModel& om, std::string_view x, std::string_view theta1,
                         std::string_view theta2) {
    const std::size_t xi = om.observation_index(x);
    const Probability& l1 = om.likelihood(xi, om.model_index(theta1));
    const Probability& l2 = om.likelihood(xi, om.model_index(theta2));
    if (l1.is_zero() && l2.is_zero()) {
        throw UndefinedLogError("Bayes factor 0/0 for observation '" + std::string(x) + "'");
    }
    const Bits log2k = info_content(l2) - info_content(l1);
    if (l2.is_zero()) {
        return BayesFactor(std::nullopt, log2k);
    }
    return BayesFactor(l1.number() / l2.number(), log2k);
}

TransferReport transfer_report(const ModelSpace& ms, const ObservationModel& om, std::string_view x) {
    require_compatible(ms, om);
    const std::size_t xi = om.observation_index(x);
    const Probability ev = require_evidence(ms, om, xi);

    TransferReport report{std::string(x), ev, info_content(ev), {}};
    report.entries.reserve(ms.size());
    for (std::size_t m = 0; m < ms.size(); ++m) {
        TransferEntry e;
        e.model = ms.labels()[m];
        e.prior = ms.prior()[m];
        e.prior_info = info_content(e.prior);
        e.likelihood = om.likelihood(xi, m);
        e.likelihood_info = info_content(e.likelihood);
        const Bits transfer = tic_at(om, xi, m, ev);
        e.posterior_info = posterior_info_at(ms, transfer, m);
        if (e.prior.is_zero()) {
            e.tic = std::nullopt;
            e.sign = SignClass::undefined;
            e.posterior_prob = Probability::approx(0.0);
        } else {
            e.tic = transfer;
            e.sign = classify_tic(transfer);
            e.posterior_prob = info_form_posterior(e.posterior_info);
        }
        report.entries.push_back(std::move(e));
    }
    return report;
}

} // namespace infotransfer
