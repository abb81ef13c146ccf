#include "infotransfer/oracle.hpp"

#include "infotransfer/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace infotransfer::oracle {

double log2_rational(const Rational& r) {
    if (r.sign() <= 0) {
        return -std::numeric_limits<double>::infinity();
    }
    if (r == 1) return 0.0;
    const double d = r.convert_to<double>();
    if (d > 0.0 && std::isfinite(d)) {
        return std::log2(d);
    }
    // Outside binary64 range: split off powers of two first.
    const BigInt& num = numerator(r);
    const BigInt& den = denominator(r);
    const auto shift_num = static_cast<long>(msb(num));
    const auto shift_den = static_cast<long>(msb(den));
    Rational normalized = r;
    if (shift_num > shift_den) {
        normalized /= Rational(BigInt(1) << static_cast<unsigned>(shift_num - shift_den));
    } else {
        normalized *= Rational(BigInt(1) << static_cast<unsigned>(shift_den - shift_num));
    }
    return std::log2(normalized.convert_to<double>()) + static_cast<double>(shift_num - shift_den);
}

Rational JointOutcomeTable::model_marginal(std::size_t model) const {
    Rational total = 0;
    for (std::size_t x = 0; x < observations.size(); ++x) total += joint(model, x);
    return total;
}

Rational JointOutcomeTable::observation_marginal(std::size_t observation) const {
    Rational total = 0;
    for (std::size_t m = 0; m < models.size(); ++m) total += joint(m, observation);
    return total;
}

std::size_t JointOutcomeTable::observation_index(std::string_view label) const {
    auto it = std::find(observations.begin(), observations.end(), label);
    if (it == observations.end()) {
        throw UnknownLabelError("unknown observation '" + std::string(label) + "'");
    }
    return static_cast<std::size_t>(it - observations.begin());
}

JointOutcomeTable enumerate_joint(const Scenario& s) {
    if (!s.is_exact()) {
        throw NonRationalInputError("oracle requires exact rationals");
    }
    const auto& prior = s.model_space.prior();
    const auto& om = s.observation_model;

    JointOutcomeTable t;
    t.models = prior.labels();
    t.observations = om.observation_labels();
    t.rows.reserve(t.models.size() * t.observations.size());
    Rational total = 0;
    for (std::size_t m = 0; m < t.models.size(); ++m) {
        const Rational& p = prior[m].exact();
        for (std::size_t x = 0; x < t.observations.size(); ++x) {
            Rational j = p * om.likelihood()[x][m].exact();
            total += j;
            t.rows.push_back({t.models[m], t.observations[x], std::move(j)});
        }
    }
    if (total != 1) {
        throw InvariantError("joint table sums to " + total.str());
    }
    for (std::size_t m = 0; m < t.models.size(); ++m) {
        if (t.model_marginal(m) != prior[m].exact()) {
            throw InvariantError("joint marginal of model " + t.models[m] + " differs from its prior");
        }
    }
    return t;
}

ObservationMetrics oracle_metrics(const JointOutcomeTable& t, std::string_view x) {
    const std::size_t xi = t.observation_index(x);
    ObservationMetrics out;
    out.observation = std::string(x);
    out.evidence = t.observation_marginal(xi);
    if (out.evidence == 0) {
        throw ImpossibleObservationError("observation '" + out.observation + "' has zero marginal");
    }
    for (std::size_t m = 0; m < t.models.size(); ++m) {
        const Rational& joint = t.joint(m, xi);
        const Rational prior = t.model_marginal(m);
        Rational post = joint / out.evidence;
        if (prior == 0) {
            out.tics.push_back(std::nullopt);
        } else {
            // P(x|theta) / P(x) == P(theta|x) / P(theta)
            out.tics.push_back(log2_rational(post / prior));
        }
        if (post != 0) {
            out.kl += post.convert_to<double>() * log2_rational(post / prior);
        }
        out.posteriors.push_back(std::move(post));
    }
    return out;
}

double oracle_mi(const JointOutcomeTable& t) {
    std::vector<Rational> priors;
    std::vector<Rational> evidences;
    for (std::size_t m = 0; m < t.models.size(); ++m) priors.push_back(t.model_marginal(m));
    for (std::size_t x = 0; x < t.observations.size(); ++x) evidences.push_back(t.observation_marginal(x));
    double mi = 0.0;
    for (std::size_t m = 0; m < t.models.size(); ++m) {
        for (std::size_t x = 0; x < t.observations.size(); ++x) {
            const Rational& j = t.joint(m, x);
            if (j == 0) continue;
            mi += j.convert_to<double>() * log2_rational(j / (priors[m] * evidences[x]));
        }
    }
    return mi;
}

} // namespace infotransfer::oracle
