#pragma once

// Brute-force ground truth in exact rational arithmetic.
//
// The scenario is expanded into its joint table P(theta, x) and every
// conditional quantity is recomputed from that table alone. Nothing here
// calls into the information-space engine.

#include "infotransfer/scenario.hpp"

#include <optional>
#include <string>
#include <vector>

namespace infotransfer::oracle {

struct JointOutcome {
    std::string model;
    std::string observation;
    Rational probability;
};

/// One row per (model, observation) pair, models outermost.
struct JointOutcomeTable {
    std::vector<std::string> models;
    std::vector<std::string> observations;
    std::vector<JointOutcome> rows;

    const Rational& joint(std::size_t model, std::size_t observation) const {
        return rows.at(model * observations.size() + observation).probability;
    }
    /// Marginal over observations, i.e. the prior.
    Rational model_marginal(std::size_t model) const;
    /// Marginal over models, i.e. the evidence.
    Rational observation_marginal(std::size_t observation) const;
    std::size_t observation_index(std::string_view label) const;
};

/// joint(theta, x) = prior(theta) * likelihood(x | theta). Throws
/// NonRationalInputError if any probability is a float, InvariantError if
/// the table does not sum to 1 or its model marginals differ from the prior.
JointOutcomeTable enumerate_joint(const Scenario& s);

struct ObservationMetrics {
    std::string observation;
    Rational evidence;
    std::vector<Rational> posteriors;
    /// log2[P(x|theta) / P(x)]; -inf for refuted models, nullopt when the
    /// model's prior is 0 (the likelihood is not recoverable from the joint).
    std::vector<std::optional<double>> tics;
    double kl = 0.0;
};

/// Throws ImpossibleObservationError when the observation's marginal is 0.
ObservationMetrics oracle_metrics(const JointOutcomeTable& t, std::string_view x);

/// sum over joint > 0 of joint * log2[joint / (prior * evidence)].
double oracle_mi(const JointOutcomeTable& t);

/// log2 of a positive rational, one rounding of the ratio before the log.
double log2_rational(const Rational& r);

} // namespace infotransfer::oracle
