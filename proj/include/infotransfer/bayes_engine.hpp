#pragma once

// Single-observation Bayesian updating carried out on information contents.
//
// For an observation x and a model theta the transfer information content is
//
//     TIC(x -> theta) = I[P(x)] - I[P(x|theta)]
//
// and the posterior information content follows as
//
//     I[P(theta|x)] = I[P(theta)] - TIC(x -> theta).
//
// The evidence P(x) is always obtained by marginalizing the likelihood over
// the prior; it is never an input.

#include "infotransfer/number.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace infotransfer {

/// Finite space of hypotheses with its prior.
class ModelSpace {
public:
    explicit ModelSpace(Distribution prior) : prior_(std::move(prior)) {}

    const Distribution& prior() const noexcept { return prior_; }
    std::size_t size() const noexcept { return prior_.size(); }
    const std::vector<std::string>& labels() const noexcept { return prior_.labels(); }
    std::size_t index_of(std::string_view label) const { return prior_.index_of(label); }

    friend bool operator==(const ModelSpace&, const ModelSpace&) = default;

private:
    Distribution prior_;
};

/// Likelihood matrix P(x|theta): rows are observations, columns are models.
/// Every column is a distribution over the observations.
class ObservationModel {
public:
    /// Throws InvariantError if the matrix is not observations x models, a
    /// label list has duplicates, or a column does not sum to 1 (exactly for
    /// rational columns, within kNormalizationTolerance otherwise).
    ObservationModel(std::vector<std::string> observation_labels, std::vector<std::string> model_labels,
                     std::vector<std::vector<Probability>> likelihood);

    std::size_t observation_count() const noexcept { return observation_labels_.size(); }
    std::size_t model_count() const noexcept { return model_labels_.size(); }
    const std::vector<std::string>& observation_labels() const noexcept { return observation_labels_; }
    const std::vector<std::string>& model_labels() const noexcept { return model_labels_; }
    const std::vector<std::vector<Probability>>& likelihood() const noexcept { return likelihood_; }

    const Probability& likelihood(std::size_t observation, std::size_t model) const {
        return likelihood_.at(observation).at(model);
    }

    std::size_t observation_index(std::string_view label) const;
    std::size_t model_index(std::string_view label) const;
    bool is_exact() const;

    friend bool operator==(const ObservationModel&, const ObservationModel&) = default;

private:
    std::vector<std::string> observation_labels_;
    std::vector<std::string> model_labels_;
    std::vector<std::vector<Probability>> likelihood_;
};

/// Throws InvariantError unless the observation model's columns are exactly
/// the model space's labels in the same order.
void require_compatible(const ModelSpace& ms, const ObservationModel& om);

enum class SignClass {
    informs,   ///< TIC > 0: the observation raises the model's probability.
    neutral,   ///< TIC = 0 within kTicTolerance.
    misleads,  ///< TIC < 0: negative information, the probability drops.
    undefined, ///< the model had prior probability 0.
};

std::string_view to_string(SignClass c);

/// Neutral band of classify_tic.
inline constexpr double kTicTolerance = 1e-12;

SignClass classify_tic(Bits tic);

/// P(x) = sum over theta of P(x|theta) P(theta). Exact for rational inputs.
Probability evidence(const ModelSpace& ms, const ObservationModel& om, std::string_view x);

/// I[P(x)] - I[P(x|theta)]. -inf when the model is refuted (P(x|theta) = 0).
/// Throws ImpossibleObservationError when P(x) = 0.
Bits tic(const ModelSpace& ms, const ObservationModel& om, std::string_view x, std::string_view theta);

/// I[P(theta)] - TIC(x -> theta).
Bits posterior_info(const ModelSpace& ms, const ObservationModel& om, std::string_view x,
                    std::string_view theta);

/// 2^-posterior_info: the posterior obtained without leaving information space.
Probability posterior_prob_info_form(const ModelSpace& ms, const ObservationModel& om, std::string_view x,
                                     std::string_view theta);

/// Bayes' rule in probability space, P(x|theta) P(theta) / P(x). Exact for
/// rational inputs.
Probability posterior_prob_oracle(const ModelSpace& ms, const ObservationModel& om, std::string_view x,
                                  std::string_view theta);

/// log2[P(theta|x) / P(theta)] from the probability-space posterior. Throws
/// UndefinedLogError when P(theta) = 0.
Bits local_transfer_entropy(const ModelSpace& ms, const ObservationModel& om, std::string_view x,
                            std::string_view theta);

/// Likelihood ratio K = P(x|theta1) / P(x|theta2) and its base-2 logarithm.
class BayesFactor {
public:
    BayesFactor(std::optional<Number> ratio, Bits log2_value) : ratio_(std::move(ratio)), log2_(log2_value) {}

    bool has_ratio() const noexcept { return ratio_.has_value(); }
    /// Throws DivisionByZeroError when P(x|theta2) = 0.
    const Number& ratio() const;
    /// +inf when only the denominator likelihood is zero.
    Bits log2_value() const noexcept { return log2_; }

private:
    std::optional<Number> ratio_;
    Bits log2_;
};

/// Throws UndefinedLogError when both likelihoods are zero.
BayesFactor bayes_factor(const ObservationModel& om, std::string_view x, std::string_view theta1,
                         std::string_view theta2);

struct TransferEntry {
    std::string model;
    Probability prior;
    Bits prior_info;
    Probability likelihood;
    Bits likelihood_info;
    std::optional<Bits> tic; ///< nullopt when the prior is 0.
    SignClass sign = SignClass::undefined;
    Bits posterior_info;
    Probability posterior_prob; ///< information-form posterior.
};

/// Decomposition of one observation's effect on every model.
struct TransferReport {
    std::string observation;
    Probability evidence;
    Bits evidence_info;
    std::vector<TransferEntry> entries;
};

TransferReport transfer_report(const ModelSpace& ms, const ObservationModel& om, std::string_view x);

} // namespace infotransfer
