#pragma once

// Shannon information functions written as expectations of the transfer
// information content, with their classical probability-space forms kept
// alongside as cross-checks.

#include "infotransfer/bayes_engine.hpp"

#include <string>
#include <vector>

namespace infotransfer {

struct KlTerm {
    std::string model;
    Probability weight; ///< posterior P(theta|x)
    Bits tic;
};

/// D_KL(posterior || prior) for one observation, as sum P(theta|x) TIC(x -> theta).
struct KlResult {
    std::string observation;
    double value = 0.0; ///< raw sum, may sit a few ulps below 0
    std::vector<KlTerm> per_model_terms;

    /// value clamped at 0 for display.
    Bits displayed() const { return Bits(value < 0.0 ? 0.0 : value); }
};

struct ObservationKl {
    std::string observation;
    Probability evidence;
    KlResult kl;
};

/// I(Theta; X) as sum P(x) KL(x).
struct MiResult {
    double value = 0.0;
    std::vector<ObservationKl> per_observation_kl;

    Bits displayed() const { return Bits(value < 0.0 ? 0.0 : value); }
};

/// Terms with zero posterior weight contribute exactly 0, including refuted
/// models whose TIC is -inf.
KlResult kl_expected_tic(const ModelSpace& ms, const ObservationModel& om, std::string_view x);

/// sum P(theta|x) log2[P(theta|x) / P(theta)] with 0 log 0 = 0.
Bits kl_classical(const ModelSpace& ms, const ObservationModel& om, std::string_view x);

/// Observations with zero evidence are skipped.
MiResult mutual_information(const ModelSpace& ms, const ObservationModel& om);

/// H(Theta) - sum P(x) H(Theta | X = x).
Bits mutual_information_classical(const ModelSpace& ms, const ObservationModel& om);

} // namespace infotransfer
