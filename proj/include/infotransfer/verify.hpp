#pragma once

// Cross-check of the information-space engine against the exact oracle.

#include "infotransfer/scenario.hpp"

#include <string>
#include <vector>

namespace infotransfer {

inline constexpr double kVerifyTolerance = 1e-9;

struct Deviation {
    std::string quantity; ///< e.g. "posterior_info_form[Monty_B,A]"
    double engine = 0.0;
    double oracle = 0.0;
    double abs_error = 0.0; ///< +inf when exactly one side is infinite
};

struct VerificationReport {
    std::string scenario;
    std::vector<Deviation> comparisons;
    double max_deviation = 0.0;
    std::string worst_quantity;

    bool passed() const { return max_deviation <= kVerifyTolerance; }
};

/// Compares evidence, both posterior routes, TIC, local transfer entropy,
/// both KL routes per observation and both MI routes. Throws
/// NonRationalInputError for scenarios with float probabilities.
VerificationReport verify_against_oracle(const Scenario& s);

std::string render_verification(const VerificationReport& r);

} // namespace infotransfer
