#include "infotransfer/info_core.hpp"

#include "infotransfer/errors.hpp"

#include <algorithm>
#include <cmath>

namespace infotransfer {

Bits info_content(const Probability& p) {
    if (p.is_zero()) return Bits(Bits::infinity);
    if (p.is_one()) return Bits(0.0);
    return Bits(-std::log2(p.to_double()));
}

Bits info_content(double p) { return info_content(Probability::approx(p)); }

Probability prob_from_info(Bits b) {
    if (b.value() < 0.0) {
        throw DomainError("negative information content " + std::to_string(b.value()) +
                          " bits is not an event surprisal");
    }
    if (!b.is_finite()) return Probability::approx(0.0);
    return Probability::approx(std::exp2(-b.value()));
}

Bits entropy(const Distribution& d) {
    double h = 0.0;
    for (const auto& p : d.probabilities()) {
        if (p.is_zero()) continue;
        h += p.to_double() * info_content(p).value();
    }
    // Rounding can push a uniform sum a few ulps past log2(n).
    const double bound = std::log2(static_cast<double>(d.size()));
    return Bits(std::min(h, bound));
}

} // namespace infotransfer
