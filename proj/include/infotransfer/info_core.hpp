#pragma once

#include "infotransfer/number.hpp"

namespace infotransfer {

/// Self-information -log2(p) in bits. +inf for p = 0, 0 for p = 1.
Bits info_content(const Probability& p);

/// Same as above for a raw binary64 probability; throws DomainError outside
/// [0, 1].
Bits info_content(double p);

/// 2^-b, the probability whose information content is b. Accepts +inf
/// (returns 0); throws DomainError for negative b.
Probability prob_from_info(Bits b);

/// Shannon entropy sum p_i * I(p_i) in bits, with 0 * I(0) = 0.
Bits entropy(const Distribution& d);

} // namespace infotransfer
