#pragma once

/**
 * Seeded random objects for property checks.
 */

#include "lbrep/braid.hpp"
#include "lbrep/ring.hpp"

#include <random>

namespace lbrep {

using Rng = std::mt19937_64;

/// Up to max_terms terms, exponents in [-spread, spread], small non-zero coefficients.
GroupRingElement random_element(const Context& context, Rng& rng, int max_terms = 4, int spread = 3);
/// +-t^v with v in [-spread, spread]^d.
GroupRingElement random_unit(const Context& context, Rng& rng, int spread = 3);
BraidWord random_word(int strands, int max_length, Rng& rng);

}  // namespace lbrep
