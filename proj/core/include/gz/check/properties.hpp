#pragma once

#include <cstdint>
#include <vector>

#include "gz/zeta/identity.hpp"

namespace gz {

// Random pairs of rational functions: equality of canonical forms must agree
// with agreement of exact values at `points` random points.
VerificationReport canonicalFormCheck(std::uint64_t seed, int trials, int points = 100);

// The order-8 group and the 32 triples are closed and act compatibly with
// the derived parameters.
VerificationReport weylClosureCheck();

// Orthogonality, additivity and integrality of the additive character at
// p in {2, 3, 5}.
VerificationReport characterSumCheck(std::uint64_t seed);

// The three checks above; ids property-canonical-form, property-weyl-closure,
// property-character-sums.
std::vector<VerificationReport> propertyChecks(std::uint64_t seed, int trials);

}  // namespace gz
