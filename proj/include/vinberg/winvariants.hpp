#pragma once

#include <utility>
#include <vector>

#include "vinberg/chevalley.hpp"

namespace vinberg {

// For each basic invariant degree d of k[t]^W, the exponent a in
// (theta . F_d) = zeta_e^a F_d for a diagram automorphism theta of order e,
// computed from explicit orbit power sums (never from a table).
// Returns pairs (degree, a) with multiplicity, sorted by degree.
std::vector<std::pair<long, long>> invariant_degree_shifts(const RootSystem& rs,
                                                           const DiagramAutomorphism& da);

}  // namespace vinberg
