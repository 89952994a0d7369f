#ifndef GRAPHZETA_WEIGHT_DRAWS_HPP
#define GRAPHZETA_WEIGHT_DRAWS_HPP

#include <cstdint>

#include "graphzeta/digraph.hpp"
#include "graphzeta/weights.hpp"

namespace graphzeta {

/// Seeded pseudo-random weights: rationals with numerator in [-9, 9]
/// and denominator in [1, 9]. The draw order (tau1, tau2, upsilon1,
/// upsilon2 per arc) and the mt19937_64 stream are fixed, so a seed
/// reproduces the same assignment on every platform.
WeightAssignment draw_weights(ArcId arc_count, std::uint64_t seed);

}  // namespace graphzeta

#endif
