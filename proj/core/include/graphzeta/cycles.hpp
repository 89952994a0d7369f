#ifndef GRAPHZETA_CYCLES_HPP
#define GRAPHZETA_CYCLES_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "graphzeta/digraph.hpp"
#include "graphzeta/scalar.hpp"
#include "graphzeta/weights.hpp"

namespace graphzeta {

/// A closed path: arcs with head(c_i) = tail(c_{i+1}) cyclically.
struct ClosedPath {
    std::vector<ArcId> arcs;
};

/// A rotation class of closed paths, keyed by its lexicographically
/// least rotation.
struct Cycle {
    std::vector<ArcId> representative;
    int length() const { return static_cast<int>(representative.size()); }
};

/// Thrown when a brute-force enumeration exceeds its resource cap.
/// Signals oracle misuse (graph too large for exhaustive search), not a
/// math error.
class OracleCapExceeded : public std::runtime_error {
public:
    explicit OracleCapExceeded(std::size_t cap)
        : std::runtime_error("enumeration cap of " + std::to_string(cap) +
                             " paths exceeded") {}
};

inline constexpr std::size_t kDefaultOracleCap = 1'000'000;

bool is_closed_path(const Digraph& d, const std::vector<ArcId>& arcs);

/// Lexicographically least rotation of an arc sequence.
std::vector<ArcId> least_rotation(std::vector<ArcId> arcs);

/// True when the sequence is not a proper power of a shorter closed path.
bool is_prime_path(const std::vector<ArcId>& arcs);

/// X_k: every arc sequence of length k that closes cyclically, in
/// depth-first order. Rotations are distinct closed paths.
std::vector<ClosedPath> enumerate_closed_paths(const Digraph& d, int length,
                                               std::size_t cap = kDefaultOracleCap);

/// One canonical representative per prime cycle of length <= max_length.
std::vector<Cycle> enumerate_prime_cycles(const Digraph& d, int max_length,
                                          std::size_t cap = kDefaultOracleCap);

/// circ_theta(C) = theta(c1,c2) theta(c2,c3) ... theta(ck,c1).
Scalar circular_product(const Digraph& d, const WeightAssignment& w,
                        const std::vector<ArcId>& arcs);

}  // namespace graphzeta

#endif
