#ifndef GRAPHZETA_WEIGHTS_HPP
#define GRAPHZETA_WEIGHTS_HPP

#include <vector>

#include "graphzeta/digraph.hpp"
#include "graphzeta/scalar.hpp"

namespace graphzeta {

/// The four arc weight maps tau1, tau2, upsilon1, upsilon2 : A -> C,
/// stored per arc id. They induce tau(a,a') = tau1(a) tau2(a') and
/// upsilon(a,a') = upsilon1(a) upsilon2(a').
struct WeightAssignment {
    std::vector<Scalar> tau1, tau2, upsilon1, upsilon2;

    /// The classic preset: all four maps identically 1.
    static WeightAssignment all_ones(ArcId arc_count);
    static WeightAssignment zeros(ArcId arc_count);

    bool covers(ArcId arc_count) const {
        const auto m = static_cast<std::size_t>(arc_count);
        return tau1.size() == m && tau2.size() == m && upsilon1.size() == m &&
               upsilon2.size() == m;
    }
};

/// The weight theta(a,a') = tau(a,a') [head(a)=tail(a')]
///                        - upsilon(a,a') [a' in a^-1].
Scalar theta(const Digraph& d, const WeightAssignment& w, ArcId a, ArcId b);

/// upsilon(S) = sum over a in S of upsilon(a,a).
Scalar upsilon_sum(const WeightAssignment& w, const std::vector<ArcId>& arcs);

}  // namespace graphzeta

#endif
