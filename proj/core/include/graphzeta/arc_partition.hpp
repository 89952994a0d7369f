#ifndef GRAPHZETA_ARC_PARTITION_HPP
#define GRAPHZETA_ARC_PARTITION_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "graphzeta/digraph.hpp"

namespace graphzeta {

/// One block arc(a) = arc[a] u a^-1 of the arc-set decomposition, with
/// the bracket-side arcs listed before the remaining inverse arcs.
struct ArcBlock {
    VertexId u, v;  // the Phi pair this block belongs to, u <= v
    ArcId representative;
    std::vector<ArcId> arcs;
    /// arcs[0 .. bracket_count) is arc[representative].
    std::size_t bracket_count = 0;
    /// General-mode loop block: arc[a] and a^-1 are the same set.
    bool self_inverse = false;

    std::vector<ArcId> bracket_arcs() const {
        return {arcs.begin(), arcs.begin() + static_cast<std::ptrdiff_t>(bracket_count)};
    }
    /// a^-1 of the representative (the whole block for a self-inverse one).
    std::vector<ArcId> inverse_arcs() const {
        if (self_inverse) return arcs;
        return {arcs.begin() + static_cast<std::ptrdiff_t>(bracket_count), arcs.end()};
    }
};

/// The decomposition A = |_| over (u,v) in Phi of |_| over a in B(u,v)
/// of arc(a), together with the block-grouped arc ordering that makes
/// the J matrix block-diagonal.
struct ArcPartition {
    std::vector<std::pair<VertexId, VertexId>> phi;  // lexicographic, u <= v
    /// B(u,v) for each phi pair, in phi order.
    std::vector<std::vector<ArcId>> representatives;
    std::vector<ArcBlock> blocks;
    /// Permutation of arc ids: blocks contiguous, in block order.
    std::vector<ArcId> arc_order;
    /// Inverse permutation: position[arc id] = index in arc_order.
    std::vector<int> position;
};

/// Builds the partition with the default representative choice (lowest
/// arc id in each bracket class).
ArcPartition arc_partition(const Digraph& d);

/// Same partition with an explicit representative per block, given in
/// default block order. Each choice must come from
/// representative_alternatives; throws std::invalid_argument otherwise.
ArcPartition arc_partition(const Digraph& d, const std::vector<ArcId>& reps);

/// Valid representative choices per block (default block order). These
/// are the members of the block's bracket class on the B(u,v) side.
std::vector<std::vector<ArcId>> representative_alternatives(const Digraph& d);

}  // namespace graphzeta

#endif
