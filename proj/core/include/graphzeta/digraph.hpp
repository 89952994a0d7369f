#ifndef GRAPHZETA_DIGRAPH_HPP
#define GRAPHZETA_DIGRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace graphzeta {

/// 0-based ordinal within the digraph's fixed total order on V; the
/// order on vertices is the ordinal order.
using VertexId = std::int32_t;
using ArcId = std::int32_t;

struct Arc {
    ArcId id;
    VertexId tail;
    VertexId head;
};

enum class DigraphMode {
    /// Plain multidigraph: a^-1 is the full opposite parallel class
    /// (and contains a itself when a is a loop).
    general,
    /// Symmetric digraph of a graph: every arc is paired with its
    /// reversal by a fixed-point-free involution, and a^-1 = {a-bar}.
    symmetric_of,
};

/// Finite multidigraph with a fixed vertex order and dense 0-based arc
/// ids. Immutable after construction. Multi-arcs and loops are allowed.
class Digraph {
public:
    /// General-mode digraph from (tail, head) pairs.
    static Digraph general(VertexId vertex_count,
                           const std::vector<std::pair<VertexId, VertexId>>& arcs);

    /// Symmetric digraph of a graph: edge i = {u, v} becomes arcs 2i
    /// (u -> v) and 2i+1 (v -> u), paired by the involution. A graph
    /// loop becomes two distinct paired arcs.
    static Digraph symmetric_of(VertexId vertex_count,
                                const std::vector<std::pair<VertexId, VertexId>>& edges);

    VertexId vertex_count() const { return vertex_count_; }
    ArcId arc_count() const { return static_cast<ArcId>(arcs_.size()); }
    const Arc& arc(ArcId a) const { return arcs_[static_cast<std::size_t>(a)]; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    DigraphMode mode() const { return mode_; }

    /// The paired arc a-bar; only meaningful in symmetric_of mode.
    ArcId involution(ArcId a) const;

    /// A_{uv}: arcs from u to v, ascending by id.
    const std::vector<ArcId>& arcs_from_to(VertexId u, VertexId v) const;

    /// a^-1 per mode: {a-bar} in symmetric_of mode, A_{head(a) tail(a)}
    /// in general mode (contains a itself for a general-mode loop).
    std::vector<ArcId> inverse_set(ArcId a) const;

    /// arc[a]: arcs sharing a's inverse set. {a} in symmetric_of mode,
    /// A_{tail(a) head(a)} in general mode.
    std::vector<ArcId> bracket_set(ArcId a) const;

    /// Membership test equivalent to b in inverse_set(a), O(1).
    bool in_inverse_set(ArcId a, ArcId b) const;

    /// The same arcs reinterpreted as a plain digraph (involution dropped).
    Digraph as_general() const;

    /// Edge list of the underlying graph; symmetric_of mode only.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

private:
    Digraph() = default;
    void index_pairs();
    void check_arc(ArcId a) const;

    VertexId vertex_count_ = 0;
    DigraphMode mode_ = DigraphMode::general;
    std::vector<Arc> arcs_;
    std::vector<ArcId> involution_;  // empty in general mode
    // A_{uv} lookup keyed by u * vertex_count + v.
    std::vector<std::vector<ArcId>> by_pair_;
};

}  // namespace graphzeta

#endif
