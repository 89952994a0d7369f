#include "graphzeta/arc_partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphzeta {

namespace {

// Blocks of one Phi pair, with the given representative choice (or the
// default lowest-id choice when `chosen` is null).
std::vector<ArcBlock> pair_blocks(const Digraph& d, VertexId u, VertexId v,
                                  const std::vector<ArcId>* chosen, std::size_t& cursor) {
    std::vector<ArcBlock> out;
    const auto& fwd = d.arcs_from_to(u, v);
    const auto& bwd = u == v ? fwd : d.arcs_from_to(v, u);

    auto take_rep = [&](ArcId fallback) {
        if (!chosen) return fallback;
        if (cursor >= chosen->size())
            throw std::invalid_argument("arc_partition: too few representatives");
        return (*chosen)[cursor++];
    };

    if (d.mode() == DigraphMode::general) {
        // One block: the whole parallel class pair (or A_ww for loops).
        ArcBlock b;
        b.u = u;
        b.v = v;
        if (u == v) {
            b.arcs = fwd;
            b.bracket_count = fwd.size();
            b.self_inverse = true;
            b.representative = take_rep(fwd.front());
        } else {
            // B(u,v) comes from A_uv when nonempty, else from A_vu.
            const auto& bracket = fwd.empty() ? bwd : fwd;
            const auto& inv = fwd.empty() ? fwd : bwd;
            b.arcs = bracket;
            b.arcs.insert(b.arcs.end(), inv.begin(), inv.end());
            b.bracket_count = bracket.size();
            b.representative = take_rep(bracket.front());
        }
        const auto bracket_end =
            b.arcs.begin() + static_cast<std::ptrdiff_t>(b.bracket_count);
        if (std::find(b.arcs.begin(), bracket_end, b.representative) == bracket_end)
            throw std::invalid_argument("arc_partition: representative not in bracket class");
        out.push_back(std::move(b));
        return out;
    }

    // Symmetric mode: one block {a, a-bar} per involution orbit.
    if (u < v) {
        for (ArcId a : fwd) {
            ArcBlock b;
            b.u = u;
            b.v = v;
            b.representative = take_rep(a);
            if (b.representative != a)
                throw std::invalid_argument(
                    "arc_partition: symmetric representative must lie in A_uv");
            b.arcs = {a, d.involution(a)};
            b.bracket_count = 1;
            out.push_back(std::move(b));
        }
    } else {
        // Graph loops at u: both arcs of each orbit sit in A_uu.
        std::vector<bool> seen(static_cast<std::size_t>(d.arc_count()), false);
        for (ArcId a : fwd) {
            if (seen[static_cast<std::size_t>(a)]) continue;
            const ArcId bar = d.involution(a);
            seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(bar)] = true;
            ArcBlock b;
            b.u = u;
            b.v = v;
            b.representative = take_rep(std::min(a, bar));
            if (b.representative != a && b.representative != bar)
                throw std::invalid_argument(
                    "arc_partition: representative outside its loop pair");
            b.arcs = {b.representative, d.involution(b.representative)};
            b.bracket_count = 1;
            out.push_back(std::move(b));
        }
    }
    return out;
}

ArcPartition build(const Digraph& d, const std::vector<ArcId>* chosen) {
    ArcPartition p;
    const VertexId n = d.vertex_count();
    std::size_t cursor = 0;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u; v < n; ++v) {
            const bool nonempty =
                !d.arcs_from_to(u, v).empty() || !d.arcs_from_to(v, u).empty();
            if (!nonempty) continue;
            p.phi.emplace_back(u, v);
            auto blocks = pair_blocks(d, u, v, chosen, cursor);
            std::vector<ArcId> reps;
            for (auto& b : blocks) {
                reps.push_back(b.representative);
                p.blocks.push_back(std::move(b));
            }
            p.representatives.push_back(std::move(reps));
        }
    }
    if (chosen && cursor != chosen->size())
        throw std::invalid_argument("arc_partition: too many representatives");

    p.position.assign(static_cast<std::size_t>(d.arc_count()), -1);
    for (const auto& b : p.blocks)
        for (ArcId a : b.arcs) {
            if (p.position[static_cast<std::size_t>(a)] != -1)
                throw std::logic_error("arc_partition: blocks overlap");
            p.position[static_cast<std::size_t>(a)] =
                static_cast<int>(p.arc_order.size());
            p.arc_order.push_back(a);
        }
    if (p.arc_order.size() != static_cast<std::size_t>(d.arc_count()))
        throw std::logic_error("arc_partition: blocks do not cover the arc set");
    return p;
}

}  // namespace

ArcPartition arc_partition(const Digraph& d) { return build(d, nullptr); }

ArcPartition arc_partition(const Digraph& d, const std::vector<ArcId>& reps) {
    auto valid = representative_alternatives(d);
    if (reps.size() != valid.size())
        throw std::invalid_argument("arc_partition: one representative per block required");
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (std::find(valid[i].begin(), valid[i].end(), reps[i]) == valid[i].end())
            throw std::invalid_argument("arc_partition: invalid representative choice");
    return build(d, &reps);
}

std::vector<std::vector<ArcId>> representative_alternatives(const Digraph& d) {
    std::vector<std::vector<ArcId>> out;
    for (const ArcBlock& b : arc_partition(d).blocks) {
        if (d.mode() == DigraphMode::general) {
            out.push_back(b.bracket_arcs());
        } else if (b.u < b.v) {
            out.push_back({b.representative});  // must lie in A_uv
        } else {
            std::vector<ArcId> pair = b.arcs;   // either arc of the loop pair
            std::sort(pair.begin(), pair.end());
            out.push_back(std::move(pair));
        }
    }
    return out;
}

}  // namespace graphzeta
