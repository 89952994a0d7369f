#include "graphzeta/cycles.hpp"

#include <algorithm>
#include <set>

namespace graphzeta {

bool is_closed_path(const Digraph& d, const std::vector<ArcId>& arcs) {
    if (arcs.empty()) return false;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc& cur = d.arc(arcs[i]);
        const Arc& next = d.arc(arcs[(i + 1) % arcs.size()]);
        if (cur.head != next.tail) return false;
    }
    return true;
}

std::vector<ArcId> least_rotation(std::vector<ArcId> arcs) {
    if (arcs.size() <= 1) return arcs;
    std::vector<ArcId> best = arcs;
    for (std::size_t shift = 1; shift < arcs.size(); ++shift) {
        std::rotate(arcs.begin(), arcs.begin() + 1, arcs.end());
        if (arcs < best) best = arcs;
    }
    return best;
}

bool is_prime_path(const std::vector<ArcId>& arcs) {
    const std::size_t k = arcs.size();
    for (std::size_t d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = d; i < k && periodic; ++i)
            if (arcs[i] != arcs[i - d]) periodic = false;
        if (periodic) return false;
    }
    return true;
}

namespace {

// Depth-first extension over head/tail adjacency. Branches that cannot
// return to the start vertex in the remaining number of steps are
// pruned, so the work stays proportional to the number of closed paths
// actually delivered; the cap counts delivered paths.
struct PathSearch {
    const Digraph& d;
    std::size_t cap;
    std::size_t delivered = 0;
    std::vector<std::vector<ArcId>> out_arcs;  // arcs leaving each vertex
    // reach[target][r * n + v]: a path of exactly r arcs leads from v
    // to target. Built lazily per target for the current search length.
    std::vector<std::vector<char>> reach;
    int reach_length = 0;

    explicit PathSearch(const Digraph& dg, std::size_t c) : d(dg), cap(c) {
        out_arcs.resize(static_cast<std::size_t>(d.vertex_count()));
        for (const Arc& a : d.arcs())
            out_arcs[static_cast<std::size_t>(a.tail)].push_back(a.id);
        reach.resize(static_cast<std::size_t>(d.vertex_count()));
    }

    const std::vector<char>& reach_table(VertexId target, int length) {
        auto& table = reach[static_cast<std::size_t>(target)];
        const std::size_t n = static_cast<std::size_t>(d.vertex_count());
        if (length != reach_length || table.empty()) {
            if (length != reach_length) {
                for (auto& t : reach) t.clear();
                reach_length = length;
            }
            table.assign(n * static_cast<std::size_t>(length + 1), 0);
            table[static_cast<std::size_t>(target)] = 1;
            for (int r = 1; r <= length; ++r)
                for (const Arc& a : d.arcs())
                    if (table[static_cast<std::size_t>(r - 1) * n +
                              static_cast<std::size_t>(a.head)])
                        table[static_cast<std::size_t>(r) * n +
                              static_cast<std::size_t>(a.tail)] = 1;
        }
        return table;
    }

    template <typename Visit>
    void extend(std::vector<ArcId>& path, int remaining, VertexId target,
                const std::vector<char>& can, Visit&& visit) {
        if (remaining == 0) {
            if (++delivered > cap) throw OracleCapExceeded(cap);
            visit(path);
            return;
        }
        const std::size_t n = static_cast<std::size_t>(d.vertex_count());
        const VertexId at = d.arc(path.back()).head;
        for (ArcId next : out_arcs[static_cast<std::size_t>(at)]) {
            const VertexId to = d.arc(next).head;
            if (!can[static_cast<std::size_t>(remaining - 1) * n +
                     static_cast<std::size_t>(to)])
                continue;
            path.push_back(next);
            extend(path, remaining - 1, target, can, visit);
            path.pop_back();
        }
    }

    template <typename Visit>
    void closed_paths(int length, Visit&& visit) {
        if (length < 1) return;
        std::vector<ArcId> path;
        for (const Arc& start : d.arcs()) {
            const auto& can = reach_table(start.tail, length - 1);
            const std::size_t n = static_cast<std::size_t>(d.vertex_count());
            if (!can[static_cast<std::size_t>(length - 1) * n +
                     static_cast<std::size_t>(start.head)])
                continue;
            path.assign(1, start.id);
            extend(path, length - 1, start.tail, can, visit);
        }
    }
};

}  // namespace

std::vector<ClosedPath> enumerate_closed_paths(const Digraph& d, int length,
                                               std::size_t cap) {
    if (length < 1) throw std::invalid_argument("enumerate_closed_paths: length >= 1");
    std::vector<ClosedPath> out;
    PathSearch search(d, cap);
    search.closed_paths(length,
                        [&](const std::vector<ArcId>& path) { out.push_back({path}); });
    return out;
}

std::vector<Cycle> enumerate_prime_cycles(const Digraph& d, int max_length,
                                          std::size_t cap) {
    if (max_length < 1) throw std::invalid_argument("enumerate_prime_cycles: maxlen >= 1");
    std::vector<Cycle> out;
    std::set<std::vector<ArcId>> seen;
    PathSearch search(d, cap);
    for (int k = 1; k <= max_length; ++k) {
        search.closed_paths(k, [&](const std::vector<ArcId>& path) {
            if (!is_prime_path(path)) return;
            auto canon = least_rotation(path);
            if (seen.insert(canon).second) out.push_back({std::move(canon)});
        });
    }
    return out;
}

Scalar circular_product(const Digraph& d, const WeightAssignment& w,
                        const std::vector<ArcId>& arcs) {
    if (arcs.empty()) throw std::invalid_argument("circular_product: empty path");
    Scalar product = Scalar::one();
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        product *= theta(d, w, arcs[i], arcs[(i + 1) % arcs.size()]);
        if (product.is_zero()) break;
    }
    return product;
}

}  // namespace graphzeta
