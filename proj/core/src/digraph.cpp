#include "graphzeta/digraph.hpp"

#include <stdexcept>
#include <string>

namespace graphzeta {

namespace {

void check_endpoint(VertexId v, VertexId n) {
    if (v < 0 || v >= n)
        throw std::invalid_argument("Digraph: endpoint " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(n) + ")");
}

}  // namespace

Digraph Digraph::general(VertexId vertex_count,
                         const std::vector<std::pair<VertexId, VertexId>>& arcs) {
    if (vertex_count < 0) throw std::invalid_argument("Digraph: negative vertex count");
    Digraph d;
    d.vertex_count_ = vertex_count;
    d.mode_ = DigraphMode::general;
    d.arcs_.reserve(arcs.size());
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        check_endpoint(arcs[k].first, vertex_count);
        check_endpoint(arcs[k].second, vertex_count);
        d.arcs_.push_back(Arc{static_cast<ArcId>(k), arcs[k].first, arcs[k].second});
    }
    d.index_pairs();
    return d;
}

Digraph Digraph::symmetric_of(VertexId vertex_count,
                              const std::vector<std::pair<VertexId, VertexId>>& edges) {
    if (vertex_count < 0) throw std::invalid_argument("Digraph: negative vertex count");
    Digraph d;
    d.vertex_count_ = vertex_count;
    d.mode_ = DigraphMode::symmetric_of;
    d.arcs_.reserve(2 * edges.size());
    d.involution_.reserve(2 * edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [u, v] = edges[e];
        check_endpoint(u, vertex_count);
        check_endpoint(v, vertex_count);
        const ArcId fwd = static_cast<ArcId>(2 * e);
        d.arcs_.push_back(Arc{fwd, u, v});
        d.arcs_.push_back(Arc{fwd + 1, v, u});
        d.involution_.push_back(fwd + 1);
        d.involution_.push_back(fwd);
    }
    d.index_pairs();
    return d;
}

void Digraph::index_pairs() {
    by_pair_.assign(static_cast<std::size_t>(vertex_count_) * vertex_count_, {});
    for (const Arc& a : arcs_)
        by_pair_[static_cast<std::size_t>(a.tail) * vertex_count_ + a.head].push_back(a.id);
}

void Digraph::check_arc(ArcId a) const {
    if (a < 0 || a >= arc_count())
        throw std::invalid_argument("Digraph: arc id out of range");
}

ArcId Digraph::involution(ArcId a) const {
    check_arc(a);
    if (mode_ != DigraphMode::symmetric_of)
        throw std::logic_error("Digraph: involution only defined in symmetric_of mode");
    return involution_[static_cast<std::size_t>(a)];
}

const std::vector<ArcId>& Digraph::arcs_from_to(VertexId u, VertexId v) const {
    check_endpoint(u, vertex_count_);
    check_endpoint(v, vertex_count_);
    return by_pair_[static_cast<std::size_t>(u) * vertex_count_ + v];
}

std::vector<ArcId> Digraph::inverse_set(ArcId a) const {
    check_arc(a);
    if (mode_ == DigraphMode::symmetric_of)
        return {involution_[static_cast<std::size_t>(a)]};
    const Arc& arc = arcs_[static_cast<std::size_t>(a)];
    return arcs_from_to(arc.head, arc.tail);
}

std::vector<ArcId> Digraph::bracket_set(ArcId a) const {
    check_arc(a);
    if (mode_ == DigraphMode::symmetric_of) return {a};
    const Arc& arc = arcs_[static_cast<std::size_t>(a)];
    return arcs_from_to(arc.tail, arc.head);
}

bool Digraph::in_inverse_set(ArcId a, ArcId b) const {
    check_arc(a);
    check_arc(b);
    if (mode_ == DigraphMode::symmetric_of)
        return involution_[static_cast<std::size_t>(a)] == b;
    const Arc& x = arcs_[static_cast<std::size_t>(a)];
    const Arc& y = arcs_[static_cast<std::size_t>(b)];
    return x.head == y.tail && x.tail == y.head;
}

Digraph Digraph::as_general() const {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(arcs_.size());
    for (const Arc& a : arcs_) pairs.emplace_back(a.tail, a.head);
    return general(vertex_count_, pairs);
}

std::vector<std::pair<VertexId, VertexId>> Digraph::edges() const {
    if (mode_ != DigraphMode::symmetric_of)
        throw std::logic_error("Digraph: edges() only defined in symmetric_of mode");
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(arcs_.size() / 2);
    for (std::size_t k = 0; k < arcs_.size(); k += 2)
        out.emplace_back(arcs_[k].tail, arcs_[k].head);
    return out;
}

}  // namespace graphzeta
