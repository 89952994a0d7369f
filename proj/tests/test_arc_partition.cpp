#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "graphzeta/arc_partition.hpp"
#include "testutil.hpp"

using namespace graphzeta;
using namespace graphzeta::test;

namespace {

// The partition invariants checked on every constructed partition:
// disjoint cover, phi well-formed, block = bracket u inverse of its
// representative, and the bracket-before-inverse internal order.
void check_invariants(const Digraph& d, const ArcPartition& p) {
    // arc_order is a permutation of the arc ids
    std::vector<ArcId> sorted = p.arc_order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<ArcId> iota(static_cast<std::size_t>(d.arc_count()));
    std::iota(iota.begin(), iota.end(), 0);
    REQUIRE(sorted == iota);
    for (std::size_t i = 0; i < p.arc_order.size(); ++i)
        REQUIRE(p.position[static_cast<std::size_t>(p.arc_order[i])] ==
                static_cast<int>(i));

    // phi pairs are ordered, nonempty, and unique
    REQUIRE(p.representatives.size() == p.phi.size());
    std::set<std::pair<VertexId, VertexId>> seen_pairs;
    for (const auto& [u, v] : p.phi) {
        CHECK(u <= v);
        CHECK((!d.arcs_from_to(u, v).empty() || !d.arcs_from_to(v, u).empty()));
        CHECK(seen_pairs.insert({u, v}).second);
    }

    // blocks are disjoint, cover everything, and match their pair
    std::set<ArcId> covered;
    for (const ArcBlock& b : p.blocks) {
        CHECK(std::find(p.phi.begin(), p.phi.end(), std::make_pair(b.u, b.v)) !=
              p.phi.end());
        for (ArcId a : b.arcs) CHECK(covered.insert(a).second);

        // block = arc[rep] u rep^-1, bracket side first
        const auto bracket = d.bracket_set(b.representative);
        const auto inv = d.inverse_set(b.representative);
        std::set<ArcId> expected(bracket.begin(), bracket.end());
        expected.insert(inv.begin(), inv.end());
        CHECK(std::set<ArcId>(b.arcs.begin(), b.arcs.end()) == expected);
        const auto bracket_arcs = b.bracket_arcs();
        CHECK(std::set<ArcId>(bracket_arcs.begin(), bracket_arcs.end()) ==
              std::set<ArcId>(bracket.begin(), bracket.end()));
        const auto inv_arcs = b.inverse_arcs();
        CHECK(std::set<ArcId>(inv_arcs.begin(), inv_arcs.end()) ==
              std::set<ArcId>(inv.begin(), inv.end()));
        CHECK(b.self_inverse == (std::set<ArcId>(bracket.begin(), bracket.end()) ==
                                 std::set<ArcId>(inv.begin(), inv.end())));
    }
    CHECK(covered.size() == static_cast<std::size_t>(d.arc_count()));

    // every pair's blocks union exactly to arc(u,v)
    for (std::size_t i = 0; i < p.phi.size(); ++i) {
        const auto [u, v] = p.phi[i];
        std::set<ArcId> pair_arcs;
        for (const ArcBlock& b : p.blocks)
            if (b.u == u && b.v == v) pair_arcs.insert(b.arcs.begin(), b.arcs.end());
        std::set<ArcId> expected;
        for (ArcId a : d.arcs_from_to(u, v)) expected.insert(a);
        for (ArcId a : d.arcs_from_to(v, u)) expected.insert(a);
        CHECK(pair_arcs == expected);
    }
}

}  // namespace

TEST_CASE("mixed fixture, general mode: 4 pairs, 4 blocks") {
    const Digraph d = mixed_general();
    const ArcPartition p = arc_partition(d);
    CHECK(p.phi == std::vector<std::pair<VertexId, VertexId>>{
                       {0, 0}, {0, 1}, {0, 2}, {1, 2}});
    REQUIRE(p.blocks.size() == 4);
    CHECK(p.blocks[0].arcs == std::vector<ArcId>{kLoop0, kLoop1});
    CHECK(p.blocks[0].self_inverse);
    CHECK(p.blocks[0].representative == kLoop0);
    CHECK(p.blocks[1].arcs == std::vector<ArcId>{kV0V1a, kV0V1b, kV1V0a, kV1V0b});
    CHECK(p.blocks[1].bracket_count == 2);
    CHECK(p.blocks[2].arcs == std::vector<ArcId>{kV0V2, kV2V0});
    CHECK(p.blocks[3].arcs == std::vector<ArcId>{kV1V2, kV2V1});
    CHECK(p.arc_order == std::vector<ArcId>{kLoop0, kLoop1, kV0V1a, kV0V1b, kV1V0a,
                                            kV1V0b, kV0V2, kV2V0, kV1V2, kV2V1});
    check_invariants(d, p);
}

TEST_CASE("mixed fixture, symmetric mode: 5 blocks of paired arcs") {
    const Digraph d = mixed_symmetric();
    const ArcPartition p = arc_partition(d);
    CHECK(p.phi == std::vector<std::pair<VertexId, VertexId>>{
                       {0, 0}, {0, 1}, {0, 2}, {1, 2}});
    REQUIRE(p.blocks.size() == 5);
    CHECK(p.blocks[0].arcs == std::vector<ArcId>{kLoop0, kLoop1});
    CHECK_FALSE(p.blocks[0].self_inverse);
    CHECK(p.blocks[1].arcs == std::vector<ArcId>{kV0V1a, kV1V0a});
    CHECK(p.blocks[2].arcs == std::vector<ArcId>{kV0V1b, kV1V0b});
    CHECK(p.blocks[3].arcs == std::vector<ArcId>{kV0V2, kV2V0});
    CHECK(p.blocks[4].arcs == std::vector<ArcId>{kV1V2, kV2V1});
    CHECK(p.representatives[1] == std::vector<ArcId>{kV0V1a, kV0V1b});
    check_invariants(d, p);
}

TEST_CASE("one-sided pair: a single arc forms a block with empty inverse") {
    const Digraph d = one_arc();
    const ArcPartition p = arc_partition(d);
    REQUIRE(p.phi == std::vector<std::pair<VertexId, VertexId>>{{0, 1}});
    REQUIRE(p.blocks.size() == 1);
    CHECK(p.blocks[0].arcs == std::vector<ArcId>{0});
    CHECK(p.blocks[0].bracket_count == 1);
    CHECK(p.blocks[0].inverse_arcs().empty());
    check_invariants(d, p);
}

TEST_CASE("reversed pair: B(u,v) falls back to the other side") {
    // two arcs v1 -> v0 and nothing back: bracket side is A_{v1 v0}
    const Digraph d = Digraph::general(2, {{1, 0}, {1, 0}});
    const ArcPartition p = arc_partition(d);
    REQUIRE(p.blocks.size() == 1);
    CHECK(p.phi == std::vector<std::pair<VertexId, VertexId>>{{0, 1}});
    CHECK(p.blocks[0].arcs == std::vector<ArcId>{0, 1});
    CHECK(p.blocks[0].bracket_count == 2);
    CHECK(p.blocks[0].inverse_arcs().empty());
    check_invariants(d, p);
}

TEST_CASE("empty digraph yields an empty partition") {
    const Digraph d = Digraph::general(3, {});
    const ArcPartition p = arc_partition(d);
    CHECK(p.phi.empty());
    CHECK(p.blocks.empty());
    CHECK(p.arc_order.empty());
}

TEST_CASE("partition invariants hold on 200 random multidigraphs") {
    std::mt19937_64 rng(227);
    for (int trial = 0; trial < 200; ++trial) {
        const Digraph d = trial % 3 == 2 ? random_symmetric_digraph(rng)
                                         : random_general_digraph(rng);
        check_invariants(d, arc_partition(d));
    }
}

TEST_CASE("alternative representatives rebuild the same blocks") {
    const Digraph d = mixed_general();
    const auto alternatives = representative_alternatives(d);
    REQUIRE(alternatives.size() == 4);
    CHECK(alternatives[0] == std::vector<ArcId>{kLoop0, kLoop1});
    CHECK(alternatives[1] == std::vector<ArcId>{kV0V1a, kV0V1b});
    CHECK(alternatives[2] == std::vector<ArcId>{kV0V2});
    CHECK(alternatives[3] == std::vector<ArcId>{kV1V2});

    const ArcPartition alt = arc_partition(d, {kLoop1, kV0V1b, kV0V2, kV1V2});
    CHECK(alt.blocks[0].representative == kLoop1);
    CHECK(alt.blocks[1].representative == kV0V1b);
    check_invariants(d, alt);

    CHECK_THROWS_AS(arc_partition(d, {kV1V0a, kV0V1b, kV0V2, kV1V2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(arc_partition(d, {kLoop0}), std::invalid_argument);
}

TEST_CASE("symmetric loop pairs allow either arc as representative") {
    const Digraph d = mixed_symmetric();
    const auto alternatives = representative_alternatives(d);
    REQUIRE(alternatives.size() == 5);
    CHECK(alternatives[0] == std::vector<ArcId>{kLoop0, kLoop1});
    CHECK(alternatives[1] == std::vector<ArcId>{kV0V1a});

    const ArcPartition alt =
        arc_partition(d, {kLoop1, kV0V1a, kV0V1b, kV0V2, kV1V2});
    CHECK(alt.blocks[0].arcs == std::vector<ArcId>{kLoop1, kLoop0});
    check_invariants(d, alt);
}
