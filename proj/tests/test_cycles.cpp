#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "graphzeta/cycles.hpp"
#include "testutil.hpp"

using namespace graphzeta;
using namespace graphzeta::test;

TEST_CASE("single loop arc: one closed path per length, one prime cycle") {
    const Digraph d = single_loop();
    for (int k = 1; k <= 6; ++k) {
        const auto paths = enumerate_closed_paths(d, k);
        REQUIRE(paths.size() == 1);
        CHECK(paths[0].arcs == std::vector<ArcId>(static_cast<std::size_t>(k), 0));
    }
    const auto primes = enumerate_prime_cycles(d, 6);
    REQUIRE(primes.size() == 1);
    CHECK(primes[0].representative == std::vector<ArcId>{0});
}

TEST_CASE("triangle: 6 closed paths of length 2, 5 prime cycles through 3") {
    const Digraph d = c3();
    const auto paths = enumerate_closed_paths(d, 2);
    CHECK(paths.size() == 6);  // each arc followed by its reversal
    for (const ClosedPath& p : paths) {
        CHECK(is_closed_path(d, p.arcs));
        CHECK(p.arcs[1] == d.involution(p.arcs[0]));
    }

    const auto primes = enumerate_prime_cycles(d, 3);
    int len2 = 0, len3 = 0;
    for (const Cycle& c : primes) {
        if (c.length() == 2) ++len2;
        if (c.length() == 3) ++len3;
    }
    CHECK(len2 == 3);  // one back-and-forth per edge
    CHECK(len3 == 2);  // the two directed triangles
    CHECK(primes.size() == 5);
}

TEST_CASE("mixed fixture: the closed paths of length 1 are the loops") {
    const auto paths = enumerate_closed_paths(mixed_general(), 1);
    std::set<std::vector<ArcId>> found;
    for (const ClosedPath& p : paths) found.insert(p.arcs);
    CHECK(found == std::set<std::vector<ArcId>>{{kLoop0}, {kLoop1}});
}

TEST_CASE("proper powers are never prime") {
    // 2-cycle u <-> v: its square (length 4) must not be listed
    const Digraph d = p2();
    for (const Cycle& c : enumerate_prime_cycles(d, 8))
        CHECK(c.length() == 2);
    CHECK_FALSE(is_prime_path({0, 1, 0, 1}));
    CHECK(is_prime_path({0, 1}));
    CHECK_FALSE(is_prime_path({0, 0, 0}));
}

TEST_CASE("canonical rotation is minimal and rotation-stable") {
    CHECK(least_rotation({2, 0, 1}) == std::vector<ArcId>{0, 1, 2});
    CHECK(least_rotation({1, 0, 1, 0}) == std::vector<ArcId>{0, 1, 0, 1});
    std::mt19937_64 rng(307);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<ArcId> seq;
        const std::size_t len = 1 + rng() % 8;
        for (std::size_t i = 0; i < len; ++i)
            seq.push_back(static_cast<ArcId>(rng() % 5));
        auto canon = least_rotation(seq);
        for (std::size_t s = 0; s < len; ++s) {
            std::rotate(seq.begin(), seq.begin() + 1, seq.end());
            CHECK(least_rotation(seq) == canon);
            CHECK_FALSE(seq < canon);
        }
    }
}

TEST_CASE("circular products are rotation invariant") {
    const Digraph d = mixed_general();
    std::mt19937_64 rng(311);
    const WeightAssignment w = random_weights(rng, d.arc_count());
    for (int k = 2; k <= 5; ++k) {
        const auto paths = enumerate_closed_paths(d, k);
        for (std::size_t idx = 0; idx < paths.size(); idx += 7) {
            std::vector<ArcId> rotated = paths[idx].arcs;
            const Scalar value = circular_product(d, w, rotated);
            for (int s = 0; s + 1 < k; ++s) {
                std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
                CHECK(circular_product(d, w, rotated) == value);
            }
        }
    }
}

TEST_CASE("enumeration respects the resource cap") {
    const Digraph d = k4();
    CHECK_THROWS_AS(enumerate_closed_paths(d, 8, 100), OracleCapExceeded);
    CHECK_THROWS_AS(enumerate_prime_cycles(d, 8, 100), OracleCapExceeded);
    CHECK_NOTHROW(enumerate_closed_paths(d, 3, 100));
    CHECK_THROWS_AS(enumerate_closed_paths(d, 0), std::invalid_argument);
}

TEST_CASE("closed path enumeration matches the trace of the 0/1 adjacency") {
    std::mt19937_64 rng(313);
    for (int trial = 0; trial < 20; ++trial) {
        const Digraph d = random_general_digraph(rng, 4, 8);
        if (d.arc_count() == 0) continue;
        // count closed walks via the arc-level 0/1 adjacency power trace
        const std::size_t m = static_cast<std::size_t>(d.arc_count());
        std::vector<std::vector<long>> adj(m, std::vector<long>(m, 0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                adj[i][j] = d.arc(static_cast<ArcId>(i)).head ==
                                    d.arc(static_cast<ArcId>(j)).tail
                                ? 1
                                : 0;
        for (int k : {1, 2, 3, 4}) {
            std::vector<std::vector<long>> power(m, std::vector<long>(m, 0));
            for (std::size_t i = 0; i < m; ++i) power[i][i] = 1;
            for (int e = 0; e < k; ++e) {
                std::vector<std::vector<long>> next(m, std::vector<long>(m, 0));
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t l = 0; l < m; ++l)
                        if (power[i][l])
                            for (std::size_t j = 0; j < m; ++j)
                                next[i][j] += power[i][l] * adj[l][j];
                power = std::move(next);
            }
            long trace = 0;
            for (std::size_t i = 0; i < m; ++i) trace += power[i][i];
            CHECK(enumerate_closed_paths(d, k).size() == static_cast<std::size_t>(trace));
        }
    }
}
