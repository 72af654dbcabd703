#include <catch2/catch_amalgamated.hpp>

#include "obn/reductions.hpp"
#include "test_util.hpp"

using namespace obn;

namespace {

// all partitions of V into at most `max_parts` nonempty cliques, as
// canonical part lists (parts sorted, list sorted by first member)
std::vector<std::vector<std::vector<int>>> clique_partitions(const Graph& g, int max_parts) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> assign(static_cast<std::size_t>(g.n()), 0);
    auto emit = [&](int parts) {
        std::vector<std::vector<int>> partition(static_cast<std::size_t>(parts));
        for (int v = 0; v < g.n(); ++v)
            partition[static_cast<std::size_t>(assign[static_cast<std::size_t>(v)])].push_back(v);
        for (const auto& part : partition)
            if (part.empty() || !is_clique(g, part))
                return;
        out.push_back(partition);
    };
    auto rec = [&](auto&& self, int v, int used) -> void {
        if (v == g.n()) {
            emit(used);
            return;
        }
        for (int c = 0; c < std::min(used + 1, max_parts); ++c) {
            assign[static_cast<std::size_t>(v)] = c;
            self(self, v + 1, std::max(used, c + 1));
        }
    };
    if (g.n() > 0)
        rec(rec, 0, 0);
    return out;
}

} // namespace

TEST_CASE("reduce_is construction") {
    ReductionInstance ri = reduce_is(path_graph(3), 2);
    REQUIRE(ri.target.n() == 6);
    REQUIRE(ri.target.m() == 2);
    REQUIRE(ri.target_b == 5);
    REQUIRE(ri.isolated_first == 3);
    REQUIRE(ri.isolated_count == 3);
    for (int v = 3; v < 6; ++v)
        REQUIRE(ri.target.degree(v) == 0);
    REQUIRE(induced_subgraph(ri.target, std::vector<int>{0, 1, 2}) == path_graph(3));

    ReductionInstance k3 = reduce_is(complete_graph(3), 1);
    REQUIRE(k3.target_b == 4);
    REQUIRE(k3.target.n() == 6);

    REQUIRE_THROWS_AS(reduce_is(path_graph(3), 0), std::invalid_argument);
    REQUIRE_THROWS_AS(reduce_is(path_graph(3), 4), std::invalid_argument);
}

TEST_CASE("reduce_is adds exactly the isolated independent set") {
    // alpha(H) = alpha(G) + |I|
    std::mt19937 rng(20240716);
    for (int t = 0; t < 50; ++t) {
        std::uniform_int_distribution<int> size(1, 5);
        Graph g = testutil::random_graph(rng, size(rng), 0.5);
        ReductionInstance ri = reduce_is(g, 1);
        REQUIRE(max_independent_set(ri.target).size ==
                max_independent_set(g).size + ri.isolated_count);
    }
}

TEST_CASE("reduce_is equivalence: obn decision mirrors the IS decision") {
    SECTION("the worked example: P3 at k = 2") {
        ReductionInstance ri = reduce_is(path_graph(3), 2);
        REQUIRE(max_independent_set(path_graph(3)).size >= 2);
        REQUIRE(obn_decision(ri.target, 5).satisfied);
        REQUIRE(check_equivalence(ri));
    }
    SECTION("every source with n <= 4, every k") {
        for (const Graph& g : testutil::load_corpus("graphs4.g6"))
            for (int k = 1; k <= g.n(); ++k)
                REQUIRE(check_equivalence(reduce_is(g, k)));
    }
}

TEST_CASE("reduce_mcis construction") {
    Graph two_k2 = matching_graph(2);
    std::vector<std::vector<int>> parts{{0, 1}, {2, 3}};
    ReductionInstance ri = reduce_mcis(two_k2, parts);
    REQUIRE(ri.target.n() == 9);
    REQUIRE(ri.target_b == 6);
    REQUIRE(ri.universal_vertex == 8);
    REQUIRE(ri.target.degree(8) == 8);
    REQUIRE(connected_components(ri.target).size() == 1);

    REQUIRE_THROWS_AS(reduce_mcis(two_k2, {{0, 2}, {1, 3}}), std::invalid_argument);
    REQUIRE_THROWS_AS(reduce_mcis(two_k2, {{0, 1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(reduce_mcis(two_k2, {{0, 1}, {2, 3}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("the universal vertex joins no independent set of size 2") {
    Graph g = matching_graph(2);
    ReductionInstance ri = reduce_mcis(g, {{0, 1}, {2, 3}});
    SetResult alpha = max_independent_set(ri.target);
    REQUIRE(alpha.size >= 2);
    for (int v : alpha.members)
        REQUIRE(v != ri.universal_vertex);
}

TEST_CASE("reduce_mcis equivalence") {
    SECTION("the worked example: 2K2 partitioned into two edges") {
        ReductionInstance ri = reduce_mcis(matching_graph(2), {{0, 1}, {2, 3}});
        REQUIRE(max_independent_set(matching_graph(2)).size >= 2); // pick one per edge
        REQUIRE(check_equivalence(ri));
        REQUIRE(obn_decision(ri.target, ri.target_b).satisfied);
    }
    SECTION("every source with n <= 4 and every partition into at most 2 cliques") {
        int instances = 0;
        for (const Graph& g : testutil::load_corpus("graphs4.g6"))
            for (const auto& parts : clique_partitions(g, 2)) {
                REQUIRE(check_equivalence(reduce_mcis(g, parts)));
                ++instances;
            }
        REQUIRE(instances == 19); // deterministic sweep size over the 11 graphs
    }
}

TEST_CASE("negative control: a corrupted target bound breaks equivalence somewhere") {
    bool broke = false;
    for (const Graph& g : testutil::load_corpus("graphs4.g6")) {
        for (int k = 1; k <= g.n() && !broke; ++k) {
            ReductionInstance ri = reduce_is(g, k);
            ri.target_b += 1; // off-by-one corruption
            if (!check_equivalence(ri))
                broke = true;
        }
        if (broke)
            break;
    }
    REQUIRE(broke);
}
