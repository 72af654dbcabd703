#include <catch2/catch_amalgamated.hpp>

#include "obn/solver.hpp"
#include "test_util.hpp"

using namespace obn;

namespace {

std::vector<Graph> connected_up_to(int n) {
    std::vector<Graph> out;
    for (Graph& g : testutil::load_corpus("connected_le6.g6"))
        if (g.n() <= n)
            out.push_back(std::move(g));
    return out;
}

} // namespace

TEST_CASE("obn_exact on the named families") {
    REQUIRE(obn_exact(empty_graph(1)).value == 1);
    REQUIRE(obn_exact(complete_graph(2)).value == 2);
    REQUIRE(obn_exact(complete_graph(3)).value == 2);
    REQUIRE(obn_exact(complete_graph(4)).value == 2);
    REQUIRE(obn_exact(complete_graph(5)).value == 3);
    REQUIRE(obn_exact(path_graph(2)).value == 2);
    REQUIRE(obn_exact(matching_graph(3)).value == 4);
}

TEST_CASE("obn_exact matches the double brute force on connected graphs, n <= 4") {
    for (const Graph& g : connected_up_to(4)) {
        ObnResult r = obn_exact(g);
        REQUIRE(r.value == testutil::obn_bruteforce(g));
        REQUIRE(burning_number(r.witness).value == r.value);
        REQUIRE(r.method == Method::exact_search);
    }
}

TEST_CASE("obn_exact matches the double brute force exhaustively at n = 5") {
    for (const Graph& g : connected_up_to(5)) {
        if (g.n() != 5)
            continue;
        REQUIRE(obn_exact(g).value == testutil::obn_bruteforce(g));
    }
    for (const Graph& g :
         {matching_graph(2), disjoint_union(path_graph(3), empty_graph(2)),
          disjoint_union(complete_graph(3), path_graph(2)),
          disjoint_union(cycle_graph(3), empty_graph(1))}) {
        REQUIRE(obn_exact(g).value == testutil::obn_bruteforce(g));
    }
}

TEST_CASE("obn_exact witness consistency on connected graphs, n = 5") {
    for (const Graph& g : connected_up_to(5)) {
        if (g.n() != 5)
            continue;
        ObnResult r = obn_exact(g);
        REQUIRE(burning_number(r.witness).value == r.value);
        ObnBracket br = bracket(g);
        REQUIRE(br.lower <= r.value);
        REQUIRE(r.value <= br.upper);
    }
}

TEST_CASE("obn_exact budget error carries the bracket") {
    Graph big = complete_graph(8); // m = 28 > default budget
    try {
        obn_exact(big);
        FAIL("expected BudgetError");
    } catch (const BudgetError& e) {
        auto partial = e.partial_bracket();
        REQUIRE(partial.has_value());
        REQUIRE(partial->first == 1);
        REQUIRE(partial->second == 3);
    }
    ExactOptions roomy;
    roomy.budget_edges = 28;
    REQUIRE(obn_exact(complete_graph(8), roomy).value == 3);
}

TEST_CASE("parallel shards agree with the sequential value") {
    ExactOptions par;
    par.jobs = 4;
    for (const Graph& g : {cycle_graph(6), complete_graph(6), star_graph(9),
                           disjoint_union(cycle_graph(5), path_graph(3))}) {
        ObnResult seq = obn_exact(g);
        ObnResult shard = obn_exact(g, par);
        REQUIRE(seq.value == shard.value);
        REQUIRE(burning_number(shard.witness).value == shard.value);
    }
}

TEST_CASE("obn decision") {
    SECTION("K5 at 3: yes, and the witness needs 3") {
        ObnDecision d = obn_decision(complete_graph(5), 3);
        REQUIRE(d.satisfied);
        REQUIRE(d.witness.has_value());
        REQUIRE(burning_number(*d.witness).value >= 3);
    }
    SECTION("K5 at 4: no") {
        REQUIRE_FALSE(obn_decision(complete_graph(5), 4).satisfied);
    }
    SECTION("b = 1 is yes exactly when the graph is nonempty") {
        REQUIRE(obn_decision(path_graph(3), 1).satisfied);
        REQUIRE_FALSE(obn_decision(empty_graph(0), 1).satisfied);
    }
    SECTION("refutation log covers every mask with verifying schedules") {
        Graph c4 = cycle_graph(4);
        ObnDecision d = obn_decision(c4, 4, /*want_refutation=*/true);
        REQUIRE_FALSE(d.satisfied);
        REQUIRE(d.refutation_log.has_value());
        REQUIRE(d.refutation_log->size() == 16);
        for (const auto& [mask, schedule] : *d.refutation_log) {
            REQUIRE(schedule.length() == 3);
            REQUIRE(verify_schedule(orientation_from_bits(c4, mask), schedule));
        }
    }
    SECTION("decision agrees with the exact value, n <= 5 exhaustive") {
        for (const Graph& g : connected_up_to(5)) {
            int exact = obn_exact(g).value;
            for (int b = 0; b <= g.n() + 2; ++b)
                REQUIRE(obn_decision(g, b).satisfied == (exact >= b));
        }
    }
}

TEST_CASE("p4_fires") {
    Graph p4 = path_graph(4);
    SECTION("all 8 orientations admit a radius-0/radius-2 pair") {
        for (std::uint64_t mask = 0; mask < 8; ++mask) {
            Orientation o = orientation_from_bits(p4, mask);
            auto [v0, v2] = p4_fires(o);
            BurningSchedule s{{v0, v0, v2}};
            REQUIRE(verify_schedule(o, s));
        }
    }
    SECTION("the pair is the lexicographically first valid one") {
        // 0->1->2->3: ball(1,2) = {1,2,3}, so (0,1) is the first valid pair
        auto [v0, v2] = p4_fires(orientation_from_bits(p4, 0));
        REQUIRE(v0 == 0);
        REQUIRE(v2 == 1);
    }
    SECTION("relabeled paths are accepted") {
        Graph zigzag(4, {{0, 2}, {1, 2}, {1, 3}}); // path 0-2-1-3
        for (std::uint64_t mask = 0; mask < 8; ++mask) {
            Orientation o = orientation_from_bits(zigzag, mask);
            auto [v0, v2] = p4_fires(o);
            BurningSchedule s{{v0, v0, v2}};
            REQUIRE(verify_schedule(o, s));
        }
    }
    SECTION("non-P4 inputs are rejected") {
        REQUIRE_THROWS_AS(p4_fires(orientation_from_bits(star_graph(3), 0)),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(p4_fires(orientation_from_bits(cycle_graph(4), 0)),
                          std::invalid_argument);
        Graph k3k1 = disjoint_union(complete_graph(3), empty_graph(1));
        REQUIRE_THROWS_AS(p4_fires(orientation_from_bits(k3k1, 0)), std::invalid_argument);
    }
}

TEST_CASE("ke_obn") {
    SECTION("stars") {
        ObnResult r = ke_obn(star_graph(5));
        REQUIRE(r.value == 5);
        REQUIRE(r.method == Method::ke_theorem);
        REQUIRE(r.explored == 0);
        REQUIRE(burning_number(r.witness).value == 5);
    }
    SECTION("4P2 -> alpha + 1 = 5") {
        ObnResult r = ke_obn(matching_graph(4));
        REQUIRE(r.value == 5);
        REQUIRE(burning_number(r.witness).value == 5);
    }
    SECTION("P4 + P2 -> alpha = 3, cross-checked against the search") {
        Graph g = disjoint_union(path_graph(4), path_graph(2));
        ObnResult fast = ke_obn(g);
        REQUIRE(fast.value == 3);
        REQUIRE(obn_exact(g).value == 3);
    }
    SECTION("non-KE input is rejected") {
        REQUIRE_THROWS_AS(ke_obn(cycle_graph(5)), std::invalid_argument);
    }
    SECTION("n <= 4 delegates to the search") {
        ObnResult r = ke_obn(path_graph(4));
        REQUIRE(r.method == Method::exact_search);
        REQUIRE(r.value == testutil::obn_bruteforce(path_graph(4)));
    }
    SECTION("boundary: 2P2 at n = 4 vs P2 + P3 at n = 5") {
        REQUIRE(ke_obn(matching_graph(2)).value == testutil::obn_bruteforce(matching_graph(2)));
        Graph five = disjoint_union(path_graph(2), path_graph(3));
        REQUIRE(ke_obn(five).value == 3);
        REQUIRE(ke_obn(five).method == Method::ke_theorem);
    }
}

TEST_CASE("ke_schedule") {
    SECTION("K_{1,5}: length 5 on all 32 orientations") {
        Graph star = star_graph(5);
        for (std::uint64_t mask = 0; mask < 32; ++mask) {
            Orientation o = orientation_from_bits(star, mask);
            BurningSchedule s = ke_schedule(o);
            REQUIRE(s.length() == 5);
            REQUIRE(verify_schedule(o, s));
        }
    }
    SECTION("P4 + P2 (perfect matching): length 3 on all 16 orientations") {
        Graph g = disjoint_union(path_graph(4), path_graph(2));
        for (std::uint64_t mask = 0; mask < 16; ++mask) {
            Orientation o = orientation_from_bits(g, mask);
            BurningSchedule s = ke_schedule(o);
            REQUIRE(s.length() == 3);
            REQUIRE(verify_schedule(o, s));
        }
    }
    SECTION("P3 + 3K1 (no perfect matching): length alpha on all orientations") {
        Graph g = disjoint_union(path_graph(3), empty_graph(3));
        const int alpha = max_independent_set(g).size;
        REQUIRE(alpha == 5);
        for (std::uint64_t mask = 0; mask < 4; ++mask) {
            Orientation o = orientation_from_bits(g, mask);
            BurningSchedule s = ke_schedule(o);
            REQUIRE(s.length() == alpha);
            REQUIRE(verify_schedule(o, s));
        }
    }
    SECTION("every KE non-mP2 graph with 5 <= n <= 6 in the corpus, all orientations") {
        for (const Graph& g : testutil::load_corpus("connected_le6.g6")) {
            if (g.n() < 5 || !is_konig_egervary(g) || is_disjoint_p2s(g))
                continue;
            if (g.m() > 9)
                continue; // keep the exhaustive sweep quick; acceptance covers the rest
            const int alpha = max_independent_set(g).size;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()); ++mask) {
                Orientation o = orientation_from_bits(g, mask);
                BurningSchedule s = ke_schedule(o);
                REQUIRE(s.length() == alpha);
                REQUIRE(verify_schedule(o, s));
            }
        }
    }
    SECTION("preconditions") {
        REQUIRE_THROWS_AS(ke_schedule(orientation_from_bits(matching_graph(4), 0)),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(ke_schedule(orientation_from_bits(path_graph(3), 0)),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(ke_schedule(orientation_from_bits(cycle_graph(7), 0)),
                          std::invalid_argument);
    }
}

TEST_CASE("solve dispatcher") {
    SECTION("C5 -> exact search") {
        REQUIRE(solve(cycle_graph(5)).method == Method::exact_search);
    }
    SECTION("K_{1,9} -> KE theorem, value 9") {
        ObnResult r = solve(star_graph(9));
        REQUIRE(r.method == Method::ke_theorem);
        REQUIRE(r.value == 9);
    }
    SECTION("K4 -> exact search despite being n <= 4") {
        ObnResult r = solve(complete_graph(4));
        REQUIRE(r.method == Method::exact_search);
        REQUIRE(r.value == 2);
    }
    SECTION("edgeless -> trivial, obn = n") {
        ObnResult r = solve(empty_graph(9));
        REQUIRE(r.method == Method::trivial);
        REQUIRE(r.value == 9);
        REQUIRE(solve(empty_graph(0)).value == 0);
    }
    SECTION("dispatcher value equals exact search, n <= 5 exhaustive") {
        for (const Graph& g : connected_up_to(5))
            REQUIRE(solve(g).value == obn_exact(g).value);
    }
}

TEST_CASE("KE theorem agrees with exact search, corpus subset at n = 5,6") {
    for (const Graph& g : testutil::load_corpus("connected_le6.g6")) {
        if (g.n() < 5 || !is_konig_egervary(g))
            continue;
        REQUIRE(ke_obn(g).value == obn_exact(g).value);
    }
}
