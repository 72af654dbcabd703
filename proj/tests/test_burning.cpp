#include <catch2/catch_amalgamated.hpp>

#include "obn/burning.hpp"
#include "obn/invariants.hpp"
#include "test_util.hpp"

using namespace obn;

namespace {

Orientation fig2_k5() {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < 5; ++i) {
        arcs.emplace_back(i, (i + 1) % 5);
        arcs.emplace_back(i, (i + 2) % 5);
    }
    return orientation_from_arcs(complete_graph(5), arcs);
}

} // namespace

TEST_CASE("verify_schedule") {
    SECTION("single vertex") {
        Orientation o = orientation_from_bits(empty_graph(1), 0);
        REQUIRE(verify_schedule(o, {{0}}));
    }
    SECTION("single arc burned by the tail at radius 1") {
        Orientation o = orientation_from_bits(path_graph(2), 0); // 0 -> 1
        REQUIRE(verify_schedule(o, {{1, 0}}));                   // w0 = 1, w1 = 0
        REQUIRE_FALSE(verify_schedule(o, {{1, 1}}));             // head never burns the tail
    }
    SECTION("no length-2 schedule burns the regular K5 orientation") {
        Orientation o = fig2_k5();
        for (int w0 = 0; w0 < 5; ++w0)
            for (int w1 = 0; w1 < 5; ++w1)
                REQUIRE_FALSE(verify_schedule(o, {{w0, w1}}));
    }
    SECTION("fire index out of range") {
        Orientation o = orientation_from_bits(path_graph(2), 0);
        REQUIRE_THROWS_AS(verify_schedule(o, {{2}}), std::out_of_range);
    }
}

TEST_CASE("burning number basics") {
    SECTION("K1") {
        BnResult r = burning_number(orientation_from_bits(empty_graph(1), 0));
        REQUIRE(r.value == 1);
        REQUIRE(verify_schedule(orientation_from_bits(empty_graph(1), 0), r.schedule));
    }
    SECTION("empty graph on 0 vertices") {
        BnResult r = burning_number(orientation_from_bits(empty_graph(0), 0));
        REQUIRE(r.value == 0);
        REQUIRE(r.schedule.fires.empty());
    }
    SECTION("regular K5 orientation needs 3") {
        BnResult r = burning_number(fig2_k5());
        REQUIRE(r.value == 3);
        REQUIRE(r.optimality_certified);
        REQUIRE(verify_schedule(fig2_k5(), r.schedule));
    }
    SECTION("directed path 0->1->2 burns in 2") {
        Orientation o = orientation_from_bits(path_graph(3), 0);
        REQUIRE(testutil::bn_bruteforce(o) == 2); // frozen brute-force value
        REQUIRE(burning_number(o).value == 2);
    }
}

TEST_CASE("burning decision") {
    Orientation arc = orientation_from_bits(path_graph(2), 0);
    SECTION("b = n always succeeds") {
        auto schedule = burning_decision(arc, 2);
        REQUIRE(schedule.has_value());
        REQUIRE(verify_schedule(arc, *schedule));
    }
    SECTION("K5 cannot burn in 2") {
        REQUIRE_FALSE(burning_decision(fig2_k5(), 2).has_value());
    }
    SECTION("single arc: false at 1, true at 2 (exhaustively checked above)") {
        REQUIRE_FALSE(burning_decision(arc, 1).has_value());
        REQUIRE(burning_decision(arc, 2).has_value());
    }
    SECTION("monotone in b") {
        std::mt19937 rng(11);
        for (int t = 0; t < 50; ++t) {
            Graph g = testutil::random_graph(rng, 6, 0.4);
            Orientation o = testutil::random_orientation(rng, g);
            bool prev = false;
            for (int b = 0; b <= g.n() + 2; ++b) {
                bool cur = burning_decision(o, b).has_value();
                if (prev)
                    REQUIRE(cur);
                prev = cur;
            }
        }
    }
    SECTION("returned schedules always verify") {
        std::mt19937 rng(12);
        for (int t = 0; t < 100; ++t) {
            Graph g = testutil::random_graph(rng, 6, 0.4);
            Orientation o = testutil::random_orientation(rng, g);
            for (int b = 1; b <= g.n(); ++b)
                if (auto s = burning_decision(o, b)) {
                    REQUIRE(s->length() == b);
                    REQUIRE(verify_schedule(o, *s));
                }
        }
    }
}

TEST_CASE("oracle equivalence: exact burning number vs naive enumeration") {
    SECTION("all orientations of all connected graphs with n <= 4") {
        for (const Graph& g : testutil::load_corpus("connected_le6.g6")) {
            if (g.n() > 4)
                continue;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()); ++mask) {
                Orientation o = orientation_from_bits(g, mask);
                BnResult r = burning_number(o);
                REQUIRE(r.value == testutil::bn_bruteforce(o));
                REQUIRE(verify_schedule(o, r.schedule));
            }
        }
    }
    SECTION("500 random orientations with n <= 6") {
        std::mt19937 rng(20240706);
        std::uniform_int_distribution<int> size(1, 6);
        std::uniform_real_distribution<double> density(0.2, 0.9);
        for (int t = 0; t < 500; ++t) {
            Graph g = testutil::random_graph(rng, size(rng), density(rng));
            Orientation o = testutil::random_orientation(rng, g);
            BnResult r = burning_number(o);
            REQUIRE(r.value == testutil::bn_bruteforce(o));
            REQUIRE(verify_schedule(o, r.schedule));
        }
    }
}

TEST_CASE("kings") {
    SECTION("transitive tournament: the source") {
        Orientation o = orientation_from_bits(complete_graph(3), 0);
        REQUIRE(king(o) == 0);
    }
    SECTION("directed 3-cycle: tie broken to vertex 0") {
        // arcs 0->1, 1->2, 2->0: bits for edges (0,1),(0,2),(1,2) = 0,1,0
        Orientation o = orientation_from_bits(complete_graph(3), 0b010);
        REQUIRE(o.has_arc(0, 1));
        REQUIRE(o.has_arc(1, 2));
        REQUIRE(o.has_arc(2, 0));
        REQUIRE(king(o) == 0);
    }
    SECTION("regular K5 orientation: vertex 0, verified by the distance oracle") {
        Orientation o = fig2_k5();
        REQUIRE(king(o) == 0);
        REQUIRE(ball(o, 0, 2) == std::vector<int>{0, 1, 2, 3, 4});
    }
    SECTION("non-tournament input is rejected") {
        Orientation o = orientation_from_bits(path_graph(3), 0);
        std::vector<int> all{0, 1, 2};
        REQUIRE_THROWS_AS(king(o, all), std::invalid_argument);
    }
    SECTION("king law: every max-out-degree vertex is a king (n <= 5 all masks)") {
        for (int n = 1; n <= 5; ++n) {
            Graph kn = complete_graph(n);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << kn.m()); ++mask) {
                Orientation o = orientation_from_bits(kn, mask);
                int maxdeg = 0;
                for (int v = 0; v < n; ++v)
                    maxdeg = std::max(maxdeg, o.out_degree(v));
                std::vector<int> all(static_cast<std::size_t>(n));
                std::iota(all.begin(), all.end(), 0);
                for (int v = 0; v < n; ++v)
                    if (o.out_degree(v) == maxdeg) {
                        REQUIRE(is_king(o, all, v));
                        auto b2 = ball(o, v, 2);
                        REQUIRE(static_cast<int>(b2.size()) == n);
                    }
            }
        }
    }
    SECTION("king law: random tournaments on 6 and 7 vertices") {
        std::mt19937 rng(20240707);
        for (int n : {6, 7}) {
            Graph kn = complete_graph(n);
            std::uniform_int_distribution<std::uint64_t> masks(
                0, (std::uint64_t{1} << kn.m()) - 1);
            std::vector<int> all(static_cast<std::size_t>(n));
            std::iota(all.begin(), all.end(), 0);
            for (int t = 0; t < 300; ++t) {
                Orientation o = orientation_from_bits(kn, masks(rng));
                int maxdeg = 0;
                for (int v = 0; v < n; ++v)
                    maxdeg = std::max(maxdeg, o.out_degree(v));
                for (int v = 0; v < n; ++v)
                    if (o.out_degree(v) == maxdeg)
                        REQUIRE(is_king(o, all, v));
            }
        }
    }
}

TEST_CASE("schedule from a clique cover") {
    SECTION("K5 with the whole graph as one part") {
        Orientation o = fig2_k5();
        BurningSchedule s = schedule_from_clique_cover(o, {{0, 1, 2, 3, 4}});
        REQUIRE(s.length() == 3);
        REQUIRE(verify_schedule(o, s));
    }
    SECTION("empty graph on 3 vertices, singleton parts") {
        Orientation o = orientation_from_bits(empty_graph(3), 0);
        BurningSchedule s = schedule_from_clique_cover(o, {{0}, {1}, {2}});
        REQUIRE(s.length() == 5);
        REQUIRE(verify_schedule(o, s));
    }
    SECTION("C5 with a 3-clique cover") {
        Graph c5 = cycle_graph(5);
        auto cover = clique_cover_number(c5).parts;
        REQUIRE(cover.size() == 3);
        for (std::uint64_t mask = 0; mask < 32; ++mask) {
            Orientation o = orientation_from_bits(c5, mask);
            BurningSchedule s = schedule_from_clique_cover(o, cover);
            REQUIRE(s.length() == 5);
            REQUIRE(verify_schedule(o, s));
        }
    }
    SECTION("invalid covers are rejected") {
        Orientation o = orientation_from_bits(path_graph(3), 0);
        REQUIRE_THROWS_AS(schedule_from_clique_cover(o, {{0, 2}, {1}}), std::invalid_argument);
        REQUIRE_THROWS_AS(schedule_from_clique_cover(o, {{0, 1}}), std::invalid_argument);
    }
    SECTION("bn <= |cover| + 2 on random orientations") {
        std::mt19937 rng(20240708);
        for (int t = 0; t < 100; ++t) {
            Graph g = testutil::random_graph(rng, 6, 0.5);
            auto cover = clique_cover_number(g).parts;
            Orientation o = testutil::random_orientation(rng, g);
            BurningSchedule s = schedule_from_clique_cover(o, cover);
            REQUIRE(verify_schedule(o, s));
            REQUIRE(burning_number(o).value <= static_cast<int>(cover.size()) + 2);
        }
    }
}

TEST_CASE("domination link: bn <= gamma + 1 for every orientation, n <= 5") {
    for (const Graph& g : testutil::load_corpus("connected_le6.g6")) {
        if (g.n() > 5)
            continue;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()); ++mask) {
            Orientation o = orientation_from_bits(g, mask);
            REQUIRE(burning_number(o).value <= testutil::gamma_bruteforce(o) + 1);
        }
    }
}
