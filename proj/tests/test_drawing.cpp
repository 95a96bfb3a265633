#include <catch2/catch_amalgamated.hpp>

#include "untangle/cdraw_io.hpp"
#include "untangle/ingest.hpp"
#include "untangle/stats.hpp"
#include "untangle/validate.hpp"

#include "fixtures.hpp"

using namespace untangle;

namespace {

bool has_code(const ValidationReport& rep, const std::string& code) {
    for (const auto& v : rep.violations)
        if (v.code == code) return true;
    return false;
}

}  // namespace

TEST_CASE("face tracing on hand-checked planarizations") {
    SECTION("single edge: one face holding both darts") {
        GeoDrawing g;
        fixtures::add_vertex(g, 0, 0);
        fixtures::add_vertex(g, 4, 0);
        fixtures::add_edge(g, 0, 1);
        Drawing d = ingest(g);
        auto faces = trace_faces(d);
        REQUIRE(faces.size() == 1);
        CHECK(faces[0].size() == 2);
    }
    SECTION("plane triangle: two faces") {
        Drawing d = ingest(fixtures::triangle());
        CHECK(trace_faces(d).size() == 2);
    }
    SECTION("X drawing: planarization is a tree, one face") {
        // 5 nodes, 4 segments, connected: F = 2 - 5 + 4 = 1.
        Drawing d = ingest(fixtures::x_cross());
        auto faces = trace_faces(d);
        REQUIRE(faces.size() == 1);
        CHECK(faces[0].size() == 8);  // every dart once
    }
    SECTION("face lengths sum to twice the segment count") {
        Drawing d = ingest(fixtures::convex_complete(6));
        long long segments = 0;
        for (EdgeId e = 0; e < d.graph.edge_count(); ++e)
            segments += static_cast<long long>(d.routes[e].size()) + 1;
        long long total = 0;
        for (const auto& f : trace_faces(d)) total += static_cast<long long>(f.size());
        CHECK(total == 2 * segments);
    }
}

TEST_CASE("validator accepts the fixture corpus") {
    CHECK(validate_drawing(ingest(fixtures::triangle())).ok());
    CHECK(validate_drawing(ingest(fixtures::lens())).ok());
    CHECK(validate_drawing(ingest(fixtures::self_loop())).ok());
    CHECK(validate_drawing(ingest(fixtures::convex_complete(7))).ok());
}

TEST_CASE("validator rejects structural mutations") {
    Drawing base = ingest(fixtures::convex_complete(5));
    REQUIRE(validate_drawing(base).ok());

    SECTION("dangling crossing: one occurrence removed") {
        Drawing d = base;
        for (EdgeId e = 0; e < d.graph.edge_count(); ++e)
            if (!d.routes[e].empty()) {
                d.routes[e].pop_back();
                break;
            }
        auto rep = validate_drawing(d);
        CHECK_FALSE(rep.ok());
        CHECK(has_code(rep, "dangling_crossing"));
    }
    SECTION("flipped sign breaks the euler count when rotations pin it") {
        // On two free arcs a flipped sign is just another planar drawing;
        // with degree-3 vertex rotations around it the flip costs genus.
        Drawing free_arcs = ingest(fixtures::lens());
        free_arcs.crossings[0].sign = -free_arcs.crossings[0].sign;
        CHECK(validate_drawing(free_arcs).ok());

        Drawing d = ingest(fixtures::convex_complete(4));
        d.crossings[0].sign = -d.crossings[0].sign;
        auto rep = validate_drawing(d);
        CHECK_FALSE(rep.ok());
        CHECK(has_code(rep, "euler"));
    }
    SECTION("swapped rotation entries break the euler count") {
        Drawing d = base;
        REQUIRE(d.rotations[0].size() == 4);
        std::swap(d.rotations[0][0], d.rotations[0][1]);
        auto rep = validate_drawing(d);
        CHECK_FALSE(rep.ok());
        CHECK(has_code(rep, "euler"));
    }
    SECTION("duplicated route slot") {
        Drawing d = base;
        for (EdgeId e = 0; e < d.graph.edge_count(); ++e)
            if (!d.routes[e].empty()) {
                d.routes[e].push_back(d.routes[e][0]);
                break;
            }
        CHECK_FALSE(validate_drawing(d).ok());
    }
    SECTION("unknown crossing id in a route") {
        Drawing d = base;
        for (EdgeId e = 0; e < d.graph.edge_count(); ++e)
            if (!d.routes[e].empty()) {
                d.routes[e][0] = 999;
                break;
            }
        auto rep = validate_drawing(d);
        CHECK(has_code(rep, "bad_route_ref"));
    }
    SECTION("crossing slot index out of range") {
        Drawing d = base;
        d.crossings[0].ai = 99;
        auto rep = validate_drawing(d);
        CHECK(has_code(rep, "dangling_crossing"));
    }
    SECTION("loop edge") {
        Drawing d = ingest(fixtures::triangle());
        d.graph.edges[0].head = d.graph.edges[0].tail;
        auto rep = validate_drawing(d);
        CHECK(has_code(rep, "loop"));
    }
    SECTION("parallel edges") {
        Drawing d = ingest(fixtures::triangle());
        d.graph.edges[2].tail = d.graph.edges[0].tail;
        d.graph.edges[2].head = d.graph.edges[0].head;
        auto rep = validate_drawing(d);
        CHECK(has_code(rep, "parallel_edges"));
    }
    SECTION("rotation missing an incident end") {
        Drawing d = base;
        d.rotations[0].pop_back();
        auto rep = validate_drawing(d);
        CHECK(has_code(rep, "rotation_mismatch"));
    }
    SECTION("self crossing pointing at one slot") {
        Drawing d = ingest(fixtures::self_loop());
        d.crossings[0].bi = d.crossings[0].ai;
        auto rep = validate_drawing(d);
        CHECK(has_code(rep, "self_crossing_slots"));
    }
}

TEST_CASE("stats restricts to the active set") {
    Drawing d = ingest(fixtures::x_cross());
    SECTION("crossing with an inactive edge does not count") {
        auto st = stats(d, {0});
        CHECK(st.crossing_points == 0);
        CHECK(st.crossing_pairs == 0);
        CHECK(st.crossing_edges == 0);
    }
    SECTION("full set sees the crossing") {
        auto st = stats(d, all_edges(d));
        CHECK(st.crossing_points == 1);
        CHECK(st.crossing_pairs == 1);
        CHECK(st.crossing_edges == 2);
    }
    SECTION("unknown edge id is an error") {
        CHECK_THROWS_AS(stats(d, {7}), std::invalid_argument);
    }
}

TEST_CASE("stats on the micro fixtures") {
    SECTION("two edges crossing twice") {
        auto st = stats(ingest(fixtures::lens()), {0, 1});
        CHECK(st.crossing_points == 2);
        CHECK(st.crossing_pairs == 1);
        CHECK(st.crossing_edges == 2);
        CHECK(st.pair_multiplicity.at({0, 1}) == 2);
    }
    SECTION("self-crossing counts points but not pairs") {
        auto st = stats(ingest(fixtures::self_loop()), {0});
        CHECK(st.crossing_points == 1);
        CHECK(st.crossing_pairs == 0);
        CHECK(st.crossing_edges == 1);
        CHECK(st.self_crossings.at(0) == 1);
    }
}

TEST_CASE("classify_edges partitions the active set") {
    Drawing d = ingest(fixtures::convex_complete(5));
    auto [empty, crossing] = classify_edges(d, all_edges(d));
    CHECK(empty.size() + crossing.size() == 10);
    CHECK(crossing.size() == 5);  // the five inner chords of the pentagon
    for (EdgeId e : crossing)
        CHECK(std::find(empty.begin(), empty.end(), e) == empty.end());

    SECTION("a self-crossing edge alone is a crossing edge") {
        Drawing s = ingest(fixtures::self_loop());
        auto [em, cr] = classify_edges(s, {0});
        CHECK(em.empty());
        CHECK(cr == EdgeSet{0});
    }
    SECTION("plane drawing is all empty") {
        Drawing t = ingest(fixtures::triangle());
        auto [em, cr] = classify_edges(t, all_edges(t));
        CHECK(cr.empty());
        CHECK(em.size() == 3);
    }
}

TEST_CASE("counting inequalities hold for self-crossing-free drawings") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        GenOptions opt;
        opt.family = GraphFamily::complete;
        opt.n = 6;
        opt.seed = seed;
        Drawing d = ingest(gen_random(opt));
        auto st = stats(d, all_edges(d));
        if (st.crossing_edges == 0) continue;
        CHECK(st.crossing_edges <= 2 * st.crossing_pairs);
        CHECK(2 * st.crossing_pairs <= st.crossing_edges * (st.crossing_edges - 1));
    }
}
