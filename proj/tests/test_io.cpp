#include <catch2/catch_amalgamated.hpp>

#include "untangle/cdraw_io.hpp"
#include "untangle/geo_drawing.hpp"
#include "untangle/ingest.hpp"
#include "untangle/stats.hpp"

#include "fixtures.hpp"

using namespace untangle;

TEST_CASE("cdraw serialize-parse-serialize is byte identical") {
    for (auto fixture : {fixtures::lens(), fixtures::self_loop(), fixtures::convex_complete(6)}) {
        Drawing d = ingest(fixture);
        std::string once = serialize_cdraw(d);
        std::string twice = serialize_cdraw(parse_cdraw(once));
        CHECK(once == twice);
    }
}

TEST_CASE("gdraw serialize-parse-serialize is byte identical") {
    GeoDrawing g = fixtures::convex_complete(5);
    std::string once = serialize_gdraw(g);
    std::string twice = serialize_gdraw(parse_gdraw(once));
    CHECK(once == twice);
}

TEST_CASE("sparse file ids become dense parse-time ids") {
    std::string text = R"({
      "vertices": [{"id": 10, "x": "0", "y": "0"}, {"id": 3, "x": "5", "y": "1"}],
      "edges": [{"id": 7, "tail": 10, "head": 3, "via": []}]
    })";
    GeoDrawing g = parse_gdraw(text);
    REQUIRE(g.vertices.size() == 2);
    CHECK(g.vertices[0].id == 0);
    CHECK(g.edges[0].id == 0);
    CHECK(g.edges[0].tail == 1);  // file id 10 sorts after 3
    CHECK(g.edges[0].head == 0);
}

TEST_CASE("parse errors carry diagnostics") {
    CHECK_THROWS_AS(parse_gdraw("not json"), ParseError);
    CHECK_THROWS_AS(parse_gdraw("{}"), ParseError);
    CHECK_THROWS_AS(parse_gdraw(R"({"vertices": [{"id": 0, "x": 1, "y": "0"}], "edges": []})"),
                    ParseError);  // numeric coordinate, must be a decimal string
    CHECK_THROWS_AS(parse_cdraw("[]"), ParseError);
    CHECK_THROWS_AS(parse_cdraw(R"({"vertices": [], "edges": [], "crossings": [{"id": 0}]})"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_cdraw(
            R"({"vertices": [{"id":0,"rotation":[]},{"id":0,"rotation":[]}], "edges": [], "crossings": []})"),
        ParseError);
}

TEST_CASE("parsed drawings validate and keep their statistics") {
    Drawing d = ingest(fixtures::convex_complete(7));
    Drawing back = parse_cdraw(serialize_cdraw(d));
    CHECK(validate_drawing(back).ok());
    auto a = stats(d, all_edges(d));
    auto b = stats(back, all_edges(back));
    CHECK(a.crossing_points == b.crossing_points);
    CHECK(a.crossing_pairs == b.crossing_pairs);
    CHECK(a.crossing_edges == b.crossing_edges);
}

TEST_CASE("crossing records are canonicalized at parse time") {
    Drawing d = ingest(fixtures::x_cross());
    std::string text = serialize_cdraw(d);
    // Swap the strand order by hand.
    auto j = nlohmann::json::parse(text);
    auto& c = j["crossings"][0];
    std::swap(c["a"], c["b"]);
    std::swap(c["ai"], c["bi"]);
    c["sign"] = -c["sign"].get<int>();
    Drawing back = parse_cdraw(j.dump());
    CHECK(validate_drawing(back).ok());
    CHECK(back.crossings[0].a <= back.crossings[0].b);
    CHECK(serialize_cdraw(back) == text);
}
