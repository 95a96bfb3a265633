#include <catch2/catch_amalgamated.hpp>

#include "untangle/gen.hpp"
#include "untangle/render.hpp"

#include "fixtures.hpp"

using namespace untangle;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
    int count = 0;
    for (std::size_t at = text.find(needle); at != std::string::npos;
         at = text.find(needle, at + needle.size()))
        ++count;
    return count;
}

}  // namespace

TEST_CASE("svg output for geometric drawings") {
    SECTION("empty graph renders valid svg with no paths") {
        GeoDrawing g;
        std::string svg = render_svg(g);
        CHECK(svg.find("<svg") != std::string::npos);
        CHECK(svg.find("</svg>") != std::string::npos);
        CHECK(count_occurrences(svg, "<path") == 0);
    }
    SECTION("X drawing: two paths, one crossing mark") {
        std::string svg = render_svg(fixtures::x_cross());
        CHECK(count_occurrences(svg, "<path") == 2);
        CHECK(count_occurrences(svg, "class=\"crossing\"") == 1);
    }
    SECTION("convex K5: ten paths, five crossing marks") {
        std::string svg = render_svg(fixtures::convex_complete(5));
        CHECK(count_occurrences(svg, "<path") == 10);
        CHECK(count_occurrences(svg, "class=\"crossing\"") == 5);
    }
    SECTION("edge classes pick stroke colors") {
        RenderOptions opt;
        opt.classes[0] = "blue";
        opt.classes[1] = "red";
        std::string svg = render_svg(fixtures::x_cross(), opt);
        CHECK(svg.find("#2563eb") != std::string::npos);
        CHECK(svg.find("#dc2626") != std::string::npos);
    }
}

TEST_CASE("svg output for combinatorial drawings re-embeds the planarization") {
    Drawing d = ingest(fixtures::convex_complete(5));
    std::string svg = render_svg(d);
    CHECK(count_occurrences(svg, "<path") == 10);
    CHECK(count_occurrences(svg, "class=\"crossing\"") == 5);

    SECTION("invalid drawings are refused") {
        Drawing bad = d;
        bad.routes[bad.crossings[0].a].pop_back();
        CHECK_THROWS_AS(render_svg(bad), std::invalid_argument);
    }
}

TEST_CASE("gen_random is deterministic and general position") {
    SECTION("same options, same bytes") {
        GenOptions opt;
        opt.family = GraphFamily::random_gnp;
        opt.n = 10;
        opt.p = 0.4;
        opt.detour = 2;
        opt.seed = 77;
        CHECK(serialize_gdraw(gen_random(opt)) == serialize_gdraw(gen_random(opt)));
    }
    SECTION("different seeds differ") {
        GenOptions a, b;
        a.seed = 1;
        b.seed = 2;
        CHECK(serialize_gdraw(gen_random(a)) != serialize_gdraw(gen_random(b)));
    }
    SECTION("ingest accepts every generated drawing") {
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
            GenOptions opt;
            opt.family = seed % 3 == 0 ? GraphFamily::bipartite
                         : seed % 3 == 1 ? GraphFamily::complete
                                         : GraphFamily::random_gnp;
            opt.n = 5 + static_cast<int>(seed % 4);
            opt.a = 3;
            opt.b = 3 + static_cast<int>(seed % 2);
            opt.p = 0.5;
            opt.detour = static_cast<int>(seed % 3);
            opt.seed = seed;
            CAPTURE(seed);
            Drawing d = ingest(gen_random(opt));
            CHECK(validate_drawing(d).ok());
        }
    }
    SECTION("convex placement gives the binomial crossing count") {
        GenOptions opt;
        opt.family = GraphFamily::complete;
        opt.n = 5;
        opt.convex = true;
        opt.seed = 1;
        Drawing d = ingest(gen_random(opt));
        CHECK(d.crossing_count() == 5);
        opt.n = 4;
        CHECK(ingest(gen_random(opt)).crossing_count() == 1);
    }
    SECTION("parameter validation") {
        GenOptions opt;
        opt.n = 0;
        CHECK_THROWS_AS(gen_random(opt), std::invalid_argument);
        GenOptions gnp;
        gnp.family = GraphFamily::random_gnp;
        gnp.p = 1.5;
        CHECK_THROWS_AS(gen_random(gnp), std::invalid_argument);
    }
}
