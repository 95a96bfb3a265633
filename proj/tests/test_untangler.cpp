#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "untangle/untangler.hpp"

#include "fixtures.hpp"

using namespace untangle;

namespace {

bool simple_drawing(const Drawing& d) {
    auto st = stats(d, all_edges(d));
    if (!st.self_crossings.empty()) return false;
    for (const auto& [pair, count] : st.pair_multiplicity)
        if (count > 1) return false;
    return true;
}

}  // namespace

TEST_CASE("theorem_bound arithmetic") {
    SECTION("k=1, l=2, c=1 gives 4") {
        auto [lemma, theorem] = theorem_bound(1, 2, 1.0);
        CHECK(lemma == Catch::Approx(4.0));
        CHECK(theorem == Catch::Approx(0.0));  // log2(1) = 0
    }
    SECTION("k=4, l=8, c=1 gives 96 under 128") {
        auto [lemma, theorem] = theorem_bound(4, 8, 1.0);
        CHECK(lemma == Catch::Approx(96.0));
        CHECK(theorem == Catch::Approx(128.0));
        CHECK(lemma < theorem);
    }
    SECTION("domain violations are rejected") {
        CHECK_THROWS_AS(theorem_bound(0, 2, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(theorem_bound(1, 1, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(theorem_bound(1, 2, -0.5), std::invalid_argument);
    }
    SECTION("the k=2, l=4 corner reaches equality, never inversion") {
        auto [lemma, theorem] = theorem_bound(2, 4, 1.0);
        CHECK(lemma == Catch::Approx(theorem));
        for (long long k = 2; k <= 40; ++k)
            for (long long l = 2; l <= 2 * k; ++l) {
                auto [bl, bt] = theorem_bound(k, l, 0.7);
                CHECK(bl <= bt + 1e-9);
            }
    }
}

TEST_CASE("power superadditivity used by the level arithmetic") {
    // k1^(3/2) + k2^(3/2) <= k^(3/2) whenever k1 + k2 <= k.
    SplitMix64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        long long k = 1 + static_cast<long long>(rng.below(500));
        long long k1 = static_cast<long long>(rng.below(static_cast<std::uint64_t>(k) + 1));
        long long k2 = k - k1;
        double lhs = std::pow(static_cast<double>(k1), 1.5) + std::pow(static_cast<double>(k2), 1.5);
        CHECK(lhs <= std::pow(static_cast<double>(k), 1.5) + 1e-6);
    }
}

TEST_CASE("untangle leaves plane drawings alone") {
    Drawing d = ingest(fixtures::triangle());
    std::string before = serialize_cdraw(d);
    UntangleReport rep = untangle::untangle(d);
    CHECK(serialize_cdraw(d) == before);
    CHECK(rep.k == 0);
    CHECK(rep.l == 0);
    CHECK(rep.final_crossings == 0);
    CHECK(rep.lemma_satisfied);
    CHECK(rep.levels.empty());
}

TEST_CASE("untangle resolves the double crossing") {
    Drawing d = ingest(fixtures::lens());
    UntangleReport rep = untangle::untangle(d);
    CHECK(validate_drawing(d).ok());
    CHECK(rep.final_crossings == 0);
    CHECK(rep.k == 1);
    CHECK(rep.l == 2);
    CHECK(rep.lemma_satisfied);
    REQUIRE(rep.levels.size() == 1);
    const LevelRecord& lev = rep.levels[0];
    CHECK(lev.method == "base");
    CHECK(lev.l0 == 1);
    CHECK(lev.l1 == 1);
    CHECK(lev.ratio == Catch::Approx(1.0));
}

TEST_CASE("untangle strips input self-crossings up front") {
    Drawing d = ingest(fixtures::loop_with_two());
    UntangleReport rep = untangle::untangle(d);
    CHECK(rep.input_crossings == 3);
    CHECK(rep.prepass_removed == 3);
    CHECK(rep.k == 0);
    CHECK(rep.final_crossings == 0);
    CHECK(simple_drawing(d));
}

TEST_CASE("untangle certifies seeded detour corpora") {
    for (std::uint64_t seed : {3ULL, 4ULL, 5ULL}) {
        GenOptions opt;
        opt.family = GraphFamily::complete;
        opt.n = 6;
        opt.detour = 2;
        opt.seed = seed;
        Drawing d = ingest(gen_random(opt));
        std::vector<EdgeId> empty_before;
        for (EdgeId e = 0; e < d.graph.edge_count(); ++e)
            if (d.routes[e].empty()) empty_before.push_back(e);

        UntangleOptions uopt;
        uopt.seed = seed;
        uopt.debug = UntangleOptions::Debug::level;
        UntangleReport rep = untangle::untangle(d, uopt);

        CAPTURE(seed);
        CHECK(validate_drawing(d).ok());
        CHECK(simple_drawing(d));
        CHECK(rep.lemma_satisfied);
        CHECK(rep.levels_ok);
        CHECK(static_cast<double>(rep.final_crossings) <= rep.bound_lemma + 1e-9);
        for (const LevelRecord& lev : rep.levels) {
            CHECK(lev.l0 + lev.l1 + lev.l2 == lev.l);
            CHECK(lev.k1 + lev.k2 <= lev.k);
            CHECK(3 * std::max(lev.l1, lev.l2) <= 2 * lev.l);
            CHECK(lev.f12_entry == 0);
            CHECK(lev.f12_merge == 0);
            CHECK(lev.brrr_after <= lev.l0 * lev.l);
            CHECK(lev.ratio <= rep.c_hat);
        }
        for (EdgeId e : empty_before) CHECK(d.routes[e].empty());
    }
}

TEST_CASE("untangle rejects invalid input") {
    Drawing d = ingest(fixtures::lens());
    d.routes[0].pop_back();  // dangling crossing
    CHECK_THROWS_AS(untangle::untangle(d), std::invalid_argument);
}

TEST_CASE("report JSON carries the certification fields") {
    Drawing d = ingest(fixtures::convex_complete(5));
    UntangleReport rep = untangle::untangle(d);
    auto j = nlohmann::json::parse(untangle_report_json(rep));
    CHECK(j["k"] == 5);
    CHECK(j["lemma_satisfied"] == true);
    CHECK(j["levels"].is_array());
    CHECK(!j["levels"].empty());
    CHECK(j["levels"][0].contains("ratio"));
}
