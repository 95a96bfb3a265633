#pragma once

#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "untangle/ingest.hpp"

namespace untangle {

// SplitMix64: a fixed, portable PRNG so generated corpora reproduce from
// the seed alone.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

enum class GraphFamily { complete, bipartite, random_gnp };

struct GenOptions {
    GraphFamily family = GraphFamily::complete;
    int n = 5;        // complete / random order
    int a = 3, b = 3; // bipartite part sizes
    double p = 0.5;   // random edge probability
    bool convex = false;
    int detour = 0;   // max via points per edge; 0 = straight routing
    std::uint64_t seed = 0;
    int max_attempts = 64;
};

namespace detail {

inline std::vector<std::pair<int, int>> family_edges(const GenOptions& opt, SplitMix64& rng,
                                                     int& n_out) {
    std::vector<std::pair<int, int>> edges;
    switch (opt.family) {
        case GraphFamily::complete:
            if (opt.n < 1 || opt.n > 64) throw std::invalid_argument("complete n out of range");
            n_out = opt.n;
            for (int u = 0; u < opt.n; ++u)
                for (int v = u + 1; v < opt.n; ++v) edges.push_back({u, v});
            break;
        case GraphFamily::bipartite:
            if (opt.a < 1 || opt.b < 1 || opt.a + opt.b > 64)
                throw std::invalid_argument("bipartite sizes out of range");
            n_out = opt.a + opt.b;
            for (int u = 0; u < opt.a; ++u)
                for (int v = 0; v < opt.b; ++v) edges.push_back({u, opt.a + v});
            break;
        case GraphFamily::random_gnp:
            if (opt.n < 1 || opt.n > 64) throw std::invalid_argument("random n out of range");
            if (opt.p < 0.0 || opt.p > 1.0) throw std::invalid_argument("p outside [0, 1]");
            n_out = opt.n;
            for (int u = 0; u < opt.n; ++u)
                for (int v = u + 1; v < opt.n; ++v)
                    if (rng.unit() < opt.p) edges.push_back({u, v});
            break;
    }
    return edges;
}

inline std::vector<Point> convex_positions(int n, SplitMix64& rng) {
    // Near-regular polygon on an integer grid. Radial jitter breaks the
    // diagonal concurrences of regular even polygons; strict convexity is
    // verified exactly after rounding.
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        double radius = 1000000.0 + static_cast<double>(rng.below(2001)) - 1000.0;
        double angle = 2.0 * 3.14159265358979323846 * i / n +
                       (static_cast<double>(rng.below(2001)) - 1000.0) * 1e-5;
        long long x = std::llround(radius * std::cos(angle));
        long long y = std::llround(radius * std::sin(angle));
        pts.push_back(Point{Rat(x), Rat(y)});
    }
    for (int i = 0; i < n && n > 2; ++i) {
        const Point& p = pts[i];
        const Point& q = pts[(i + 1) % n];
        const Point& r = pts[(i + 2) % n];
        if (orientation(p, q, r) <= 0) throw DegeneracyError("convex placement not strictly convex");
    }
    return pts;
}

}  // namespace detail

// Deterministic random geometric drawing. Placement and routing are
// resampled until the result is in general position (bounded retries).
inline GeoDrawing gen_random(const GenOptions& opt) {
    SplitMix64 rng(opt.seed);
    int n = 0;
    auto edge_pairs = detail::family_edges(opt, rng, n);

    for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
        GeoDrawing g;
        g.vertices.resize(n);
        if (opt.convex) {
            std::vector<Point> pts;
            try {
                pts = detail::convex_positions(n, rng);
            } catch (const DegeneracyError&) {
                continue;
            }
            for (int v = 0; v < n; ++v) g.vertices[v] = GeoVertex{v, pts[v]};
        } else {
            std::set<std::pair<long long, long long>> taken;
            for (int v = 0; v < n; ++v) {
                long long x, y;
                do {
                    x = static_cast<long long>(rng.below(1001));
                    y = static_cast<long long>(rng.below(1001));
                } while (!taken.insert({x, y}).second);
                g.vertices[v] = GeoVertex{v, Point{Rat(x), Rat(y)}};
            }
        }
        long long span = opt.convex ? 2000000 : 1001;
        long long base = opt.convex ? -1000000 : 0;
        g.edges.resize(edge_pairs.size());
        for (std::size_t e = 0; e < edge_pairs.size(); ++e) {
            GeoEdge ge;
            ge.id = static_cast<EdgeId>(e);
            ge.tail = edge_pairs[e].first;
            ge.head = edge_pairs[e].second;
            if (opt.detour > 0) {
                int count = static_cast<int>(rng.below(static_cast<std::uint64_t>(opt.detour) + 1));
                for (int i = 0; i < count; ++i) {
                    long long x = base + static_cast<long long>(rng.below(span));
                    long long y = base + static_cast<long long>(rng.below(span));
                    ge.via.push_back(Point{Rat(x), Rat(y)});
                }
            }
            g.edges[e] = std::move(ge);
        }
        try {
            detail::geo_hits(g);
            return g;
        } catch (const DegeneracyError&) {
            // Resample with fresh randomness.
        }
    }
    throw std::runtime_error("could not reach general position after " +
                             std::to_string(opt.max_attempts) + " attempts");
}

}  // namespace untangle
