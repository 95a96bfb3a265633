#pragma once

// Hand-built geometric micro-fixtures. Integer coordinates, verified in
// general position by ingest itself.

#include <vector>

#include "untangle/gen.hpp"
#include "untangle/geo_drawing.hpp"

namespace fixtures {

using untangle::GeoDrawing;
using untangle::GeoEdge;
using untangle::GeoVertex;
using untangle::Point;
using untangle::Rat;

inline Point pt(long long x, long long y) { return Point{Rat(x), Rat(y)}; }

inline int add_vertex(GeoDrawing& g, long long x, long long y) {
    int id = static_cast<int>(g.vertices.size());
    g.vertices.push_back(GeoVertex{id, pt(x, y)});
    return id;
}

inline int add_edge(GeoDrawing& g, int tail, int head, std::vector<Point> via = {}) {
    int id = static_cast<int>(g.edges.size());
    g.edges.push_back(GeoEdge{id, tail, head, std::move(via)});
    return id;
}

// Plane triangle, no crossings.
inline GeoDrawing triangle() {
    GeoDrawing g;
    int a = add_vertex(g, 0, 0), b = add_vertex(g, 4, 0), c = add_vertex(g, 2, 3);
    add_edge(g, a, b);
    add_edge(g, a, c);
    add_edge(g, b, c);
    return g;
}

// Two segments crossing once.
inline GeoDrawing x_cross() {
    GeoDrawing g;
    int a = add_vertex(g, 0, 0), b = add_vertex(g, 10, 0);
    int c = add_vertex(g, 5, -5), d = add_vertex(g, 5, 5);
    add_edge(g, a, b);
    add_edge(g, c, d);
    return g;
}

// Two edges crossing exactly twice (a lens).
inline GeoDrawing lens() {
    GeoDrawing g;
    int a = add_vertex(g, 0, 0), b = add_vertex(g, 10, 0);
    int c = add_vertex(g, 2, -2), d = add_vertex(g, 8, -2);
    add_edge(g, a, b);
    add_edge(g, c, d, {pt(5, 3)});
    return g;
}

// Two edges crossing exactly three times.
inline GeoDrawing triple() {
    GeoDrawing g;
    int a = add_vertex(g, 0, 0), b = add_vertex(g, 10, 0);
    int c = add_vertex(g, 1, -2), d = add_vertex(g, 9, 2);
    add_edge(g, a, b);
    add_edge(g, c, d, {pt(3, 2), pt(5, -2)});
    return g;
}

// One edge with a single self-crossing.
inline GeoDrawing self_loop() {
    GeoDrawing g;
    int a = add_vertex(g, 0, 0), b = add_vertex(g, 2, 3);
    add_edge(g, a, b, {pt(8, 2), pt(8, -2)});
    return g;
}

// Self-crossing loop holding two crossings with a second edge; excising
// the loop deletes three crossing points.
inline GeoDrawing loop_with_two() {
    GeoDrawing g;
    int a = add_vertex(g, 0, 0), b = add_vertex(g, 2, 3);
    int c = add_vertex(g, 5, -5), d = add_vertex(g, 5, 5);
    add_edge(g, a, b, {pt(8, 2), pt(8, -2)});
    add_edge(g, c, d);
    return g;
}

// One edge crossing itself twice, the second loop nested inside the first
// (passage order A B B' A' along the curve).
inline GeoDrawing nested_loops() {
    GeoDrawing g;
    int a = add_vertex(g, 0, 8), b = add_vertex(g, 4, 6);
    add_edge(g, a, b, {pt(0, 0), pt(10, 0), pt(10, 3), pt(-4, 3), pt(-4, 6)});
    return g;
}

// One edge crossing itself twice in two separate loops (A A' B B').
inline GeoDrawing sequential_loops() {
    GeoDrawing g;
    int a = add_vertex(g, 0, 0), b = add_vertex(g, 22, 3);
    add_edge(g, a, b, {pt(8, 2), pt(8, -2), pt(2, 3), pt(12, 3), pt(20, 2), pt(20, -2), pt(14, 4)});
    return g;
}

// Double-crossing pair where the f piece carries three crossings with
// side edges and the e piece none.
inline GeoDrawing costly_piece() {
    GeoDrawing g;
    int a = add_vertex(g, 0, 0), b = add_vertex(g, 20, 0);
    int c = add_vertex(g, 2, -2), d = add_vertex(g, 18, -2);
    add_edge(g, a, b);
    add_edge(g, c, d, {pt(4, 8), pt(16, 8)});
    for (long long x : {6, 9, 12}) {
        int u = add_vertex(g, x, 5), v = add_vertex(g, x, 10);
        add_edge(g, u, v);
    }
    return g;
}

// Pair crossing three times, interleaved so the piece of edge 1 between
// the first two crossings along edge 0 contains the third crossing.
// Optional side edges cross edge 0 inside its piece.
inline GeoDrawing interleaved(bool with_side_edges) {
    GeoDrawing g;
    int a = add_vertex(g, 0, 0), b = add_vertex(g, 30, 0);
    int c = add_vertex(g, 2, -2), d = add_vertex(g, 12, 4);
    add_edge(g, a, b);
    add_edge(g, c, d, {pt(8, 6), pt(26, 6), pt(26, -4), pt(12, -4)});
    if (with_side_edges) {
        for (long long x : {6, 9}) {
            int u = add_vertex(g, x, -3), v = add_vertex(g, x, 3);
            add_edge(g, u, v);
        }
    }
    return g;
}

// Lens whose arc piece carries three crossings (one edge also crossing
// the straight piece), so rerouting the arc along the straight edge must
// copy exactly one crossing.
inline GeoDrawing copy_lens_before() {
    GeoDrawing g;
    int a = add_vertex(g, 0, 0), b = add_vertex(g, 20, 0);
    int c = add_vertex(g, 4, -4), d = add_vertex(g, 16, -4);
    add_edge(g, a, b);
    add_edge(g, c, d, {pt(10, 6)});
    int u1 = add_vertex(g, 9, -10), v1 = add_vertex(g, 9, 10);
    add_edge(g, u1, v1);  // crosses both pieces
    int u2 = add_vertex(g, 8, 2), v2 = add_vertex(g, 8, 8);
    add_edge(g, u2, v2);  // crosses the arc only
    int u3 = add_vertex(g, 12, 2), v3 = add_vertex(g, 12, 8);
    add_edge(g, u3, v3);  // crosses the arc only
    return g;
}

// The same graph drawn as the surgery should leave it: the former arc
// hugs the straight edge from below and keeps only the copied crossing.
inline GeoDrawing copy_lens_after() {
    GeoDrawing g = copy_lens_before();
    g.edges[1].via = {pt(6, -1), pt(14, -1)};
    return g;
}

// Two edges crossing twice with equal relative signs: the second edge
// wraps around the head of the first, so cancelling the pair needs one
// returning crossing.
inline GeoDrawing wrap_around() {
    GeoDrawing g;
    int a = add_vertex(g, 0, 0), b = add_vertex(g, 10, 0);
    int c = add_vertex(g, 3, 2), d = add_vertex(g, 8, -1);
    add_edge(g, a, b);
    add_edge(g, c, d, {pt(5, -2), pt(13, -2), pt(13, 3)});
    return g;
}

inline GeoDrawing convex_complete(int n, std::uint64_t seed = 1) {
    untangle::GenOptions opt;
    opt.family = untangle::GraphFamily::complete;
    opt.n = n;
    opt.convex = true;
    opt.seed = seed;
    return untangle::gen_random(opt);
}

}  // namespace fixtures
