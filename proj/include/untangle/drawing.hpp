#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace untangle {

using VertexId = int;
using EdgeId = int;
using CrossingId = int;

struct EdgeRec {
    EdgeId id = 0;
    VertexId tail = 0;
    VertexId head = 0;
};

struct SimpleGraph {
    int vertex_count = 0;
    std::vector<EdgeRec> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
};

// One end of an edge, as it appears in a vertex rotation.
struct EdgeEnd {
    EdgeId edge = 0;
    bool head = false;  // false: tail end, true: head end

    bool operator==(const EdgeEnd& o) const { return edge == o.edge && head == o.head; }
    bool operator<(const EdgeEnd& o) const {
        return edge != o.edge ? edge < o.edge : head < o.head;
    }
};

// A crossing point of two edge strands. Traversing strand a tail-to-head,
// strand b passes right-to-left iff sign == +1. For self-crossings a == b
// and ai < bi distinguishes the two passages.
struct Crossing {
    EdgeId a = 0;
    int ai = 0;
    EdgeId b = 0;
    int bi = 0;
    int sign = 1;

    bool self() const { return a == b; }
};

// A route slot: position `index` on edge `edge`.
struct StrandRef {
    EdgeId edge = 0;
    int index = 0;
};

struct Drawing {
    SimpleGraph graph;
    // Per edge, crossing ids in order from tail to head.
    std::vector<std::vector<CrossingId>> routes;
    std::vector<Crossing> crossings;
    // Per vertex, incident edge ends in ccw order.
    std::vector<std::vector<EdgeEnd>> rotations;

    int crossing_count() const { return static_cast<int>(crossings.size()); }

    const std::vector<CrossingId>& route(EdgeId e) const { return routes[e]; }

    // Which strand (0 = a, 1 = b) of crossing c sits at route slot (e, i).
    int strand_at(CrossingId c, EdgeId e, int i) const {
        const Crossing& x = crossings[c];
        if (x.a == e && x.ai == i) return 0;
        if (x.b == e && x.bi == i) return 1;
        throw std::logic_error("slot does not belong to crossing");
    }

    StrandRef strand(CrossingId c, int which) const {
        const Crossing& x = crossings[c];
        return which == 0 ? StrandRef{x.a, x.ai} : StrandRef{x.b, x.bi};
    }

    StrandRef other_strand(CrossingId c, EdgeId e, int i) const {
        return strand(c, 1 - strand_at(c, e, i));
    }

    // Sign of the other strand relative to the strand at (e, i): +1 means
    // the other strand passes right-to-left when (e, i) is traversed
    // tail-to-head.
    int relative_sign(CrossingId c, EdgeId e, int i) const {
        return strand_at(c, e, i) == 0 ? crossings[c].sign : -crossings[c].sign;
    }
};

// ── Canonical renumbering ────────────────────────────────────────────

// Occurrence of a crossing strand while rebuilding routes. `strand` refers
// to the a/b slots of the crossing record being rebuilt.
struct RouteToken {
    CrossingId crossing = 0;
    int strand = 0;
};

// Rebuilds a drawing from token routes: recomputes every crossing's
// (edge, index) slots, drops crossings that no longer occur, restores the
// canonical strand order (a < b, or ai < bi for self-crossings) and
// renumbers crossing ids densely in first-occurrence order.
inline void rebuild_routes(Drawing& d, const std::vector<std::vector<RouteToken>>& token_routes) {
    struct Slot {
        StrandRef ref[2];
        int seen = 0;
    };
    std::vector<Slot> slots(d.crossings.size());
    for (EdgeId e = 0; e < static_cast<EdgeId>(token_routes.size()); ++e) {
        for (int i = 0; i < static_cast<int>(token_routes[e].size()); ++i) {
            const RouteToken& t = token_routes[e][i];
            if (t.crossing < 0 || t.crossing >= static_cast<int>(slots.size()))
                throw std::logic_error("token references unknown crossing");
            slots[t.crossing].ref[t.strand] = StrandRef{e, i};
            slots[t.crossing].seen |= 1 << t.strand;
        }
    }
    std::vector<CrossingId> new_id(d.crossings.size(), -1);
    std::vector<Crossing> new_crossings;
    std::vector<std::vector<CrossingId>> new_routes(token_routes.size());
    for (EdgeId e = 0; e < static_cast<EdgeId>(token_routes.size()); ++e) {
        new_routes[e].reserve(token_routes[e].size());
        for (const RouteToken& t : token_routes[e]) {
            if (slots[t.crossing].seen != 3)
                throw std::logic_error("crossing with a single surviving strand");
            if (new_id[t.crossing] < 0) {
                new_id[t.crossing] = static_cast<CrossingId>(new_crossings.size());
                const Slot& s = slots[t.crossing];
                Crossing rec;
                rec.a = s.ref[0].edge;
                rec.ai = s.ref[0].index;
                rec.b = s.ref[1].edge;
                rec.bi = s.ref[1].index;
                rec.sign = d.crossings[t.crossing].sign;
                bool swap = rec.a > rec.b || (rec.a == rec.b && rec.ai > rec.bi);
                if (swap) {
                    std::swap(rec.a, rec.b);
                    std::swap(rec.ai, rec.bi);
                    rec.sign = -rec.sign;
                }
                new_crossings.push_back(rec);
            }
            new_routes[e].push_back(new_id[t.crossing]);
        }
    }
    d.routes = std::move(new_routes);
    d.crossings = std::move(new_crossings);
}

// Token routes reflecting the current routes of `d`, ready for mutation.
inline std::vector<std::vector<RouteToken>> to_tokens(const Drawing& d) {
    std::vector<std::vector<RouteToken>> tokens(d.routes.size());
    for (EdgeId e = 0; e < static_cast<EdgeId>(d.routes.size()); ++e) {
        tokens[e].reserve(d.routes[e].size());
        for (int i = 0; i < static_cast<int>(d.routes[e].size()); ++i) {
            CrossingId c = d.routes[e][i];
            tokens[e].push_back(RouteToken{c, d.strand_at(c, e, i)});
        }
    }
    return tokens;
}

// Rotates each vertex rotation so the smallest edge end comes first.
inline void canonicalize_rotations(Drawing& d) {
    for (auto& rot : d.rotations) {
        if (rot.size() < 2) continue;
        auto it = std::min_element(rot.begin(), rot.end());
        std::rotate(rot.begin(), it, rot.end());
    }
}

}  // namespace untangle
