#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "untangle/drawing.hpp"

namespace untangle {

struct Violation {
    std::string code;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string code, std::string detail) {
        violations.push_back(Violation{std::move(code), std::move(detail)});
    }
};

// A directed segment of the planarization: segment `seg` of edge `edge`
// (0 .. route length), traversed forward (tail-to-head) or not.
struct Dart {
    EdgeId edge = 0;
    int seg = 0;
    bool forward = true;

    bool operator==(const Dart& o) const {
        return edge == o.edge && seg == o.seg && forward == o.forward;
    }
};

namespace detail {

// Planarization node ids: vertices first, then crossings.
inline int seg_from_node(const Drawing& d, EdgeId e, int s) {
    return s == 0 ? d.graph.edges[e].tail
                  : d.graph.vertex_count + d.routes[e][s - 1];
}

inline int seg_to_node(const Drawing& d, EdgeId e, int s) {
    return s == static_cast<int>(d.routes[e].size())
               ? d.graph.edges[e].head
               : d.graph.vertex_count + d.routes[e][s];
}

inline int dart_head(const Drawing& d, const Dart& dt) {
    return dt.forward ? seg_to_node(d, dt.edge, dt.seg) : seg_from_node(d, dt.edge, dt.seg);
}

// Leaving darts around every planarization node, in ccw order. Vertex
// rotations are stored; crossing rotations derive from the sign: with
// strand b passing right-to-left over a (sign +1), the ccw order around
// the node is a-out, b-out, a-in, b-in.
inline std::vector<std::vector<Dart>> node_rotations(const Drawing& d) {
    std::vector<std::vector<Dart>> rot(d.graph.vertex_count + d.crossing_count());
    for (VertexId v = 0; v < d.graph.vertex_count; ++v) {
        for (const EdgeEnd& end : d.rotations[v]) {
            int last = static_cast<int>(d.routes[end.edge].size());
            rot[v].push_back(end.head ? Dart{end.edge, last, false} : Dart{end.edge, 0, true});
        }
    }
    for (CrossingId c = 0; c < d.crossing_count(); ++c) {
        const Crossing& x = d.crossings[c];
        Dart a_out{x.a, x.ai + 1, true};
        Dart a_back{x.a, x.ai, false};
        Dart b_out{x.b, x.bi + 1, true};
        Dart b_back{x.b, x.bi, false};
        int n = d.graph.vertex_count + c;
        if (x.sign > 0)
            rot[n] = {a_out, b_out, a_back, b_back};
        else
            rot[n] = {a_out, b_back, a_back, b_out};
    }
    return rot;
}

struct DartIndex {
    std::vector<int> offset;  // per edge, first dart id
    int total = 0;

    explicit DartIndex(const Drawing& d) {
        offset.resize(d.routes.size() + 1, 0);
        for (std::size_t e = 0; e < d.routes.size(); ++e)
            offset[e + 1] = offset[e] + 2 * (static_cast<int>(d.routes[e].size()) + 1);
        total = offset[d.routes.size()];
    }
    int of(const Dart& dt) const { return offset[dt.edge] + 2 * dt.seg + (dt.forward ? 0 : 1); }
};

}  // namespace detail

// Traces the faces of the planarization. Requires slot-consistent routes;
// every dart lands in exactly one face.
inline std::vector<std::vector<Dart>> trace_faces(const Drawing& d) {
    auto rot = detail::node_rotations(d);
    detail::DartIndex idx(d);
    // Position of each leaving dart within its node rotation.
    std::vector<std::pair<int, int>> at(idx.total, {-1, -1});
    for (std::size_t n = 0; n < rot.size(); ++n)
        for (std::size_t j = 0; j < rot[n].size(); ++j)
            at[idx.of(rot[n][j])] = {static_cast<int>(n), static_cast<int>(j)};

    std::vector<char> used(idx.total, 0);
    std::vector<std::vector<Dart>> faces;
    for (EdgeId e = 0; e < static_cast<EdgeId>(d.routes.size()); ++e) {
        for (int s = 0; s <= static_cast<int>(d.routes[e].size()); ++s) {
            for (bool fwd : {true, false}) {
                Dart start{e, s, fwd};
                if (used[idx.of(start)]) continue;
                std::vector<Dart> face;
                Dart cur = start;
                do {
                    used[idx.of(cur)] = 1;
                    face.push_back(cur);
                    Dart rev{cur.edge, cur.seg, !cur.forward};
                    auto [node, pos] = at[idx.of(rev)];
                    if (node < 0) throw std::logic_error("dart missing from rotations");
                    int deg = static_cast<int>(rot[node].size());
                    cur = rot[node][(pos + deg - 1) % deg];
                } while (!(cur == start));
                faces.push_back(std::move(face));
            }
        }
    }
    return faces;
}

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

// Full invariant check: graph simplicity, slot consistency, rotation
// completeness, and sphere realizability of the rotation system via face
// tracing (per component, V - E + F must equal 2).
inline ValidationReport validate_drawing(const Drawing& d) {
    ValidationReport rep;
    const SimpleGraph& g = d.graph;

    std::set<std::pair<VertexId, VertexId>> seen_pairs;
    for (const EdgeRec& e : g.edges) {
        if (e.tail < 0 || e.tail >= g.vertex_count || e.head < 0 || e.head >= g.vertex_count) {
            rep.add("bad_edge_ref", "edge " + std::to_string(e.id) + " endpoint out of range");
            continue;
        }
        if (e.tail == e.head)
            rep.add("loop", "edge " + std::to_string(e.id) + " is a loop");
        auto key = std::minmax(e.tail, e.head);
        if (!seen_pairs.insert({key.first, key.second}).second)
            rep.add("parallel_edges", "duplicate edge between " + std::to_string(key.first) +
                                          " and " + std::to_string(key.second));
    }

    if (static_cast<int>(d.routes.size()) != g.edge_count())
        rep.add("bad_route_ref", "route table size mismatch");
    if (static_cast<int>(d.rotations.size()) != g.vertex_count)
        rep.add("rotation_mismatch", "rotation table size mismatch");
    if (!rep.ok()) return rep;

    // Crossing records and slot cross-references.
    bool slots_ok = true;
    std::vector<int> occurrences(d.crossings.size(), 0);
    for (CrossingId c = 0; c < d.crossing_count(); ++c) {
        const Crossing& x = d.crossings[c];
        if (x.sign != 1 && x.sign != -1) {
            rep.add("bad_sign", "crossing " + std::to_string(c));
            slots_ok = false;
            continue;
        }
        if (x.a < 0 || x.a >= g.edge_count() || x.b < 0 || x.b >= g.edge_count()) {
            rep.add("dangling_crossing", "crossing " + std::to_string(c) + " references a missing edge");
            slots_ok = false;
            continue;
        }
        if (x.ai < 0 || x.ai >= static_cast<int>(d.routes[x.a].size()) || x.bi < 0 ||
            x.bi >= static_cast<int>(d.routes[x.b].size())) {
            rep.add("dangling_crossing", "crossing " + std::to_string(c) + " slot out of range");
            slots_ok = false;
            continue;
        }
        if (x.a == x.b && x.ai == x.bi) {
            rep.add("self_crossing_slots", "crossing " + std::to_string(c) + " repeats a slot");
            slots_ok = false;
            continue;
        }
        if (d.routes[x.a][x.ai] != c || d.routes[x.b][x.bi] != c) {
            rep.add("slot_mismatch", "crossing " + std::to_string(c) + " slots hold another crossing");
            slots_ok = false;
        }
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        for (int i = 0; i < static_cast<int>(d.routes[e].size()); ++i) {
            CrossingId c = d.routes[e][i];
            if (c < 0 || c >= d.crossing_count()) {
                rep.add("bad_route_ref", "edge " + std::to_string(e) + " slot " + std::to_string(i));
                slots_ok = false;
                continue;
            }
            const Crossing& x = d.crossings[c];
            bool claims = (x.a == e && x.ai == i) || (x.b == e && x.bi == i);
            if (!claims) {
                rep.add("slot_mismatch", "edge " + std::to_string(e) + " slot " + std::to_string(i) +
                                             " not claimed by crossing " + std::to_string(c));
                slots_ok = false;
            } else {
                ++occurrences[c];
            }
        }
    }
    for (CrossingId c = 0; c < d.crossing_count(); ++c) {
        if (occurrences[c] != 2) {
            rep.add("dangling_crossing", "crossing " + std::to_string(c) + " occurs " +
                                             std::to_string(occurrences[c]) + " times");
            slots_ok = false;
        }
    }

    // Vertex rotations must list exactly the incident edge ends.
    for (VertexId v = 0; v < g.vertex_count; ++v) {
        std::vector<EdgeEnd> expected;
        for (const EdgeRec& e : g.edges) {
            if (e.tail == v) expected.push_back(EdgeEnd{e.id, false});
            if (e.head == v) expected.push_back(EdgeEnd{e.id, true});
        }
        std::vector<EdgeEnd> got = d.rotations[v];
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        if (expected != got) {
            rep.add("rotation_mismatch", "vertex " + std::to_string(v));
            slots_ok = false;
        }
    }

    if (!slots_ok) return rep;

    // Genus check. Components and incidence only count nodes touched by a
    // segment; every component must satisfy V - E + F = 2, equivalently
    // the sum over dart-orbit faces gives V - E + F = 2C.
    int nodes = g.vertex_count + d.crossing_count();
    detail::UnionFind uf(nodes);
    std::vector<char> incident(nodes, 0);
    long long segments = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        for (int s = 0; s <= static_cast<int>(d.routes[e].size()); ++s) {
            int from = detail::seg_from_node(d, e, s);
            int to = detail::seg_to_node(d, e, s);
            uf.unite(from, to);
            incident[from] = incident[to] = 1;
            ++segments;
        }
    }
    long long v_count = 0;
    std::set<int> comps;
    for (int n = 0; n < nodes; ++n) {
        if (!incident[n]) continue;
        ++v_count;
        comps.insert(uf.find(n));
    }
    long long faces = static_cast<long long>(trace_faces(d).size());
    long long components = static_cast<long long>(comps.size());
    if (v_count - segments + faces != 2 * components) {
        rep.add("euler", "V - E + F = " + std::to_string(v_count - segments + faces) +
                             " over " + std::to_string(components) + " component(s)");
    }
    return rep;
}

}  // namespace untangle
