#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "untangle/geo_drawing.hpp"
#include "untangle/geometry.hpp"
#include "untangle/validate.hpp"

namespace untangle {

// General-position violation in a geometric drawing. Inputs are rejected,
// never repaired.
struct DegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string frac(const Rat& v) {
    BigInt num = boost::multiprecision::numerator(v);
    BigInt den = boost::multiprecision::denominator(v);
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
}

inline std::string point_str(const Point& p) {
    return "(" + frac(p.x) + ", " + frac(p.y) + ")";
}

struct SegRef {
    EdgeId edge;
    int seg;
};

struct GeoHit {
    Point at;
    SegRef sa;
    Rat ta;
    Vec da;
    SegRef sb;
    Rat tb;
    Vec db;
};

// Detects every proper pairwise intersection of edge interiors and rejects
// all general-position violations: overlaps, touchings, triple points and
// curves through vertices.
inline std::vector<GeoHit> geo_hits(const GeoDrawing& g) {
    const int m = static_cast<int>(g.edges.size());
    std::vector<std::vector<Point>> lines(m);
    for (EdgeId e = 0; e < m; ++e) {
        lines[e] = g.polyline(e);
        for (std::size_t i = 0; i + 1 < lines[e].size(); ++i)
            if (lines[e][i] == lines[e][i + 1])
                throw DegeneracyError("edge " + std::to_string(e) + " has a zero-length segment at " +
                                      point_str(lines[e][i]));
    }
    for (std::size_t u = 0; u < g.vertices.size(); ++u)
        for (std::size_t v = u + 1; v < g.vertices.size(); ++v)
            if (g.vertices[u].pos == g.vertices[v].pos)
                throw DegeneracyError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                      " coincide at " + point_str(g.vertices[u].pos));

    // No curve may pass through a vertex other than its own endpoints.
    for (const GeoVertex& v : g.vertices) {
        for (EdgeId e = 0; e < m; ++e) {
            const auto& pts = lines[e];
            int last = static_cast<int>(pts.size()) - 2;
            for (int s = 0; s + 1 < static_cast<int>(pts.size()); ++s) {
                bool own_tail = s == 0 && g.edges[e].tail == v.id;
                bool own_head = s == last && g.edges[e].head == v.id;
                Segment seg{pts[s], pts[s + 1]};
                if (!on_segment(seg, v.pos)) continue;
                if (own_tail && v.pos == seg.a) continue;
                if (own_head && v.pos == seg.b) continue;
                throw DegeneracyError("edge " + std::to_string(e) + " passes through vertex " +
                                      std::to_string(v.id) + " at " + point_str(v.pos));
            }
        }
    }

    std::vector<GeoHit> hits;
    auto shared_vertex = [&](EdgeId a, EdgeId b) -> int {
        const GeoEdge& ea = g.edges[a];
        const GeoEdge& eb = g.edges[b];
        if (ea.tail == eb.tail || ea.tail == eb.head) return ea.tail;
        if (ea.head == eb.tail || ea.head == eb.head) return ea.head;
        return -1;
    };

    for (EdgeId ea = 0; ea < m; ++ea) {
        const auto& pa = lines[ea];
        int na = static_cast<int>(pa.size()) - 1;
        for (EdgeId eb = ea; eb < m; ++eb) {
            const auto& pb = lines[eb];
            int nb = static_cast<int>(pb.size()) - 1;
            int shared = ea == eb ? -1 : shared_vertex(ea, eb);
            for (int i = 0; i < na; ++i) {
                int j0 = ea == eb ? i + 1 : 0;
                for (int j = j0; j < nb; ++j) {
                    Segment s{pa[i], pa[i + 1]};
                    Segment t{pb[j], pb[j + 1]};
                    std::string where = "edges " + std::to_string(ea) + "/" + std::to_string(eb) +
                                        " segments " + std::to_string(i) + "/" + std::to_string(j);
                    if (ea == eb && j == i + 1) {
                        // Consecutive segments of one polyline share the via
                        // point; a fold-back would overlap collinearly.
                        Vec d1 = direction(s.a, s.b);
                        Vec d2 = direction(t.a, t.b);
                        if (sign_of(cross(d1, d2)) == 0 && sign_of(d1.x * d2.x + d1.y * d2.y) < 0)
                            throw DegeneracyError("collinear overlap at " + where + " near " +
                                                  point_str(s.b));
                        continue;
                    }
                    if (shared >= 0) {
                        const Point& vp = g.vertices[shared].pos;
                        bool s_at = (s.a == vp) || (s.b == vp);
                        bool t_at = (t.a == vp) || (t.b == vp);
                        if (s_at && t_at) {
                            // Both segments are incident to the shared
                            // vertex; contact at the vertex itself is the
                            // drawing model's allowed meeting.
                            Point oa = s.a == vp ? s.b : s.a;
                            Point ob = t.a == vp ? t.b : t.a;
                            Vec d1 = direction(vp, oa);
                            Vec d2 = direction(vp, ob);
                            if (sign_of(cross(d1, d2)) == 0 && sign_of(d1.x * d2.x + d1.y * d2.y) > 0)
                                throw DegeneracyError("collinear overlap at shared vertex " +
                                                      point_str(vp) + " (" + where + ")");
                            continue;
                        }
                    }
                    SegContact c = classify_contact(s, t);
                    if (c == SegContact::none) continue;
                    if (c == SegContact::degenerate)
                        throw DegeneracyError("non-transversal contact at " + where);
                    Point p = line_intersection(s, t);
                    GeoHit hit;
                    hit.at = p;
                    hit.sa = SegRef{ea, i};
                    hit.ta = segment_parameter(s, p);
                    hit.da = direction(s.a, s.b);
                    hit.sb = SegRef{eb, j};
                    hit.tb = segment_parameter(t, p);
                    hit.db = direction(t.a, t.b);
                    hits.push_back(std::move(hit));
                }
            }
        }
    }

    // No three edge interiors through one point (structurally, no two
    // crossing points may coincide).
    std::vector<Point> pts;
    pts.reserve(hits.size());
    for (const GeoHit& h : hits) pts.push_back(h.at);
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i] == pts[i + 1])
            throw DegeneracyError("multiple crossings coincide at " + point_str(pts[i]));
    return hits;
}

}  // namespace detail

// Crossing points of a geometric drawing, for rendering and oracle checks.
inline std::vector<Point> geo_crossing_points(const GeoDrawing& g) {
    std::vector<Point> pts;
    for (const auto& h : detail::geo_hits(g)) pts.push_back(h.at);
    return pts;
}

// Computes the combinatorial drawing of a geometric one. Crossings are the
// proper pairwise intersections of edge interiors; route order follows the
// polylines; signs come from the orientation of the two direction vectors;
// vertex rotations from the angular order of the first segments.
inline Drawing ingest(const GeoDrawing& g) {
    auto hits = detail::geo_hits(g);
    const int m = static_cast<int>(g.edges.size());

    Drawing d;
    d.graph.vertex_count = static_cast<int>(g.vertices.size());
    d.graph.edges.resize(m);
    for (EdgeId e = 0; e < m; ++e)
        d.graph.edges[e] = EdgeRec{e, g.edges[e].tail, g.edges[e].head};
    d.routes.resize(m);
    d.rotations.resize(g.vertices.size());

    // Provisional crossing table: strand 0 = first hit strand. Signs are
    // the orientation of (strand 0 direction, strand 1 direction).
    d.crossings.resize(hits.size());
    struct Stop {
        int seg;
        Rat t;
        RouteToken token;
    };
    std::vector<std::vector<Stop>> stops(m);
    for (std::size_t h = 0; h < hits.size(); ++h) {
        const auto& hit = hits[h];
        Crossing x;
        x.a = hit.sa.edge;
        x.b = hit.sb.edge;
        x.sign = sign_of(cross(hit.da, hit.db));
        d.crossings[h] = x;
        stops[hit.sa.edge].push_back(Stop{hit.sa.seg, hit.ta, RouteToken{static_cast<int>(h), 0}});
        stops[hit.sb.edge].push_back(Stop{hit.sb.seg, hit.tb, RouteToken{static_cast<int>(h), 1}});
    }
    std::vector<std::vector<RouteToken>> tokens(m);
    for (EdgeId e = 0; e < m; ++e) {
        std::sort(stops[e].begin(), stops[e].end(), [](const Stop& a, const Stop& b) {
            return a.seg != b.seg ? a.seg < b.seg : a.t < b.t;
        });
        for (const Stop& s : stops[e]) tokens[e].push_back(s.token);
    }
    rebuild_routes(d, tokens);

    // Rotations: angular ccw order of the initial direction of each
    // incident edge end.
    for (VertexId v = 0; v < d.graph.vertex_count; ++v) {
        struct Out {
            Vec dir;
            EdgeEnd end;
        };
        std::vector<Out> outs;
        for (EdgeId e = 0; e < m; ++e) {
            auto pts = g.polyline(e);
            if (g.edges[e].tail == v)
                outs.push_back(Out{direction(pts[0], pts[1]), EdgeEnd{e, false}});
            if (g.edges[e].head == v)
                outs.push_back(
                    Out{direction(pts[pts.size() - 1], pts[pts.size() - 2]), EdgeEnd{e, true}});
        }
        std::sort(outs.begin(), outs.end(),
                  [](const Out& a, const Out& b) { return angle_compare(a.dir, b.dir) < 0; });
        for (const Out& o : outs) d.rotations[v].push_back(o.end);
    }
    canonicalize_rotations(d);

    ValidationReport rep = validate_drawing(d);
    if (!rep.ok())
        throw std::logic_error("ingest produced an invalid drawing: " + rep.violations[0].code +
                               " (" + rep.violations[0].detail + ")");
    return d;
}

}  // namespace untangle
