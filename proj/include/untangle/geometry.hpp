#pragma once

#include <utility>

#include "untangle/rational.hpp"

namespace untangle {

struct Point {
    Rat x;
    Rat y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

struct Vec {
    Rat x;
    Rat y;
};

inline Vec direction(const Point& from, const Point& to) {
    return Vec{to.x - from.x, to.y - from.y};
}

inline Rat cross(const Vec& a, const Vec& b) {
    return a.x * b.y - a.y * b.x;
}

// Sign of the turn p -> q -> r: +1 left (ccw), -1 right, 0 collinear.
inline int orientation(const Point& p, const Point& q, const Point& r) {
    return sign_of(cross(direction(p, q), direction(p, r)));
}

struct Segment {
    Point a;
    Point b;
};

inline bool bbox_overlap(const Segment& s, const Segment& t) {
    auto lo = [](const Rat& u, const Rat& v) { return u < v ? u : v; };
    auto hi = [](const Rat& u, const Rat& v) { return u < v ? v : u; };
    return lo(s.a.x, s.b.x) <= hi(t.a.x, t.b.x) && lo(t.a.x, t.b.x) <= hi(s.a.x, s.b.x) &&
           lo(s.a.y, s.b.y) <= hi(t.a.y, t.b.y) && lo(t.a.y, t.b.y) <= hi(s.a.y, s.b.y);
}

// q on the closed segment s (s assumed non-degenerate or a point).
inline bool on_segment(const Segment& s, const Point& q) {
    if (orientation(s.a, s.b, q) != 0) return false;
    auto lo = [](const Rat& u, const Rat& v) { return u < v ? u : v; };
    auto hi = [](const Rat& u, const Rat& v) { return u < v ? v : u; };
    return lo(s.a.x, s.b.x) <= q.x && q.x <= hi(s.a.x, s.b.x) &&
           lo(s.a.y, s.b.y) <= q.y && q.y <= hi(s.a.y, s.b.y);
}

enum class SegContact {
    none,        // disjoint
    proper,      // one transversal point, interior to both segments
    degenerate   // touching, overlap, or endpoint contact
};

// Classifies the contact between two non-degenerate segments. Endpoint
// contacts of any kind are reported as degenerate; callers whitelist the
// shared-endpoint cases they accept before invoking this.
inline SegContact classify_contact(const Segment& s, const Segment& t) {
    if (!bbox_overlap(s, t)) return SegContact::none;
    int o1 = orientation(s.a, s.b, t.a);
    int o2 = orientation(s.a, s.b, t.b);
    int o3 = orientation(t.a, t.b, s.a);
    int o4 = orientation(t.a, t.b, s.b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return SegContact::proper;
    if (o1 == 0 && on_segment(s, t.a)) return SegContact::degenerate;
    if (o2 == 0 && on_segment(s, t.b)) return SegContact::degenerate;
    if (o3 == 0 && on_segment(t, s.a)) return SegContact::degenerate;
    if (o4 == 0 && on_segment(t, s.b)) return SegContact::degenerate;
    return SegContact::none;
}

// Intersection point of the supporting lines; call only for proper contacts.
inline Point line_intersection(const Segment& s, const Segment& t) {
    Vec r = direction(s.a, s.b);
    Vec q = direction(t.a, t.b);
    Rat denom = cross(r, q);
    Rat u = cross(direction(s.a, t.a), q) / denom;
    return Point{s.a.x + u * r.x, s.a.y + u * r.y};
}

// Parameter of point p along segment s, as a fraction of the dominant axis.
inline Rat segment_parameter(const Segment& s, const Point& p) {
    Rat dx = s.b.x - s.a.x;
    Rat dy = s.b.y - s.a.y;
    Rat adx = dx < 0 ? Rat(-dx) : dx;
    Rat ady = dy < 0 ? Rat(-dy) : dy;
    if (adx >= ady) return (p.x - s.a.x) / dx;
    return (p.y - s.a.y) / dy;
}

// Angular comparison of direction vectors, counterclockwise from the
// positive x axis. Vectors must be nonzero; equal directions compare equal.
inline int angle_compare(const Vec& a, const Vec& b) {
    auto half = [](const Vec& v) {
        // 0: angle in [0, pi), 1: angle in [pi, 2pi)
        if (v.y > 0) return 0;
        if (v.y < 0) return 1;
        return v.x > 0 ? 0 : 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb ? -1 : 1;
    return -sign_of(cross(a, b));
}

}  // namespace untangle
