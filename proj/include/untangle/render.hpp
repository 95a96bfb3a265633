#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "untangle/ingest.hpp"

namespace untangle {

struct RenderOptions {
    double width = 800.0;
    bool vertex_labels = false;
    // Optional edge classes: "blue", "red", "empty". Unlisted edges use the
    // default stroke.
    std::map<EdgeId, std::string> classes;
};

namespace detail {

inline const char* stroke_for(const RenderOptions& opt, EdgeId e) {
    auto it = opt.classes.find(e);
    if (it == opt.classes.end()) return "#333333";
    if (it->second == "blue") return "#2563eb";
    if (it->second == "red") return "#dc2626";
    if (it->second == "empty") return "#9ca3af";
    return "#333333";
}

inline std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << v;
    std::string s = os.str();
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

struct Canvas {
    double min_x = 0, min_y = 0, scale = 1, height = 0;

    double x(double raw) const { return (raw - min_x) * scale + 20.0; }
    double y(double raw) const { return height - ((raw - min_y) * scale + 20.0); }
};

inline Canvas fit_canvas(const std::vector<std::pair<double, double>>& pts, double width) {
    Canvas c;
    if (pts.empty()) {
        c.height = width;
        return c;
    }
    double min_x = pts[0].first, max_x = pts[0].first;
    double min_y = pts[0].second, max_y = pts[0].second;
    for (auto& [px, py] : pts) {
        min_x = std::min(min_x, px);
        max_x = std::max(max_x, px);
        min_y = std::min(min_y, py);
        max_y = std::max(max_y, py);
    }
    double span_x = std::max(max_x - min_x, 1e-9);
    double span_y = std::max(max_y - min_y, 1e-9);
    c.min_x = min_x;
    c.min_y = min_y;
    c.scale = (width - 40.0) / std::max(span_x, span_y);
    c.height = span_y * c.scale + 40.0;
    return c;
}

inline void svg_header(std::ostringstream& os, double width, double height) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
       << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height)
       << "\">\n";
}

}  // namespace detail

// Renders a geometric drawing verbatim: one path per edge, one mark per
// crossing point.
inline std::string render_svg(const GeoDrawing& g, const RenderOptions& opt = {}) {
    std::vector<std::pair<double, double>> all;
    for (const GeoVertex& v : g.vertices) all.push_back({to_double(v.pos.x), to_double(v.pos.y)});
    for (const GeoEdge& e : g.edges)
        for (const Point& p : e.via) all.push_back({to_double(p.x), to_double(p.y)});
    detail::Canvas c = detail::fit_canvas(all, opt.width);

    std::ostringstream os;
    detail::svg_header(os, opt.width, c.height);
    for (const GeoEdge& e : g.edges) {
        auto line = g.polyline(e.id);
        os << "  <path class=\"edge\" fill=\"none\" stroke=\"" << detail::stroke_for(opt, e.id)
           << "\" stroke-width=\"1.5\" d=\"";
        for (std::size_t i = 0; i < line.size(); ++i)
            os << (i == 0 ? "M" : " L") << detail::fmt(c.x(to_double(line[i].x))) << " "
               << detail::fmt(c.y(to_double(line[i].y)));
        os << "\"/>\n";
    }
    for (const Point& p : geo_crossing_points(g))
        os << "  <circle class=\"crossing\" r=\"3\" fill=\"none\" stroke=\"#f59e0b\" cx=\""
           << detail::fmt(c.x(to_double(p.x))) << "\" cy=\"" << detail::fmt(c.y(to_double(p.y)))
           << "\"/>\n";
    for (const GeoVertex& v : g.vertices) {
        os << "  <circle class=\"vertex\" r=\"4\" fill=\"#111111\" cx=\""
           << detail::fmt(c.x(to_double(v.pos.x))) << "\" cy=\""
           << detail::fmt(c.y(to_double(v.pos.y))) << "\"/>\n";
        if (opt.vertex_labels)
            os << "  <text x=\"" << detail::fmt(c.x(to_double(v.pos.x)) + 6) << "\" y=\""
               << detail::fmt(c.y(to_double(v.pos.y)) - 6) << "\" font-size=\"12\">" << v.id
               << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

// Renders a combinatorial drawing by re-embedding its planarization with a
// deterministic force layout. Best effort: the picture preserves incidence
// and crossing structure locally, not the original geometry.
inline std::string render_svg(const Drawing& d, const RenderOptions& opt = {}) {
    ValidationReport rep = validate_drawing(d);
    if (!rep.ok())
        throw std::invalid_argument("cannot render an invalid drawing (" +
                                    rep.violations[0].code + "); pass geometric input instead");

    int nodes = d.graph.vertex_count + d.crossing_count();
    std::vector<std::pair<int, int>> segs;
    for (EdgeId e = 0; e < d.graph.edge_count(); ++e)
        for (int s = 0; s <= static_cast<int>(d.routes[e].size()); ++s)
            segs.push_back({detail::seg_from_node(d, e, s), detail::seg_to_node(d, e, s)});

    // Deterministic circular start, then spring relaxation.
    std::vector<double> px(nodes), py(nodes);
    for (int i = 0; i < nodes; ++i) {
        double a = 2.0 * 3.14159265358979323846 * i / std::max(nodes, 1);
        px[i] = std::cos(a) * 100.0;
        py[i] = std::sin(a) * 100.0;
    }
    double ideal = 100.0 / std::sqrt(static_cast<double>(std::max(nodes, 1)));
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<double> fx(nodes, 0.0), fy(nodes, 0.0);
        for (int i = 0; i < nodes; ++i)
            for (int j = i + 1; j < nodes; ++j) {
                double dx = px[i] - px[j], dy = py[i] - py[j];
                double d2 = dx * dx + dy * dy + 1e-6;
                double rep_f = ideal * ideal / d2 * 40.0;
                fx[i] += dx * rep_f;
                fy[i] += dy * rep_f;
                fx[j] -= dx * rep_f;
                fy[j] -= dy * rep_f;
            }
        for (auto& [u, v] : segs) {
            double dx = px[u] - px[v], dy = py[u] - py[v];
            double dist = std::sqrt(dx * dx + dy * dy) + 1e-9;
            double att = (dist - ideal * 4.0) * 0.05;
            fx[u] -= dx / dist * att;
            fy[u] -= dy / dist * att;
            fx[v] += dx / dist * att;
            fy[v] += dy / dist * att;
        }
        double cool = 1.0 - static_cast<double>(iter) / 200.0;
        for (int i = 0; i < nodes; ++i) {
            px[i] += std::clamp(fx[i], -5.0, 5.0) * cool;
            py[i] += std::clamp(fy[i], -5.0, 5.0) * cool;
        }
    }
    for (int i = 0; i < nodes; ++i)
        if (!std::isfinite(px[i]) || !std::isfinite(py[i]))
            throw std::runtime_error("re-embedding failed; render from geometric input");

    std::vector<std::pair<double, double>> all;
    for (int i = 0; i < nodes; ++i) all.push_back({px[i], py[i]});
    detail::Canvas c = detail::fit_canvas(all, opt.width);

    std::ostringstream os;
    detail::svg_header(os, opt.width, c.height);
    for (EdgeId e = 0; e < d.graph.edge_count(); ++e) {
        os << "  <path class=\"edge\" fill=\"none\" stroke=\"" << detail::stroke_for(opt, e)
           << "\" stroke-width=\"1.5\" d=\"";
        int tail = d.graph.edges[e].tail;
        os << "M" << detail::fmt(c.x(px[tail])) << " " << detail::fmt(c.y(py[tail]));
        for (CrossingId x : d.routes[e]) {
            int node = d.graph.vertex_count + x;
            os << " L" << detail::fmt(c.x(px[node])) << " " << detail::fmt(c.y(py[node]));
        }
        int head = d.graph.edges[e].head;
        os << " L" << detail::fmt(c.x(px[head])) << " " << detail::fmt(c.y(py[head])) << "\"/>\n";
    }
    for (CrossingId x = 0; x < d.crossing_count(); ++x) {
        int node = d.graph.vertex_count + x;
        os << "  <circle class=\"crossing\" r=\"3\" fill=\"none\" stroke=\"#f59e0b\" cx=\""
           << detail::fmt(c.x(px[node])) << "\" cy=\"" << detail::fmt(c.y(py[node])) << "\"/>\n";
    }
    for (VertexId v = 0; v < d.graph.vertex_count; ++v)
        os << "  <circle class=\"vertex\" r=\"4\" fill=\"#111111\" cx=\""
           << detail::fmt(c.x(px[v])) << "\" cy=\"" << detail::fmt(c.y(py[v])) << "\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace untangle
