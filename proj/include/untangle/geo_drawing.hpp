#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "untangle/cdraw_io.hpp"
#include "untangle/geometry.hpp"

namespace untangle {

struct GeoVertex {
    VertexId id = 0;
    Point pos;
};

struct GeoEdge {
    EdgeId id = 0;
    VertexId tail = 0;
    VertexId head = 0;
    std::vector<Point> via;
};

struct GeoDrawing {
    std::vector<GeoVertex> vertices;
    std::vector<GeoEdge> edges;

    // Full polyline of an edge, vertex to vertex.
    std::vector<Point> polyline(EdgeId e) const {
        const GeoEdge& ge = edges[e];
        std::vector<Point> pts;
        pts.push_back(vertices[ge.tail].pos);
        pts.insert(pts.end(), ge.via.begin(), ge.via.end());
        pts.push_back(vertices[ge.head].pos);
        return pts;
    }
};

inline std::string serialize_gdraw(const GeoDrawing& g) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const GeoVertex& v : g.vertices)
        j["vertices"].push_back(
            {{"id", v.id}, {"x", format_decimal(v.pos.x)}, {"y", format_decimal(v.pos.y)}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const GeoEdge& e : g.edges) {
        nlohmann::ordered_json vias = nlohmann::ordered_json::array();
        for (const Point& p : e.via)
            vias.push_back({format_decimal(p.x), format_decimal(p.y)});
        j["edges"].push_back(
            {{"id", e.id}, {"tail", e.tail}, {"head", e.head}, {"via", vias}});
    }
    return j.dump(2) + "\n";
}

inline GeoDrawing parse_gdraw(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("invalid JSON: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError("expected object with vertices and edges");

    auto coord = [](const nlohmann::json& v, const char* what) {
        if (!v.is_string()) throw ParseError(std::string(what) + " coordinate must be a decimal string");
        auto r = parse_decimal(v.get<std::string>());
        if (!r) throw ParseError(std::string("bad decimal: ") + v.get<std::string>());
        return *r;
    };

    std::map<long long, int> vmap, emap;
    for (const auto& jv : j["vertices"]) {
        if (!jv.contains("id")) throw ParseError("vertex without id");
        if (!vmap.emplace(jv["id"].get<long long>(), 0).second)
            throw ParseError("duplicate vertex id");
    }
    for (const auto& je : j["edges"]) {
        if (!je.contains("id")) throw ParseError("edge without id");
        if (!emap.emplace(je["id"].get<long long>(), 0).second)
            throw ParseError("duplicate edge id");
    }
    int next = 0;
    for (auto& [id, slot] : vmap) slot = next++;
    next = 0;
    for (auto& [id, slot] : emap) slot = next++;

    GeoDrawing g;
    g.vertices.resize(vmap.size());
    g.edges.resize(emap.size());
    for (const auto& jv : j["vertices"]) {
        int v = vmap.at(jv["id"].get<long long>());
        g.vertices[v] = GeoVertex{v, Point{coord(jv["x"], "x"), coord(jv["y"], "y")}};
    }
    for (const auto& je : j["edges"]) {
        int e = emap.at(je["id"].get<long long>());
        GeoEdge ge;
        ge.id = e;
        auto vt = vmap.find(je["tail"].get<long long>());
        auto vh = vmap.find(je["head"].get<long long>());
        if (vt == vmap.end() || vh == vmap.end()) throw ParseError("edge references unknown vertex");
        ge.tail = vt->second;
        ge.head = vh->second;
        if (je.contains("via"))
            for (const auto& jp : je["via"]) {
                if (!jp.is_array() || jp.size() != 2) throw ParseError("via point must be [x, y]");
                ge.via.push_back(Point{coord(jp[0], "via x"), coord(jp[1], "via y")});
            }
        g.edges[e] = std::move(ge);
    }
    return g;
}

}  // namespace untangle
