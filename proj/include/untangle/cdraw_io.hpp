#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "untangle/drawing.hpp"

namespace untangle {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical .cdraw serialization: ascending ids, rotations starting at the
// smallest edge end, routes in stored order. Output is byte-stable.
inline std::string serialize_cdraw(const Drawing& drawing) {
    Drawing d = drawing;
    canonicalize_rotations(d);
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (VertexId v = 0; v < d.graph.vertex_count; ++v) {
        nlohmann::ordered_json jr = nlohmann::ordered_json::array();
        for (const EdgeEnd& end : d.rotations[v])
            jr.push_back({{"edge", end.edge}, {"end", end.head ? "head" : "tail"}});
        j["vertices"].push_back({{"id", v}, {"rotation", jr}});
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const EdgeRec& e : d.graph.edges) {
        j["edges"].push_back(
            {{"id", e.id}, {"tail", e.tail}, {"head", e.head}, {"route", d.routes[e.id]}});
    }
    j["crossings"] = nlohmann::ordered_json::array();
    for (CrossingId c = 0; c < d.crossing_count(); ++c) {
        const Crossing& x = d.crossings[c];
        j["crossings"].push_back({{"id", c},
                                  {"a", x.a},
                                  {"ai", x.ai},
                                  {"b", x.b},
                                  {"bi", x.bi},
                                  {"sign", x.sign}});
    }
    return j.dump(2) + "\n";
}

// Parses a .cdraw document. File ids may be sparse; they are remapped to
// dense 0-based ids in ascending file-id order.
inline Drawing parse_cdraw(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("invalid JSON: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") ||
        !j.contains("crossings"))
        throw ParseError("expected object with vertices, edges, crossings");

    auto dense = [](const nlohmann::json& arr, const char* what) {
        std::map<long long, int> ids;
        for (const auto& item : arr) {
            if (!item.contains("id") || !item["id"].is_number_integer())
                throw ParseError(std::string(what) + " without integer id");
            long long id = item["id"].get<long long>();
            if (ids.count(id)) throw ParseError(std::string("duplicate ") + what + " id");
            ids[id] = 0;
        }
        int next = 0;
        for (auto& [id, slot] : ids) slot = next++;
        return ids;
    };
    auto vmap = dense(j["vertices"], "vertex");
    auto emap = dense(j["edges"], "edge");
    auto cmap = dense(j["crossings"], "crossing");
    auto lookup = [](const std::map<long long, int>& m, long long id, const char* what) {
        auto it = m.find(id);
        if (it == m.end()) throw ParseError(std::string("unknown ") + what + " id " + std::to_string(id));
        return it->second;
    };

    Drawing d;
    d.graph.vertex_count = static_cast<int>(vmap.size());
    d.rotations.resize(vmap.size());
    d.graph.edges.resize(emap.size());
    d.routes.resize(emap.size());
    d.crossings.resize(cmap.size());

    for (const auto& je : j["edges"]) {
        int e = lookup(emap, je["id"].get<long long>(), "edge");
        EdgeRec rec;
        rec.id = e;
        if (!je.contains("tail") || !je.contains("head") || !je.contains("route"))
            throw ParseError("edge missing tail/head/route");
        rec.tail = lookup(vmap, je["tail"].get<long long>(), "vertex");
        rec.head = lookup(vmap, je["head"].get<long long>(), "vertex");
        d.graph.edges[e] = rec;
        for (const auto& jc : je["route"])
            d.routes[e].push_back(lookup(cmap, jc.get<long long>(), "crossing"));
    }
    for (const auto& jv : j["vertices"]) {
        int v = lookup(vmap, jv["id"].get<long long>(), "vertex");
        if (!jv.contains("rotation")) throw ParseError("vertex missing rotation");
        for (const auto& jr : jv["rotation"]) {
            if (!jr.contains("edge") || !jr.contains("end"))
                throw ParseError("rotation entry missing edge/end");
            EdgeEnd end;
            end.edge = lookup(emap, jr["edge"].get<long long>(), "edge");
            std::string which = jr["end"].get<std::string>();
            if (which != "tail" && which != "head") throw ParseError("rotation end must be tail|head");
            end.head = which == "head";
            d.rotations[v].push_back(end);
        }
    }
    for (const auto& jc : j["crossings"]) {
        int c = lookup(cmap, jc["id"].get<long long>(), "crossing");
        Crossing x;
        for (const char* key : {"a", "ai", "b", "bi", "sign"})
            if (!jc.contains(key)) throw ParseError("crossing missing field");
        x.a = lookup(emap, jc["a"].get<long long>(), "edge");
        x.b = lookup(emap, jc["b"].get<long long>(), "edge");
        x.ai = jc["ai"].get<int>();
        x.bi = jc["bi"].get<int>();
        x.sign = jc["sign"].get<int>();
        if (x.a > x.b || (x.a == x.b && x.ai > x.bi)) {
            std::swap(x.a, x.b);
            std::swap(x.ai, x.bi);
            x.sign = -x.sign;
        }
        d.crossings[c] = x;
    }
    return d;
}

}  // namespace untangle
