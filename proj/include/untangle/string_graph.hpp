#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "untangle/stats.hpp"

namespace untangle {

// Intersection graph of the active crossing edges: one vertex per crossing
// edge, one edge per crossing pair. Shared endpoints do not connect;
// self-crossings do not create loops.
struct StringGraph {
    std::vector<EdgeId> vertices;              // sorted source-drawing edge ids
    std::vector<std::pair<int, int>> edges;    // index pairs into vertices, u < v
    std::vector<std::vector<int>> adjacency;   // by vertex index

    int n() const { return static_cast<int>(vertices.size()); }
    int m() const { return static_cast<int>(edges.size()); }

    int index_of(EdgeId e) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), e);
        if (it == vertices.end() || *it != e) return -1;
        return static_cast<int>(it - vertices.begin());
    }
};

inline StringGraph string_graph(const Drawing& d, const EdgeSet& active) {
    StringGraph h;
    auto [empty, crossing] = classify_edges(d, active);
    h.vertices = crossing;  // classify_edges returns sorted sets
    h.adjacency.resize(h.vertices.size());
    std::map<std::pair<int, int>, bool> seen;
    auto mask = detail::edge_mask(d, active);
    for (const Crossing& x : d.crossings) {
        if (x.self() || !mask[x.a] || !mask[x.b]) continue;
        int u = h.index_of(x.a);
        int v = h.index_of(x.b);
        if (u > v) std::swap(u, v);
        if (seen.emplace(std::make_pair(u, v), true).second) {
            h.edges.push_back({u, v});
            h.adjacency[u].push_back(v);
            h.adjacency[v].push_back(u);
        }
    }
    std::sort(h.edges.begin(), h.edges.end());
    for (auto& adj : h.adjacency) std::sort(adj.begin(), adj.end());
    return h;
}

}  // namespace untangle
