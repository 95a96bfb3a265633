#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "untangle/drawing.hpp"

namespace untangle {

using EdgeSet = std::vector<EdgeId>;

struct DrawingStats {
    long long crossing_points = 0;             // crossings with both strands active
    long long crossing_pairs = 0;              // k: unordered pairs of distinct edges
    long long crossing_edges = 0;              // l: active edges in any active crossing
    std::map<std::pair<EdgeId, EdgeId>, int> pair_multiplicity;
    std::map<EdgeId, int> self_crossings;
};

namespace detail {

inline std::vector<char> edge_mask(const Drawing& d, const EdgeSet& active) {
    std::vector<char> mask(d.graph.edge_count(), 0);
    for (EdgeId e : active) {
        if (e < 0 || e >= d.graph.edge_count())
            throw std::invalid_argument("unknown edge id " + std::to_string(e));
        mask[e] = 1;
    }
    return mask;
}

}  // namespace detail

inline EdgeSet all_edges(const Drawing& d) {
    EdgeSet out(d.graph.edge_count());
    for (EdgeId e = 0; e < d.graph.edge_count(); ++e) out[e] = e;
    return out;
}

// Crossing counts restricted to crossings whose both strands lie on active
// edges. Self-crossings count as crossing points and mark their edge as a
// crossing edge but do not form a pair.
inline DrawingStats stats(const Drawing& d, const EdgeSet& active) {
    auto mask = detail::edge_mask(d, active);
    DrawingStats st;
    std::vector<char> crossing_edge(d.graph.edge_count(), 0);
    for (const Crossing& x : d.crossings) {
        if (!mask[x.a] || !mask[x.b]) continue;
        ++st.crossing_points;
        crossing_edge[x.a] = crossing_edge[x.b] = 1;
        if (x.self()) {
            ++st.self_crossings[x.a];
        } else {
            auto key = std::minmax(x.a, x.b);
            ++st.pair_multiplicity[{key.first, key.second}];
        }
    }
    st.crossing_pairs = static_cast<long long>(st.pair_multiplicity.size());
    for (EdgeId e = 0; e < d.graph.edge_count(); ++e)
        if (crossing_edge[e]) ++st.crossing_edges;
    return st;
}

// Splits the active set into (empty edges, crossing edges).
inline std::pair<EdgeSet, EdgeSet> classify_edges(const Drawing& d, const EdgeSet& active) {
    auto mask = detail::edge_mask(d, active);
    std::vector<char> crossing_edge(d.graph.edge_count(), 0);
    for (const Crossing& x : d.crossings)
        if (mask[x.a] && mask[x.b]) crossing_edge[x.a] = crossing_edge[x.b] = 1;
    EdgeSet empty, crossing;
    EdgeSet sorted = active;
    std::sort(sorted.begin(), sorted.end());
    for (EdgeId e : sorted)
        (crossing_edge[e] ? crossing : empty).push_back(e);
    return {empty, crossing};
}

// Multiplicity of the unordered pair (e, f), active edges assumed.
inline int pair_multiplicity(const Drawing& d, EdgeId e, EdgeId f) {
    int count = 0;
    for (const Crossing& x : d.crossings) {
        auto key = std::minmax(e, f);
        auto got = std::minmax(x.a, x.b);
        if (key == got && !x.self()) ++count;
    }
    return count;
}

inline int self_crossing_count(const Drawing& d, EdgeId e) {
    int count = 0;
    for (const Crossing& x : d.crossings)
        if (x.self() && x.a == e) ++count;
    return count;
}

}  // namespace untangle
