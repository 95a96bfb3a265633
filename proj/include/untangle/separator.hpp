#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "untangle/gen.hpp"
#include "untangle/string_graph.hpp"
#include "untangle/validate.hpp"

namespace untangle {

// Balanced vertex separator of a string graph: V(H) = F0 + F1 + F2 with
// |F1|, |F2| <= floor(2n/3) and no H-edge between F1 and F2. The achieved
// ratio |F0| / sqrt(m) stands in for the existential separator constant.
struct SeparatorResult {
    std::vector<EdgeId> f0, f1, f2;  // source-drawing edge ids
    double ratio = 0.0;
    bool ratio_infinite = false;     // F0 nonempty while H has no edges
    double balance = 0.0;
    std::string method;
};

inline int balance_limit(int n) { return (2 * n) / 3; }

namespace detail {

inline void fill_ratio(const StringGraph& h, SeparatorResult& s) {
    if (h.m() == 0) {
        s.ratio_infinite = !s.f0.empty();
        s.ratio = 0.0;
    } else {
        s.ratio_infinite = false;
        s.ratio = static_cast<double>(s.f0.size()) / std::sqrt(static_cast<double>(h.m()));
    }
    s.balance = h.n() == 0 ? 0.0
                           : static_cast<double>(std::max(s.f1.size(), s.f2.size())) /
                                 static_cast<double>(h.n());
}

// Connected components of H restricted to the vertices outside `removed`.
inline std::vector<std::vector<int>> components(const StringGraph& h,
                                                const std::vector<char>& removed) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(h.n(), 0);
    for (int start = 0; start < h.n(); ++start) {
        if (seen[start] || removed[start]) continue;
        std::vector<int> comp;
        std::deque<int> queue{start};
        seen[start] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (int u : h.adjacency[v])
                if (!seen[u] && !removed[u]) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// First-fit-descending packing of component sizes into two parts of
// capacity `limit`. With every component <= limit and the total <= 3/2 of
// the limit plus one this always succeeds.
inline bool pack_components(const std::vector<std::vector<int>>& comps, int limit,
                            std::vector<char>& to_f1) {
    std::vector<int> order(comps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (comps[a].size() != comps[b].size()) return comps[a].size() > comps[b].size();
        return comps[a][0] < comps[b][0];
    });
    to_f1.assign(comps.size(), 0);
    std::size_t load1 = 0, load2 = 0;
    for (int i : order) {
        std::size_t sz = comps[i].size();
        bool first = load1 <= load2;
        if (first && load1 + sz <= static_cast<std::size_t>(limit)) {
            to_f1[i] = 1;
            load1 += sz;
        } else if (load2 + sz <= static_cast<std::size_t>(limit)) {
            load2 += sz;
        } else if (load1 + sz <= static_cast<std::size_t>(limit)) {
            to_f1[i] = 1;
            load1 += sz;
        } else {
            return false;
        }
    }
    return true;
}

// Minimum vertex cut separating two non-adjacent vertices of one component
// (unit vertex capacities, BFS augmenting paths on the split digraph).
inline std::optional<std::vector<int>> min_vertex_cut(const StringGraph& h,
                                                      const std::vector<int>& comp, int s, int t) {
    for (int u : h.adjacency[s])
        if (u == t) return std::nullopt;
    int n = static_cast<int>(comp.size());
    std::vector<int> local(h.n(), -1);
    for (int i = 0; i < n; ++i) local[comp[i]] = i;
    // Node 2i = v_in, 2i+1 = v_out.
    const int big = n + 2;
    std::vector<std::vector<int>> cap(2 * n, std::vector<int>(2 * n, 0));
    for (int i = 0; i < n; ++i)
        cap[2 * i][2 * i + 1] = (comp[i] == s || comp[i] == t) ? big : 1;
    for (int i = 0; i < n; ++i)
        for (int u : h.adjacency[comp[i]]) {
            if (local[u] < 0) continue;
            cap[2 * i + 1][2 * local[u]] = big;
        }
    int source = 2 * local[s] + 1, sink = 2 * local[t];
    while (true) {
        std::vector<int> parent(2 * n, -1);
        parent[source] = source;
        std::deque<int> queue{source};
        while (!queue.empty() && parent[sink] < 0) {
            int v = queue.front();
            queue.pop_front();
            for (int u = 0; u < 2 * n; ++u)
                if (cap[v][u] > 0 && parent[u] < 0) {
                    parent[u] = v;
                    queue.push_back(u);
                }
        }
        if (parent[sink] < 0) break;
        for (int v = sink; v != source; v = parent[v]) {
            cap[parent[v]][v] -= 1;
            cap[v][parent[v]] += 1;
        }
    }
    // Residual reachability gives the cut vertices.
    std::vector<char> reach(2 * n, 0);
    std::deque<int> queue{source};
    reach[source] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u = 0; u < 2 * n; ++u)
            if (cap[v][u] > 0 && !reach[u]) {
                reach[u] = 1;
                queue.push_back(u);
            }
    }
    std::vector<int> cut;
    for (int i = 0; i < n; ++i)
        if (reach[2 * i] && !reach[2 * i + 1]) cut.push_back(comp[i]);
    std::sort(cut.begin(), cut.end());
    return cut;
}

inline int bfs_far_vertex(const StringGraph& h, const std::vector<char>& removed, int start) {
    std::vector<int> dist(h.n(), -1);
    dist[start] = 0;
    std::deque<int> queue{start};
    int far = start;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (dist[v] > dist[far] || (dist[v] == dist[far] && v < far)) far = v;
        for (int u : h.adjacency[v])
            if (dist[u] < 0 && !removed[u]) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
    }
    return far;
}

}  // namespace detail

inline std::vector<Violation> verify_separator(const StringGraph& h, const SeparatorResult& s);

// Exhaustive minimum separator: subsets in increasing size, lexicographic
// order, with component packing into the two parts. Deterministic
// tie-break: lexicographically smallest F0, then lexicographically
// smallest F1.
inline SeparatorResult exact_separator(const StringGraph& h, int cap = 14) {
    int n = h.n();
    if (n > cap) throw std::invalid_argument("string graph exceeds the exact-size cap");
    if (n > 62) throw std::invalid_argument("exact separator limited to 62 vertices");
    int limit = balance_limit(n);

    SeparatorResult result;
    result.method = "exact";
    if (n == 0) {
        detail::fill_ratio(h, result);
        return result;
    }

    std::vector<int> chosen;
    auto feasible = [&](const std::vector<char>& removed, std::vector<std::vector<int>>& comps) {
        comps = detail::components(h, removed);
        // Subset-sum over component sizes: some side must land in
        // [total - limit, limit].
        int total = 0;
        for (const auto& c : comps) total += static_cast<int>(c.size());
        for (const auto& c : comps)
            if (static_cast<int>(c.size()) > limit) return false;
        std::uint64_t reachable = 1;
        for (const auto& c : comps) reachable |= reachable << c.size();
        for (int t = std::max(0, total - limit); t <= std::min(limit, total); ++t)
            if (reachable >> t & 1) return true;
        return false;
    };

    // Enumerate k-subsets of vertex indices in lexicographic order.
    std::vector<char> removed(n, 0);
    std::vector<std::vector<int>> comps;
    std::function<bool(int, int, int)> search = [&](int next, int picked, int k) {
        if (picked == k) {
            std::fill(removed.begin(), removed.end(), 0);
            for (int v : chosen) removed[v] = 1;
            return feasible(removed, comps);
        }
        for (int v = next; v <= n - (k - picked); ++v) {
            chosen.push_back(v);
            if (search(v + 1, picked + 1, k)) return true;
            chosen.pop_back();
        }
        return false;
    };
    for (int k = 0; k <= n; ++k) {
        chosen.clear();
        if (search(0, 0, k)) break;
    }

    for (int v : chosen) result.f0.push_back(h.vertices[v]);

    // Lexicographically smallest F1 over all valid component assignments.
    int c = static_cast<int>(comps.size());
    std::vector<int> sizes(c);
    for (int i = 0; i < c; ++i) sizes[i] = static_cast<int>(comps[i].size());
    std::optional<std::vector<int>> best_f1;
    for (std::uint64_t mask = 0; mask < (1ULL << c); ++mask) {
        int s1 = 0, s2 = 0;
        for (int i = 0; i < c; ++i) (mask >> i & 1 ? s1 : s2) += sizes[i];
        if (s1 > limit || s2 > limit) continue;
        std::vector<int> f1;
        for (int i = 0; i < c; ++i)
            if (mask >> i & 1) f1.insert(f1.end(), comps[i].begin(), comps[i].end());
        std::sort(f1.begin(), f1.end());
        if (!best_f1 || f1 < *best_f1) best_f1 = std::move(f1);
    }
    if (!best_f1) throw std::logic_error("exact separator lost its packing");
    std::vector<char> in_f1(n, 0);
    for (int v : *best_f1) in_f1[v] = 1;
    for (int v = 0; v < n; ++v) {
        if (removed[v]) continue;
        (in_f1[v] ? result.f1 : result.f2).push_back(h.vertices[v]);
    }
    detail::fill_ratio(h, result);
    return result;
}

// Cut-and-pack heuristic: while some component is too large, split it with
// a minimum vertex cut between sampled far vertex pairs; then pack
// components first-fit descending and greedily shrink F0. Best of
// `restarts` seeded rounds by (|F0|, lexicographic).
inline SeparatorResult heuristic_separator(const StringGraph& h, std::uint64_t seed = 0,
                                           int restarts = 8) {
    int n = h.n();
    int limit = balance_limit(n);
    SeparatorResult best;
    bool have_best = false;

    for (int round = 0; round < std::max(restarts, 1); ++round) {
        SplitMix64 rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(round));
        std::vector<char> removed(n, 0);
        while (true) {
            auto comps = detail::components(h, removed);
            const std::vector<int>* worst = nullptr;
            for (const auto& c : comps)
                if (static_cast<int>(c.size()) > limit && (!worst || c.size() > worst->size()))
                    worst = &c;
            if (!worst) break;
            if (worst->size() == 1) {
                removed[(*worst)[0]] = 1;
                continue;
            }
            std::optional<std::vector<int>> cut;
            for (int probe = 0; probe < 3 && !cut; ++probe) {
                int s = (*worst)[rng.below(worst->size())];
                int t = detail::bfs_far_vertex(h, removed, s);
                if (s == t) continue;
                auto candidate = detail::min_vertex_cut(h, *worst, s, t);
                if (candidate && !candidate->empty()) cut = candidate;
            }
            if (!cut) {
                // Clique-like component: fall back to a max-degree vertex.
                int pick = (*worst)[0];
                for (int v : *worst)
                    if (h.adjacency[v].size() > h.adjacency[pick].size()) pick = v;
                cut = std::vector<int>{pick};
            }
            for (int v : *cut) removed[v] = 1;
        }

        auto comps = detail::components(h, removed);
        std::vector<char> to_f1;
        if (!detail::pack_components(comps, limit, to_f1))
            throw std::logic_error("packing failed despite component size bound");
        std::vector<char> part(n, 0);  // 0 f0, 1 f1, 2 f2
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (int v : comps[i]) part[v] = to_f1[i] ? 1 : 2;

        // Greedy shrink: pull separator vertices into a part when no
        // neighbor lies on the other side and the balance allows it.
        int size1 = 0, size2 = 0;
        for (int v = 0; v < n; ++v) {
            if (!removed[v]) continue;
            part[v] = 0;
        }
        for (int v = 0; v < n; ++v) {
            size1 += part[v] == 1;
            size2 += part[v] == 2;
        }
        bool moved = true;
        while (moved) {
            moved = false;
            for (int v = 0; v < n; ++v) {
                if (part[v] != 0 || !removed[v]) continue;
                bool touches1 = false, touches2 = false;
                for (int u : h.adjacency[v]) {
                    touches1 |= part[u] == 1;
                    touches2 |= part[u] == 2;
                }
                int target = 0;
                bool prefer1 = size1 <= size2;
                if (prefer1 && !touches2 && size1 < limit) target = 1;
                else if (!touches1 && size2 < limit) target = 2;
                else if (!touches2 && size1 < limit) target = 1;
                if (target == 0) continue;
                part[v] = target;
                removed[v] = 0;
                (target == 1 ? size1 : size2) += 1;
                moved = true;
            }
        }

        SeparatorResult cand;
        cand.method = "heuristic";
        for (int v = 0; v < n; ++v) {
            if (part[v] == 1) cand.f1.push_back(h.vertices[v]);
            else if (part[v] == 2) cand.f2.push_back(h.vertices[v]);
            else cand.f0.push_back(h.vertices[v]);
        }
        detail::fill_ratio(h, cand);
        auto key = [](const SeparatorResult& r) {
            return std::make_tuple(r.f0.size(), r.f0, r.f1);
        };
        if (!have_best || key(cand) < key(best)) {
            best = std::move(cand);
            have_best = true;
        }
    }
    if (!have_best) {
        best.method = "heuristic";
        detail::fill_ratio(h, best);
    }
    return best;
}

// Checks partition, balance and cross-edge absence; recomputes the ratio.
inline std::vector<Violation> verify_separator(const StringGraph& h, const SeparatorResult& s) {
    std::vector<Violation> out;
    std::vector<int> all;
    for (const auto* part : {&s.f0, &s.f1, &s.f2})
        for (EdgeId e : *part) {
            int idx = h.index_of(e);
            if (idx < 0) {
                out.push_back({"partition", "unknown vertex " + std::to_string(e)});
                return out;
            }
            all.push_back(idx);
        }
    std::sort(all.begin(), all.end());
    bool is_partition = static_cast<int>(all.size()) == h.n();
    for (std::size_t i = 0; is_partition && i < all.size(); ++i)
        if (all[i] != static_cast<int>(i)) is_partition = false;
    if (!is_partition) {
        out.push_back({"partition", "parts do not partition V(H)"});
        return out;
    }
    int limit = balance_limit(h.n());
    if (static_cast<int>(s.f1.size()) > limit || static_cast<int>(s.f2.size()) > limit)
        out.push_back({"balance", "a part exceeds 2n/3"});
    std::vector<int> part(h.n(), 0);
    for (EdgeId e : s.f1) part[h.index_of(e)] = 1;
    for (EdgeId e : s.f2) part[h.index_of(e)] = 2;
    for (auto [u, v] : h.edges)
        if ((part[u] == 1 && part[v] == 2) || (part[u] == 2 && part[v] == 1)) {
            out.push_back({"cross_edge", "H-edge between F1 and F2: " +
                                             std::to_string(h.vertices[u]) + "-" +
                                             std::to_string(h.vertices[v])});
            break;
        }
    SeparatorResult fresh = s;
    detail::fill_ratio(h, fresh);
    if (fresh.ratio_infinite != s.ratio_infinite ||
        std::abs(fresh.ratio - s.ratio) > 1e-9 || std::abs(fresh.balance - s.balance) > 1e-9)
        out.push_back({"ratio", "stored ratio or balance disagrees with the partition"});
    return out;
}

inline std::string separator_json(const SeparatorResult& s) {
    nlohmann::ordered_json j;
    j["f0"] = s.f0;
    j["f1"] = s.f1;
    j["f2"] = s.f2;
    if (s.ratio_infinite)
        j["ratio"] = "inf";
    else
        j["ratio"] = s.ratio;
    j["balance"] = s.balance;
    j["method"] = s.method;
    return j.dump(2) + "\n";
}

}  // namespace untangle
