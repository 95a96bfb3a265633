#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "untangle/stats.hpp"
#include "untangle/validate.hpp"

namespace untangle {

enum class Color { blue, red };

// Partial coloring; uncolored edges are inactive at the current level.
using Coloring = std::map<EdgeId, Color>;

inline std::optional<Color> color_of(const Coloring& col, EdgeId e) {
    auto it = col.find(e);
    if (it == col.end()) return std::nullopt;
    return it->second;
}

// Crossing counts by color class of the two strands, ordered
// lexicographically. Crossings with an uncolored strand are excluded.
struct Potential {
    long long bb = 0;
    long long br = 0;
    long long rr = 0;

    bool operator==(const Potential& o) const { return bb == o.bb && br == o.br && rr == o.rr; }
    bool operator<(const Potential& o) const {
        if (bb != o.bb) return bb < o.bb;
        if (br != o.br) return br < o.br;
        return rr < o.rr;
    }
};

inline Potential potential(const Drawing& d, const Coloring& col) {
    Potential p;
    for (const Crossing& x : d.crossings) {
        auto ca = color_of(col, x.a);
        auto cb = color_of(col, x.b);
        if (!ca || !cb) continue;
        if (*ca == Color::blue && *cb == Color::blue)
            ++p.bb;
        else if (*ca == Color::red && *cb == Color::red)
            ++p.rr;
        else
            ++p.br;
    }
    return p;
}

// Half-open interval [lo, hi) of route slots on one edge.
struct Piece {
    EdgeId edge = 0;
    int lo = 0;
    int hi = 0;
};

struct PieceCost {
    long long blue = 0;
    long long red = 0;
    long long uncolored = 0;
};

// Counts the crossings strictly inside a piece by the color of the other
// strand. A self-crossing contributes once per occurrence inside the piece.
inline PieceCost piece_cost(const Drawing& d, const Piece& p, const Coloring& col) {
    if (p.edge < 0 || p.edge >= d.graph.edge_count())
        throw std::invalid_argument("piece on unknown edge");
    if (p.lo < 0 || p.hi < p.lo || p.hi > static_cast<int>(d.routes[p.edge].size()))
        throw std::invalid_argument("piece interval out of range");
    PieceCost cost;
    for (int i = p.lo; i < p.hi; ++i) {
        CrossingId c = d.routes[p.edge][i];
        StrandRef other = d.other_strand(c, p.edge, i);
        auto color = color_of(col, other.edge);
        if (!color)
            ++cost.uncolored;
        else if (*color == Color::blue)
            ++cost.blue;
        else
            ++cost.red;
    }
    return cost;
}

namespace detail {

// Pending insertions keyed by (edge, old slot). Items registered "before"
// a slot are emitted ahead of it, "after" items behind it; a gap between
// two old slots therefore orders after-items first.
struct RouteEdit {
    std::map<std::pair<EdgeId, int>, std::vector<RouteToken>> before;
    std::map<std::pair<EdgeId, int>, std::vector<RouteToken>> after;
    std::vector<char> deleted;

    explicit RouteEdit(std::size_t crossing_count) : deleted(crossing_count, 0) {}

    std::vector<std::vector<RouteToken>> apply(const std::vector<std::vector<RouteToken>>& tokens) {
        std::vector<std::vector<RouteToken>> out(tokens.size());
        for (EdgeId e = 0; e < static_cast<EdgeId>(tokens.size()); ++e) {
            for (int i = 0; i <= static_cast<int>(tokens[e].size()); ++i) {
                if (auto it = before.find({e, i}); it != before.end())
                    out[e].insert(out[e].end(), it->second.begin(), it->second.end());
                if (i == static_cast<int>(tokens[e].size())) break;
                const RouteToken& t = tokens[e][i];
                if (!deleted[t.crossing]) out[e].push_back(t);
                if (auto it = after.find({e, i}); it != after.end())
                    out[e].insert(out[e].end(), it->second.begin(), it->second.end());
            }
        }
        return out;
    }
};

}  // namespace detail

// Removes the first self-crossing loop of edge e: the sub-route between the
// two passages of the first self-crossing is excised together with every
// crossing on it. Pure deletion; no pair multiplicity increases.
inline void remove_self_crossings(Drawing& d, EdgeId e) {
    if (e < 0 || e >= d.graph.edge_count()) throw std::invalid_argument("unknown edge");
    const auto& route = d.routes[e];
    int first = -1;
    for (int i = 0; i < static_cast<int>(route.size()); ++i) {
        const Crossing& x = d.crossings[route[i]];
        if (x.self() && x.a == e) {
            first = i;
            break;
        }
    }
    if (first < 0) throw std::invalid_argument("edge has no self-crossing");
    const Crossing& x = d.crossings[route[first]];
    int partner = x.ai == first ? x.bi : x.ai;

    detail::RouteEdit edit(d.crossings.size());
    for (int i = first; i <= partner; ++i) edit.deleted[route[i]] = 1;
    auto tokens = to_tokens(d);
    rebuild_routes(d, edit.apply(tokens));
}

struct ReduceOutcome {
    EdgeId rerouted = 0;        // the losing edge
    int copied_crossings = 0;   // crossings inherited from the winning piece
    bool extra_crossing = false;
};

// The crossing-pair surgery: picks the first two e-f crossings consecutive
// along e, compares the two enclosed pieces by (blue, red, uncolored) cost
// and redraws the losing piece as a parallel copy of the winning one. The
// winner's crossings are copied onto the rerouted edge next to their
// originals; X and Y disappear; one e-f crossing reappears near the exit
// when the rerouted edge must return to the far side.
inline ReduceOutcome reduce_crossings(Drawing& d, EdgeId e, EdgeId f, const Coloring& col) {
    if (e == f) throw std::invalid_argument("reduce_crossings needs two distinct edges");
    if (e < 0 || f < 0 || e >= d.graph.edge_count() || f >= d.graph.edge_count())
        throw std::invalid_argument("unknown edge");
    if (self_crossing_count(d, e) > 0 || self_crossing_count(d, f) > 0)
        throw std::invalid_argument("reduce_crossings requires self-crossing-free edges");

    // First two e-f crossings along e; nothing of the pair lies between.
    std::vector<int> ef_slots;
    for (int i = 0; i < static_cast<int>(d.routes[e].size()) && ef_slots.size() < 2; ++i) {
        StrandRef other = d.other_strand(d.routes[e][i], e, i);
        if (other.edge == f) ef_slots.push_back(i);
    }
    if (ef_slots.size() < 2) throw std::invalid_argument("edges cross fewer than twice");
    int xi = ef_slots[0], yi = ef_slots[1];
    CrossingId cx = d.routes[e][xi], cy = d.routes[e][yi];
    int xj = d.other_strand(cx, e, xi).index;
    int yj = d.other_strand(cy, e, yi).index;

    Piece piece_e{e, xi + 1, yi};
    Piece piece_f{f, std::min(xj, yj) + 1, std::max(xj, yj)};
    PieceCost ce = piece_cost(d, piece_e, col);
    PieceCost cf = piece_cost(d, piece_f, col);

    bool e_wins;
    if (ce.blue != cf.blue)
        e_wins = ce.blue < cf.blue;
    else if (ce.red != cf.red)
        e_wins = ce.red < cf.red;
    else if (ce.uncolored != cf.uncolored)
        e_wins = ce.uncolored < cf.uncolored;
    else
        e_wins = true;  // final tie: redraw f' along e'

    EdgeId w = e_wins ? e : f;
    EdgeId q = e_wins ? f : e;
    int w_lo, w_hi, q_lo, q_hi;
    if (e_wins) {
        w_lo = xi;
        w_hi = yi;
        q_lo = std::min(xj, yj);
        q_hi = std::max(xj, yj);
    } else {
        w_lo = std::min(xj, yj);
        w_hi = std::max(xj, yj);
        q_lo = xi;
        q_hi = yi;
    }

    // Entry: the crossing q meets first; exit: the other one.
    CrossingId entry_c = d.routes[q][q_lo];
    CrossingId exit_c = d.routes[q][q_hi];
    int entry_w_slot = d.other_strand(entry_c, q, q_lo).index;
    int exit_w_slot = d.other_strand(exit_c, q, q_hi).index;
    bool parallel = entry_w_slot == w_lo;
    int sigma_entry = d.relative_sign(entry_c, w, entry_w_slot);
    int sigma_exit = d.relative_sign(exit_c, w, exit_w_slot);
    bool extra = sigma_entry == sigma_exit;

    detail::RouteEdit edit(d.crossings.size() + (w_hi - w_lo - 1) + 1);
    auto mark_deleted = [&](CrossingId c) { edit.deleted[c] = 1; };
    mark_deleted(cx);
    mark_deleted(cy);
    for (int j = q_lo + 1; j < q_hi; ++j) mark_deleted(d.routes[q][j]);

    // Copies of the winner's interior crossings, inserted next to their
    // originals on the third edge, on the copy's side of w.
    std::vector<RouteToken> copy_q_tokens;
    for (int s = w_lo + 1; s < w_hi; ++s) {
        CrossingId c = d.routes[w][s];
        StrandRef g = d.other_strand(c, w, s);
        int sigma_c = d.relative_sign(c, w, s);

        Crossing rec;
        rec.a = q;
        rec.b = g.edge;
        rec.sign = parallel ? sigma_c : -sigma_c;
        CrossingId nid = static_cast<CrossingId>(d.crossings.size());
        d.crossings.push_back(rec);

        copy_q_tokens.push_back(RouteToken{nid, 0});
        bool before = sigma_entry == sigma_c;  // copy side equals g's arrival side
        if (before)
            edit.before[{g.edge, g.index}].push_back(RouteToken{nid, 1});
        else
            edit.after[{g.edge, g.index}].push_back(RouteToken{nid, 1});
    }
    if (!parallel) std::reverse(copy_q_tokens.begin(), copy_q_tokens.end());

    ReduceOutcome outcome;
    outcome.rerouted = q;
    outcome.copied_crossings = static_cast<int>(copy_q_tokens.size());
    outcome.extra_crossing = extra;

    if (extra) {
        Crossing rec;
        rec.a = q;
        rec.b = w;
        rec.sign = -sigma_entry;  // w relative to q as q returns across
        CrossingId nid = static_cast<CrossingId>(d.crossings.size());
        d.crossings.push_back(rec);
        copy_q_tokens.push_back(RouteToken{nid, 0});
        edit.before[{w, exit_w_slot}].push_back(RouteToken{nid, 1});
    }
    auto& block = edit.before[{q, q_lo}];
    block.insert(block.end(), copy_q_tokens.begin(), copy_q_tokens.end());

    auto tokens = to_tokens(d);
    rebuild_routes(d, edit.apply(tokens));
    return outcome;
}

struct StepLogEntry {
    int step = 0;
    std::string kind;          // "remove_self" | "reduce"
    std::vector<EdgeId> edges;
    Potential before;
    Potential after;
    long long crossings_total = 0;
};

struct NormalizeOptions {
    std::function<void(const StepLogEntry&)> log;
    // Debug hook invoked after every surgery step.
    std::function<void(const Drawing&, const StepLogEntry&)> on_step;
};

// Applies remove_self_crossings and reduce_crossings until every active
// pair crosses at most once and no active edge self-crosses. Self-crossing
// removal has priority; scheduling is smallest ids first. The potential
// strictly lexicographically decreases with every step, which bounds the
// loop.
inline int normalize(Drawing& d, const Coloring& col, const EdgeSet& active,
                     const NormalizeOptions& opt = {}) {
    auto mask = detail::edge_mask(d, active);
    {
        auto [empty, crossing] = classify_edges(d, active);
        for (EdgeId e : crossing)
            if (!color_of(col, e))
                throw std::invalid_argument("active crossing edge " + std::to_string(e) +
                                            " is uncolored");
    }
    std::vector<char> was_empty(d.graph.edge_count(), 0);
    for (EdgeId e = 0; e < d.graph.edge_count(); ++e)
        if (d.routes[e].empty()) was_empty[e] = 1;

    int steps = 0;
    while (true) {
        EdgeId self_edge = -1;
        std::map<std::pair<EdgeId, EdgeId>, int> mult;
        for (const Crossing& x : d.crossings) {
            if (!mask[x.a] || !mask[x.b]) continue;
            if (x.self()) {
                if (self_edge < 0 || x.a < self_edge) self_edge = x.a;
            } else {
                auto key = std::minmax(x.a, x.b);
                ++mult[{key.first, key.second}];
            }
        }
        StepLogEntry entry;
        entry.step = steps;
        entry.before = potential(d, col);
        if (self_edge >= 0) {
            entry.kind = "remove_self";
            entry.edges = {self_edge};
            remove_self_crossings(d, self_edge);
        } else {
            std::pair<EdgeId, EdgeId> pick{-1, -1};
            for (const auto& [pair, count] : mult)
                if (count >= 2) {
                    pick = pair;
                    break;
                }
            if (pick.first < 0) break;
            entry.kind = "reduce";
            entry.edges = {pick.first, pick.second};
            reduce_crossings(d, pick.first, pick.second, col);
        }
        entry.after = potential(d, col);
        entry.crossings_total = d.crossing_count();
        if (!(entry.after < entry.before))
            throw std::logic_error("potential failed to decrease at step " +
                                   std::to_string(steps));
        if (opt.log) opt.log(entry);
        if (opt.on_step) opt.on_step(d, entry);
        ++steps;
    }

    for (EdgeId e = 0; e < d.graph.edge_count(); ++e)
        if (was_empty[e] && !d.routes[e].empty())
            throw std::logic_error("empty edge " + std::to_string(e) + " gained a crossing");
    return steps;
}

}  // namespace untangle
