#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "untangle/separator.hpp"
#include "untangle/transforms.hpp"

namespace untangle {

// Accounting for one recursion level.
struct LevelRecord {
    int depth = 0;
    long long l = 0, k = 0;
    long long l0 = 0, l1 = 0, l2 = 0;
    long long k1 = 0, k2 = 0;
    double ratio = 0.0;        // l0 / sqrt(k), 0 when k = 0
    std::string method;        // "exact" | "heuristic" | "base"
    int steps = 0;             // normalize steps
    long long bb_after = 0;    // blue-blue crossings after normalize
    long long brrr_after = 0;  // blue-red + red-red crossings after normalize
    long long f12_entry = 0;   // F1 x F2 crossings at separation time
    long long f12_merge = 0;   // ... after both recursive calls
    long long f12_final = 0;   // ... after normalize
    long long within_f1 = 0;   // crossings inside F1 at merge time
    long long within_f2 = 0;
};

struct UntangleReport {
    long long k = 0, l = 0;               // top-level counts fed to the recursion
    long long input_crossings = 0;        // crossing points of the validated input
    long long prepass_removed = 0;        // crossing points removed with input self-crossings
    std::vector<LevelRecord> levels;
    double c_hat = 0.0;                   // max per-level ratio
    long long final_crossings = 0;
    double bound_lemma = 0.0;             // 4 c k^(3/2) log2 l
    double bound_theorem = 0.0;           // 8 c k^(3/2) log2 k
    bool lemma_satisfied = true;
    bool theorem_applicable = false;      // k >= 2
    bool theorem_satisfied = true;
    bool levels_ok = true;                // all per-level arithmetic checks
};

struct UntangleOptions {
    enum class Debug { off, level, step };
    int exact_cap = 14;
    int restarts = 8;
    std::uint64_t seed = 0;
    Debug debug = Debug::off;
    std::function<void(const StepLogEntry&)> log;
    // Observer for every string graph and separator the recursion uses.
    std::function<void(const StringGraph&, const SeparatorResult&)> on_separator;
};

// 4 c k^(3/2) log2 l and 8 c k^(3/2) log2 k. A crossing pair needs two
// edges, so k >= 1 forces l >= 2.
inline std::pair<double, double> theorem_bound(long long k, long long l, double c_hat) {
    if (k < 1 || l < 2 || c_hat < 0)
        throw std::invalid_argument("theorem_bound needs k >= 1, l >= 2, c >= 0");
    double k32 = std::pow(static_cast<double>(k), 1.5);
    double lemma = 4.0 * c_hat * k32 * std::log2(static_cast<double>(l));
    double theorem = 8.0 * c_hat * k32 * std::log2(static_cast<double>(k));
    if (l <= 2 * k && k >= 2 && c_hat > 0) {
        bool strict_case = !(k == 2 && l == 4);  // l = k^2 makes the two sides equal
        if (lemma > theorem || (strict_case && lemma >= theorem))
            throw std::logic_error("bound chain violated");
    }
    return {lemma, theorem};
}

namespace detail {

inline long long count_between(const Drawing& d, const std::vector<char>& in_a,
                               const std::vector<char>& in_b) {
    long long count = 0;
    for (const Crossing& x : d.crossings)
        if ((in_a[x.a] && in_b[x.b]) || (in_a[x.b] && in_b[x.a])) ++count;
    return count;
}

inline std::vector<char> set_mask(const Drawing& d, const EdgeSet& edges) {
    std::vector<char> mask(d.graph.edge_count(), 0);
    for (EdgeId e : edges) mask[e] = 1;
    return mask;
}

struct UntangleContext {
    const UntangleOptions& opt;
    std::vector<LevelRecord>& levels;
    std::uint64_t level_counter = 0;
    bool ok = true;
};

inline void check_state(const Drawing& d, const char* when) {
    ValidationReport rep = validate_drawing(d);
    if (!rep.ok())
        throw std::logic_error(std::string("invalid drawing ") + when + ": " +
                               rep.violations[0].code);
}

inline void untangle_rec(Drawing& d, const EdgeSet& active, int depth, UntangleContext& ctx) {
    auto [empty_active, crossing] = classify_edges(d, active);
    long long l = static_cast<long long>(crossing.size());
    if (l == 0) return;
    long long k = stats(d, active).crossing_pairs;

    LevelRecord rec;
    rec.depth = depth;
    rec.l = l;
    rec.k = k;

    EdgeSet f0, f1, f2;
    if (l <= 2) {
        rec.method = "base";
        if (k >= 1) {
            f0 = {crossing[0]};
            f1 = {crossing[1]};
        } else {
            // Self-crossing-only edges; normalize below clears them.
            f0 = crossing;
        }
    } else {
        StringGraph h = string_graph(d, active);
        SeparatorResult sep;
        if (h.n() <= ctx.opt.exact_cap) {
            sep = exact_separator(h, ctx.opt.exact_cap);
        } else {
            std::uint64_t salt = SplitMix64(ctx.opt.seed + ++ctx.level_counter).next();
            sep = heuristic_separator(h, salt, ctx.opt.restarts);
        }
        auto violations = verify_separator(h, sep);
        if (!violations.empty())
            throw std::logic_error("separator invalid: " + violations[0].code);
        if (ctx.opt.on_separator) ctx.opt.on_separator(h, sep);
        f0 = sep.f0;
        f1 = sep.f1;
        f2 = sep.f2;
        rec.method = sep.method;
    }
    rec.l0 = static_cast<long long>(f0.size());
    rec.l1 = static_cast<long long>(f1.size());
    rec.l2 = static_cast<long long>(f2.size());
    rec.ratio = k >= 1 ? static_cast<double>(rec.l0) / std::sqrt(static_cast<double>(k)) : 0.0;

    auto mask1 = set_mask(d, f1);
    auto mask2 = set_mask(d, f2);
    rec.f12_entry = count_between(d, mask1, mask2);

    EdgeSet active1 = empty_active;
    active1.insert(active1.end(), f1.begin(), f1.end());
    EdgeSet active2 = empty_active;
    active2.insert(active2.end(), f2.begin(), f2.end());

    rec.k1 = stats(d, active1).crossing_pairs;
    untangle_rec(d, active1, depth + 1, ctx);
    rec.k2 = stats(d, active2).crossing_pairs;
    untangle_rec(d, active2, depth + 1, ctx);

    rec.f12_merge = count_between(d, mask1, mask2);
    rec.within_f1 = stats(d, f1).crossing_points;
    rec.within_f2 = stats(d, f2).crossing_points;

    Coloring col;
    for (EdgeId e : f1) col[e] = Color::blue;
    for (EdgeId e : f2) col[e] = Color::blue;
    for (EdgeId e : f0) col[e] = Color::red;

    NormalizeOptions nopt;
    nopt.log = ctx.opt.log;
    if (ctx.opt.debug == UntangleOptions::Debug::step)
        nopt.on_step = [&](const Drawing& state, const StepLogEntry& entry) {
            check_state(state, ("after step " + std::to_string(entry.step)).c_str());
        };
    rec.steps = normalize(d, col, active, nopt);

    Potential p = potential(d, col);
    rec.bb_after = p.bb;
    rec.brrr_after = p.br + p.rr;
    rec.f12_final = count_between(d, mask1, mask2);
    if (ctx.opt.debug != UntangleOptions::Debug::off)
        check_state(d, "after level normalize");
    ctx.levels.push_back(rec);
}

}  // namespace detail

// The full redrawing pipeline: validate, strip input self-crossings,
// recurse on separator parts, merge and normalize per level, and account
// for the crossing bound with the measured separator ratio.
inline UntangleReport untangle(Drawing& d, const UntangleOptions& opt = {}) {
    ValidationReport rep = validate_drawing(d);
    if (!rep.ok())
        throw std::invalid_argument("input drawing invalid: " + rep.violations[0].code);

    UntangleReport report;
    EdgeSet everything = all_edges(d);
    report.input_crossings = stats(d, everything).crossing_points;

    // Input self-crossings are removed up front: a drawing with the same
    // pair count and no self-crossings always exists, and the per-level
    // arithmetic needs every crossing edge to cross another edge.
    while (true) {
        EdgeId pick = -1;
        for (const Crossing& x : d.crossings)
            if (x.self() && (pick < 0 || x.a < pick)) pick = x.a;
        if (pick < 0) break;
        remove_self_crossings(d, pick);
    }
    DrawingStats top = stats(d, everything);
    report.prepass_removed = report.input_crossings - top.crossing_points;
    report.k = top.crossing_pairs;
    report.l = top.crossing_edges;

    std::vector<char> was_empty(d.graph.edge_count(), 0);
    for (EdgeId e = 0; e < d.graph.edge_count(); ++e)
        if (d.routes[e].empty()) was_empty[e] = 1;

    detail::UntangleContext ctx{opt, report.levels};
    EdgeSet top_active = classify_edges(d, everything).second;  // all crossing edges
    detail::untangle_rec(d, top_active, 0, ctx);

    report.final_crossings = stats(d, everything).crossing_points;
    for (const LevelRecord& lev : report.levels) report.c_hat = std::max(report.c_hat, lev.ratio);

    for (EdgeId e = 0; e < d.graph.edge_count(); ++e)
        if (was_empty[e] && !d.routes[e].empty())
            throw std::logic_error("empty edge gained a crossing during untangle");

    const double eps = 1e-9;
    if (report.k >= 1) {
        auto [lemma, theorem] = theorem_bound(report.k, report.l, report.c_hat);
        report.bound_lemma = lemma;
        report.bound_theorem = theorem;
        report.lemma_satisfied = static_cast<double>(report.final_crossings) <= lemma + eps;
        report.theorem_applicable = report.k >= 2;
        if (report.theorem_applicable) {
            bool equality_corner = report.k == 2 && report.l == 4;
            report.theorem_satisfied =
                equality_corner
                    ? static_cast<double>(report.final_crossings) <= theorem + eps
                    : static_cast<double>(report.final_crossings) < theorem - eps ||
                          report.final_crossings == 0;
        }
    } else {
        report.lemma_satisfied = report.final_crossings == 0;
        report.theorem_applicable = false;
    }

    // Per-level arithmetic of the bound chain, with the measured ratio.
    auto log_term = [](long long kk, long long ll) {
        if (ll < 2 || kk < 1) return 0.0;
        return std::pow(static_cast<double>(kk), 1.5) * std::log2(static_cast<double>(ll));
    };
    for (const LevelRecord& lev : report.levels) {
        bool ok = lev.l0 + lev.l1 + lev.l2 == lev.l;
        ok = ok && lev.k1 + lev.k2 <= lev.k;
        ok = ok && std::max(lev.l1, lev.l2) <= (2 * lev.l) / 3;
        ok = ok && lev.f12_entry == 0 && lev.f12_merge == 0;
        ok = ok && lev.brrr_after <= lev.l0 * lev.l;
        ok = ok && static_cast<double>(lev.bb_after) <=
                       4.0 * report.c_hat * (log_term(lev.k1, lev.l1) + log_term(lev.k2, lev.l2)) +
                           eps;
        if (lev.k >= 1 && lev.l <= 2 * lev.k)
            ok = ok && static_cast<double>(lev.bb_after + lev.brrr_after) <=
                           4.0 * report.c_hat * log_term(lev.k, lev.l) + eps;
        if (!ok) report.levels_ok = false;
    }
    return report;
}

inline std::string untangle_report_json(const UntangleReport& r) {
    nlohmann::ordered_json j;
    j["k"] = r.k;
    j["l"] = r.l;
    j["input_crossings"] = r.input_crossings;
    j["prepass_removed"] = r.prepass_removed;
    j["c_hat"] = r.c_hat;
    j["final_crossings"] = r.final_crossings;
    j["bound_lemma"] = r.bound_lemma;
    j["bound_theorem"] = r.bound_theorem;
    j["lemma_satisfied"] = r.lemma_satisfied;
    j["theorem_applicable"] = r.theorem_applicable;
    j["theorem_satisfied"] = r.theorem_satisfied;
    j["levels_ok"] = r.levels_ok;
    j["levels"] = nlohmann::ordered_json::array();
    for (const LevelRecord& lev : r.levels) {
        j["levels"].push_back({{"depth", lev.depth},
                               {"l", lev.l},
                               {"k", lev.k},
                               {"l0", lev.l0},
                               {"l1", lev.l1},
                               {"l2", lev.l2},
                               {"k1", lev.k1},
                               {"k2", lev.k2},
                               {"ratio", lev.ratio},
                               {"method", lev.method},
                               {"steps", lev.steps},
                               {"bb_after", lev.bb_after},
                               {"br_rr_after", lev.brrr_after},
                               {"f12_entry", lev.f12_entry},
                               {"f12_merge", lev.f12_merge},
                               {"f12_final", lev.f12_final},
                               {"within_f1", lev.within_f1},
                               {"within_f2", lev.within_f2}});
    }
    return j.dump(2) + "\n";
}

inline std::string step_log_json(const StepLogEntry& e) {
    nlohmann::ordered_json j;
    j["step"] = e.step;
    j["kind"] = e.kind;
    j["edges"] = e.edges;
    j["potential_before"] = {e.before.bb, e.before.br, e.before.rr};
    j["potential_after"] = {e.after.bb, e.after.br, e.after.rr};
    j["crossings_total"] = e.crossings_total;
    return j.dump();
}

}  // namespace untangle
