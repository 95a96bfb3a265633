#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "untangle/cdraw_io.hpp"
#include "untangle/gen.hpp"
#include "untangle/ingest.hpp"
#include "untangle/render.hpp"
#include "untangle/separator.hpp"
#include "untangle/stats.hpp"
#include "untangle/transforms.hpp"
#include "untangle/untangler.hpp"
#include "untangle/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

struct CliError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{kExitUsage, "cannot open " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError{kExitUsage, "cannot write " + path};
    out << data;
}

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Loads either format; geometric files are ingested.
untangle::Drawing load_drawing(const std::string& path) {
    std::string text = read_file(path);
    try {
        if (has_suffix(path, ".gdraw")) return untangle::ingest(untangle::parse_gdraw(text));
        return untangle::parse_cdraw(text);
    } catch (const untangle::DegeneracyError& ex) {
        throw CliError{kExitViolation, std::string("degenerate input: ") + ex.what()};
    } catch (const untangle::ParseError& ex) {
        throw CliError{kExitUsage, std::string("parse error: ") + ex.what()};
    }
}

void require_valid(const untangle::Drawing& d, bool json) {
    auto rep = untangle::validate_drawing(d);
    if (rep.ok()) return;
    if (json) {
        nlohmann::ordered_json j;
        j["ok"] = false;
        j["violations"] = nlohmann::ordered_json::array();
        for (const auto& v : rep.violations) j["violations"].push_back({{"code", v.code}, {"detail", v.detail}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& v : rep.violations)
            std::cout << "violation: " << v.code << " (" << v.detail << ")\n";
    }
    throw CliError{kExitViolation, "drawing failed validation"};
}

std::uint64_t seed_fallback(const CLI::Option* opt, std::uint64_t given) {
    if (opt->count() > 0) return given;
    if (const char* env = std::getenv("UNTANGLE_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw CliError{kExitUsage, "UNTANGLE_SEED is not a number"};
        }
    }
    return given;
}

std::ofstream open_log(const std::string& path) {
    std::ofstream log(path, std::ios::binary);
    if (!log) throw CliError{kExitUsage, "cannot write " + path};
    return log;
}

void require_distinct(const std::string& in, const std::string& out) {
    if (!out.empty() && in == out)
        throw CliError{kExitUsage, "input and output paths must differ"};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"untangle: crossing-surgery toolkit for graph drawings"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random geometric drawing");
    std::string family;
    std::vector<std::string> family_args;
    std::uint64_t gen_seed = 0;
    int detour = 0;
    bool convex = false;
    bool gen_json = false;
    std::string gen_out;
    gen->add_option("family", family, "complete | bipartite | random")->required();
    gen->add_option("args", family_args, "family parameters (n | a b | n p)");
    gen->add_option("--seed", gen_seed, "PRNG seed");
    gen->add_option("--detour", detour, "max random via points per edge");
    gen->add_flag("--convex", convex, "place vertices in convex position");
    gen->add_flag("--json", gen_json, "machine-readable summary");
    gen->add_option("-o,--out", gen_out, "output .gdraw path")->required();

    // validate / stats / separator / normalize / untangle / render share args
    std::string in_path, out_path, report_path, log_path, classes_path;
    bool json = false, force_exact = false;
    int exact_cap = 14, restarts = 8;
    std::uint64_t seed = 0;
    std::string debug_invariants = "off";

    auto* validate = app.add_subcommand("validate", "check drawing invariants");
    validate->add_option("file", in_path, ".cdraw or .gdraw input")->required();
    validate->add_flag("--json", json);

    auto* stats_cmd = app.add_subcommand("stats", "crossing statistics");
    stats_cmd->add_option("file", in_path)->required();
    stats_cmd->add_flag("--json", json);

    auto* sep_cmd = app.add_subcommand("separator", "balanced separator of the crossing-edge string graph");
    sep_cmd->add_option("file", in_path)->required();
    sep_cmd->add_flag("--exact", force_exact, "require the exact algorithm");
    sep_cmd->add_option("--exact-cap", exact_cap, "vertex cap for the exact search");
    sep_cmd->add_option("--restarts", restarts, "heuristic restarts");
    auto* sep_seed_opt = sep_cmd->add_option("--seed", seed);
    sep_cmd->add_flag("--json", json);

    auto* norm_cmd = app.add_subcommand("normalize", "reduce every pair to at most one crossing");
    norm_cmd->add_option("file", in_path)->required();
    norm_cmd->add_option("-o,--out", out_path, "output .cdraw")->required();
    norm_cmd->add_option("--log", log_path, "step log (JSON lines)");
    norm_cmd->add_flag("--json", json);

    auto* unt_cmd = app.add_subcommand("untangle", "full separator-recursion redraw");
    unt_cmd->add_option("file", in_path)->required();
    unt_cmd->add_option("-o,--out", out_path, "output .cdraw")->required();
    unt_cmd->add_option("--report", report_path, "write the JSON report here");
    unt_cmd->add_option("--exact-cap", exact_cap);
    unt_cmd->add_option("--restarts", restarts);
    auto* unt_seed_opt = unt_cmd->add_option("--seed", seed);
    unt_cmd->add_option("--debug-invariants", debug_invariants)
        ->check(CLI::IsMember({"off", "level", "step"}));
    unt_cmd->add_option("--log", log_path);
    unt_cmd->add_flag("--json", json);

    auto* render_cmd = app.add_subcommand("render", "SVG picture");
    render_cmd->add_option("file", in_path)->required();
    render_cmd->add_option("-o,--out", out_path, "output .svg")->required();
    render_cmd->add_option("--classes", classes_path, "JSON map edge id -> blue|red|empty");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen) {
            untangle::GenOptions opt;
            opt.seed = seed_fallback(gen->get_option("--seed"), gen_seed);
            opt.detour = detour;
            opt.convex = convex;
            if (family == "complete") {
                if (family_args.size() != 1) throw CliError{kExitUsage, "gen complete needs n"};
                opt.family = untangle::GraphFamily::complete;
                opt.n = std::stoi(family_args[0]);
            } else if (family == "bipartite") {
                if (family_args.size() != 2) throw CliError{kExitUsage, "gen bipartite needs a b"};
                opt.family = untangle::GraphFamily::bipartite;
                opt.a = std::stoi(family_args[0]);
                opt.b = std::stoi(family_args[1]);
            } else if (family == "random") {
                if (family_args.size() != 2) throw CliError{kExitUsage, "gen random needs n p"};
                opt.family = untangle::GraphFamily::random_gnp;
                opt.n = std::stoi(family_args[0]);
                opt.p = std::stod(family_args[1]);
            } else {
                throw CliError{kExitUsage, "unknown family " + family};
            }
            untangle::GeoDrawing g;
            try {
                g = untangle::gen_random(opt);
            } catch (const std::invalid_argument& ex) {
                throw CliError{kExitUsage, ex.what()};
            }
            write_file(gen_out, untangle::serialize_gdraw(g));
            if (gen_json) {
                nlohmann::ordered_json j{{"n", g.vertices.size()},
                                         {"m", g.edges.size()},
                                         {"seed", opt.seed},
                                         {"out", gen_out}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "n=" << g.vertices.size() << " m=" << g.edges.size()
                          << " seed=" << opt.seed << " -> " << gen_out << "\n";
            }
            return kExitOk;
        }

        if (*validate) {
            untangle::Drawing d = load_drawing(in_path);
            require_valid(d, json);
            if (json)
                std::cout << "{\n  \"ok\": true\n}\n";
            else
                std::cout << "ok\n";
            return kExitOk;
        }

        if (*stats_cmd) {
            untangle::Drawing d = load_drawing(in_path);
            require_valid(d, json);
            auto st = untangle::stats(d, untangle::all_edges(d));
            if (json) {
                nlohmann::ordered_json j{{"crossings", st.crossing_points},
                                         {"k", st.crossing_pairs},
                                         {"l", st.crossing_edges}};
                nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
                for (const auto& [pair, count] : st.pair_multiplicity)
                    pairs.push_back({{"e", pair.first}, {"f", pair.second}, {"count", count}});
                j["pairs"] = pairs;
                nlohmann::ordered_json selfs = nlohmann::ordered_json::array();
                for (const auto& [e, count] : st.self_crossings)
                    selfs.push_back({{"edge", e}, {"count", count}});
                j["self_crossings"] = selfs;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "crossings=" << st.crossing_points << " k=" << st.crossing_pairs
                          << " l=" << st.crossing_edges << "\n";
                for (const auto& [pair, count] : st.pair_multiplicity)
                    if (count > 1)
                        std::cout << "  pair " << pair.first << "-" << pair.second << " crosses "
                                  << count << " times\n";
                for (const auto& [e, count] : st.self_crossings)
                    std::cout << "  edge " << e << " self-crosses " << count << " times\n";
            }
            return kExitOk;
        }

        if (*sep_cmd) {
            untangle::Drawing d = load_drawing(in_path);
            require_valid(d, json);
            auto h = untangle::string_graph(d, untangle::all_edges(d));
            untangle::SeparatorResult result;
            if (force_exact && h.n() > exact_cap)
                throw CliError{kExitUsage, "string graph has " + std::to_string(h.n()) +
                                               " vertices, above the exact cap " +
                                               std::to_string(exact_cap)};
            if (force_exact || h.n() <= exact_cap) {
                try {
                    result = untangle::exact_separator(h, exact_cap);
                } catch (const std::invalid_argument& ex) {
                    throw CliError{kExitUsage, ex.what()};
                }
            } else {
                result = untangle::heuristic_separator(
                    h, seed_fallback(sep_seed_opt, seed), restarts);
            }
            auto violations = untangle::verify_separator(h, result);
            if (!violations.empty()) {
                std::cout << "violation: " << violations[0].code << "\n";
                return kExitViolation;
            }
            if (json) {
                std::cout << untangle::separator_json(result);
            } else {
                auto show = [](const char* name, const std::vector<untangle::EdgeId>& part) {
                    std::cout << name << " = {";
                    for (std::size_t i = 0; i < part.size(); ++i)
                        std::cout << (i ? ", " : "") << part[i];
                    std::cout << "}\n";
                };
                std::cout << "H: " << h.n() << " vertices, " << h.m() << " edges ("
                          << result.method << ")\n";
                show("F0", result.f0);
                show("F1", result.f1);
                show("F2", result.f2);
                std::cout << "ratio=" << (result.ratio_infinite ? std::string("inf")
                                                                : std::to_string(result.ratio))
                          << " balance=" << result.balance << "\n";
            }
            return kExitOk;
        }

        if (*norm_cmd) {
            require_distinct(in_path, out_path);
            untangle::Drawing d = load_drawing(in_path);
            require_valid(d, json);
            auto before = untangle::stats(d, untangle::all_edges(d));
            // Plain simplification run: every crossing edge blue.
            untangle::Coloring col;
            for (untangle::EdgeId e : untangle::classify_edges(d, untangle::all_edges(d)).second)
                col[e] = untangle::Color::blue;
            untangle::NormalizeOptions nopt;
            std::ofstream log;
            if (!log_path.empty()) {
                log = open_log(log_path);
                nopt.log = [&](const untangle::StepLogEntry& e) {
                    log << untangle::step_log_json(e) << "\n";
                };
            }
            int steps = untangle::normalize(d, col, untangle::all_edges(d), nopt);
            write_file(out_path, untangle::serialize_cdraw(d));
            auto after = untangle::stats(d, untangle::all_edges(d));
            if (json) {
                nlohmann::ordered_json j{{"steps", steps},
                                         {"crossings_before", before.crossing_points},
                                         {"crossings_after", after.crossing_points},
                                         {"out", out_path}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "steps=" << steps << " crossings " << before.crossing_points
                          << " -> " << after.crossing_points << " (" << out_path << ")\n";
            }
            return kExitOk;
        }

        if (*unt_cmd) {
            require_distinct(in_path, out_path);
            require_distinct(in_path, report_path);
            untangle::Drawing d = load_drawing(in_path);
            require_valid(d, json);
            untangle::UntangleOptions opt;
            opt.exact_cap = exact_cap;
            opt.restarts = restarts;
            opt.seed = seed_fallback(unt_seed_opt, seed);
            if (debug_invariants == "level") opt.debug = untangle::UntangleOptions::Debug::level;
            if (debug_invariants == "step") opt.debug = untangle::UntangleOptions::Debug::step;
            std::ofstream log;
            if (!log_path.empty()) {
                log = open_log(log_path);
                opt.log = [&](const untangle::StepLogEntry& e) {
                    log << untangle::step_log_json(e) << "\n";
                };
            }
            untangle::UntangleReport report = untangle::untangle(d, opt);
            write_file(out_path, untangle::serialize_cdraw(d));
            std::string report_text = untangle::untangle_report_json(report);
            if (!report_path.empty()) write_file(report_path, report_text);
            if (json) {
                std::cout << report_text;
            } else {
                std::cout << "k=" << report.k << " l=" << report.l << " crossings "
                          << report.input_crossings << " -> " << report.final_crossings
                          << " (c_hat=" << report.c_hat << ", bound=" << report.bound_lemma
                          << ")\n";
            }
            auto post = untangle::validate_drawing(d);
            bool simple = true;
            auto st = untangle::stats(d, untangle::all_edges(d));
            for (const auto& [pair, count] : st.pair_multiplicity)
                if (count > 1) simple = false;
            if (!st.self_crossings.empty()) simple = false;
            if (!post.ok() || !simple || !report.levels_ok) return kExitViolation;
            if (!report.lemma_satisfied ||
                (report.theorem_applicable && !report.theorem_satisfied))
                return kExitBound;
            return kExitOk;
        }

        if (*render_cmd) {
            require_distinct(in_path, out_path);
            untangle::RenderOptions ropt;
            if (!classes_path.empty()) {
                auto j = nlohmann::json::parse(read_file(classes_path));
                for (auto it = j.begin(); it != j.end(); ++it)
                    ropt.classes[std::stoi(it.key())] = it.value().get<std::string>();
            }
            std::string svg;
            if (has_suffix(in_path, ".gdraw")) {
                auto g = untangle::parse_gdraw(read_file(in_path));
                try {
                    svg = untangle::render_svg(g, ropt);
                } catch (const untangle::DegeneracyError& ex) {
                    throw CliError{kExitViolation, std::string("degenerate input: ") + ex.what()};
                }
            } else {
                untangle::Drawing d = load_drawing(in_path);
                try {
                    svg = untangle::render_svg(d, ropt);
                } catch (const std::invalid_argument& ex) {
                    throw CliError{kExitViolation, ex.what()};
                }
            }
            write_file(out_path, svg);
            std::cout << "wrote " << out_path << "\n";
            return kExitOk;
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const untangle::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
