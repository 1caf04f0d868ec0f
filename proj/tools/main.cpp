/*
 * Copyright 2026 The cdiffusion authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end for the competitive diffusion game library. Talks to
// the shared library exclusively through the C interface.
//
// Exit codes: 0 = success / claim holds, 1 = claim fails, 2 = usage error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cdiffusion.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

struct GraphDeleter {
    void operator()(cdg_graph* g) const { cdg_graph_free(g); }
};
struct OutcomeDeleter {
    void operator()(cdg_outcome* o) const { cdg_outcome_free(o); }
};
using GraphPtr = std::unique_ptr<cdg_graph, GraphDeleter>;
using OutcomePtr = std::unique_ptr<cdg_outcome, OutcomeDeleter>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    cdg_string_free(s);
    return out;
}

[[noreturn]] void die(const std::string& context, int code = kExitUsage) {
    std::cerr << "error: " << context;
    const char* detail = cdg_last_error();
    if (detail && *detail) std::cerr << ": " << detail;
    std::cerr << "\n";
    std::exit(code);
}

GraphPtr load_graph(const std::string& spec) {
    cdg_graph* g = nullptr;
    if (cdg_graph_from_spec(spec.c_str(), &g) != CDG_OK) die("cannot build graph '" + spec + "'");
    return GraphPtr(g);
}

std::vector<int32_t> parse_profile(const std::string& spec, const cdg_graph* g,
                                   const std::string& list) {
    std::vector<int32_t> profile;
    std::stringstream ss(list);
    std::string token;
    while (std::getline(ss, token, ',')) {
        int32_t id = 0;
        if (cdg_parse_vertex(spec.c_str(), g, token.c_str(), &id) != CDG_OK)
            die("bad vertex '" + token + "' for " + spec);
        profile.push_back(id);
    }
    if (profile.empty()) die("empty profile");
    return profile;
}

std::string label(const std::string& spec, int32_t id) {
    char* text = nullptr;
    if (cdg_format_vertex(spec.c_str(), id, &text) != CDG_OK) return std::to_string(id);
    return take_string(text);
}

std::vector<std::string> labels(const std::string& spec, const std::vector<int32_t>& ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (auto id : ids) out.push_back(label(spec, id));
    return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep = ",") {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) die("cannot write " + path);
    out << content;
}

uint64_t env_budget() {
    const char* raw = std::getenv("DIFFUSION_BUDGET");
    if (!raw || !*raw) return 0;
    return std::strtoull(raw, nullptr, 10);
}

cdg_search_options make_search_options(int threads, uint64_t budget, bool force) {
    cdg_search_options opts{};
    opts.threads = threads;
    opts.budget = budget != 0 ? budget : env_budget();
    opts.force = force ? 1 : 0;
    return opts;
}

// --- subcommand state ---------------------------------------------------------

struct CommonArgs {
    std::string spec;
    std::string profile;
    bool json = false;
    int threads = 0;
    uint64_t budget = 0;
    bool force = false;
};

int run_show(const CommonArgs& a, const std::string& dot_path, bool emit_graph6) {
    GraphPtr g = load_graph(a.spec);
    if (!dot_path.empty()) {
        char* dot = nullptr;
        if (cdg_graph_to_dot(g.get(), nullptr, &dot) != CDG_OK) die("dot export failed");
        write_file(dot_path, take_string(dot));
    }
    if (emit_graph6) {
        char* g6 = nullptr;
        if (cdg_graph_to_graph6(g.get(), &g6) != CDG_OK) die("graph6 export failed");
        std::cout << take_string(g6) << "\n";
        return kExitOk;
    }
    if (a.json) {
        nlohmann::ordered_json j;
        j["graph"] = a.spec;
        j["vertices"] = cdg_graph_vertex_count(g.get());
        j["edges"] = cdg_graph_edge_count(g.get());
        std::cout << j.dump() << "\n";
    } else {
        std::cout << a.spec << ": " << cdg_graph_vertex_count(g.get()) << " vertices, "
                  << cdg_graph_edge_count(g.get()) << " edges\n";
    }
    return kExitOk;
}

int run_simulate(const CommonArgs& a, bool trace, const std::string& trace_path,
                 const std::string& dot_path) {
    GraphPtr g = load_graph(a.spec);
    auto profile = parse_profile(a.spec, g.get(), a.profile);
    bool need_trace = trace || !trace_path.empty();
    cdg_outcome* raw = nullptr;
    if (cdg_propagate(g.get(), profile.data(), static_cast<int32_t>(profile.size()),
                      need_trace ? 1 : 0, &raw) != CDG_OK)
        die("propagation failed");
    OutcomePtr outcome(raw);

    int32_t n = cdg_graph_vertex_count(g.get());
    std::vector<int32_t> states(n);
    int removed = 0, uncolored = 0;
    for (int32_t v = 0; v < n; ++v) {
        states[v] = cdg_outcome_state(outcome.get(), v);
        if (states[v] == -2) ++removed;
        if (states[v] == -1) ++uncolored;
    }
    std::vector<int64_t> payoffs(profile.size());
    for (size_t i = 0; i < profile.size(); ++i)
        payoffs[i] = cdg_outcome_payoff(outcome.get(), static_cast<int32_t>(i));

    if (a.json) {
        nlohmann::ordered_json j;
        j["graph"] = a.spec;
        j["k"] = profile.size();
        j["profile"] = labels(a.spec, profile);
        j["payoffs"] = payoffs;
        j["steps"] = cdg_outcome_steps(outcome.get());
        j["removed"] = removed;
        j["uncolored"] = uncolored;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "payoffs:";
        for (auto p : payoffs) std::cout << " " << p;
        std::cout << "\nsteps: " << cdg_outcome_steps(outcome.get()) << "\ncolored: "
                  << n - removed - uncolored << "/" << n << " (removed " << removed
                  << ", uncolored " << uncolored << ")\n";
    }
    if (need_trace) {
        char* tr = nullptr;
        if (cdg_outcome_trace_json(outcome.get(), &tr) != CDG_OK) die("trace export failed");
        std::string text = take_string(tr);
        if (!trace_path.empty())
            write_file(trace_path, text + "\n");
        else
            std::cout << text << "\n";
    }
    if (!dot_path.empty()) {
        char* dot = nullptr;
        if (cdg_graph_to_dot(g.get(), states.data(), &dot) != CDG_OK) die("dot export failed");
        write_file(dot_path, take_string(dot));
    }
    return kExitOk;
}

int run_verify(const CommonArgs& a) {
    GraphPtr g = load_graph(a.spec);
    auto profile = parse_profile(a.spec, g.get(), a.profile);
    cdg_verify_report report{};
    std::vector<int64_t> payoffs(profile.size());
    if (cdg_verify(g.get(), profile.data(), static_cast<int32_t>(profile.size()), &report,
                   payoffs.data()) != CDG_OK)
        die("verify failed");

    if (a.json) {
        nlohmann::ordered_json j;
        j["graph"] = a.spec;
        j["k"] = profile.size();
        j["verdict"] = report.is_nash ? "nash" : "not-nash";
        j["profile"] = labels(a.spec, profile);
        j["payoffs"] = payoffs;
        if (!report.is_nash) {
            j["witness"] = {{"player", report.witness_player + 1},
                            {"vertex", label(a.spec, report.witness_vertex)},
                            {"old_payoff", report.witness_old_payoff},
                            {"new_payoff", report.witness_new_payoff}};
        }
        std::cout << j.dump() << "\n";
    } else if (report.is_nash) {
        std::cout << "NASH\n";
    } else {
        std::cout << "NOT NASH (player " << report.witness_player + 1 << " improves at "
                  << label(a.spec, report.witness_vertex) << ": " << report.witness_old_payoff
                  << " -> " << report.witness_new_payoff << ")\n";
    }
    return report.is_nash ? kExitOk : kExitClaimFailed;
}

int run_search(const CommonArgs& a, int players, bool count_all, const std::string& expect) {
    GraphPtr g = load_graph(a.spec);
    auto opts = make_search_options(a.threads, a.budget, a.force);
    nlohmann::ordered_json j;
    j["graph"] = a.spec;
    j["k"] = players;

    bool exists = false;
    if (count_all) {
        uint64_t count = 0, examined = 0;
        int rc = cdg_count_nash(g.get(), players, &opts, &count, &examined);
        if (rc == CDG_ERR_BUDGET) die("search budget exceeded (use --force)", kExitUsage);
        if (rc != CDG_OK) die("count failed");
        exists = count > 0;
        j["verdict"] = exists ? "exists" : "none";
        j["count"] = count;
        j["examined"] = examined;
        if (a.json)
            std::cout << j.dump() << "\n";
        else
            std::cout << count << " equilibrium multisets (" << examined << " examined)\n";
    } else {
        int found = 0;
        std::vector<int32_t> example(players);
        uint64_t examined = 0;
        int rc = cdg_find_nash(g.get(), players, &opts, &found, example.data(), &examined);
        if (rc == CDG_ERR_BUDGET) die("search budget exceeded (use --force)", kExitUsage);
        if (rc != CDG_OK) die("search failed");
        exists = found != 0;
        j["verdict"] = exists ? "exists" : "none";
        if (exists)
            j["example"] = labels(a.spec, example);
        else
            j["examined"] = examined;
        if (a.json) {
            std::cout << j.dump() << "\n";
        } else if (exists) {
            std::cout << "EXISTS (" << join(labels(a.spec, example)) << ")\n";
        } else {
            std::cout << "NONE (" << examined << " examined)\n";
        }
    }
    if (expect.empty()) return kExitOk;
    bool hold = (expect == "exists") == exists;
    return hold ? kExitOk : kExitClaimFailed;
}

int run_construct(const CommonArgs& a, int players, uint32_t x, uint32_t y, bool check) {
    cdg_graph* spec_graph = nullptr;
    if (cdg_graph_from_spec(a.spec.c_str(), &spec_graph) != CDG_OK)
        die("cannot build graph '" + a.spec + "'");
    GraphPtr g(spec_graph);

    std::string family = a.spec.substr(0, a.spec.find(':'));
    std::vector<int32_t> vertices;  // 0-based engine ids
    std::vector<std::string> shown;
    int rc = CDG_OK;
    if (family == "path" || family == "cycle") {
        int n = cdg_graph_vertex_count(g.get());
        std::vector<int32_t> pos(players);
        rc = family == "path" ? cdg_path_profile(n, players, pos.data())
                              : cdg_cycle_profile(n, players, pos.data());
        if (rc == CDG_OK)
            for (auto p : pos) {
                vertices.push_back(p - 1);
                shown.push_back(std::to_string(p));
            }
    } else if (family == "hypercube") {
        int d = 0;
        for (int32_t v = cdg_graph_vertex_count(g.get()); v > 1; v >>= 1) ++d;
        uint32_t quad[4] = {};
        rc = cdg_hypercube_profile(d, x, y, quad);
        players = 4;
        if (rc == CDG_OK)
            for (auto p : quad) {
                vertices.push_back(static_cast<int32_t>(p));
                shown.push_back(std::to_string(p));
            }
    } else {
        die("construct supports path:N, cycle:N and hypercube:D selectors");
    }
    if (rc == CDG_ERR_NO_PROFILE) {
        std::cerr << "no equilibrium profile: " << cdg_last_error() << "\n";
        return kExitClaimFailed;
    }
    if (rc != CDG_OK) die("construction failed");

    bool is_nash = true;
    if (check) {
        cdg_verify_report report{};
        if (cdg_verify(g.get(), vertices.data(), players, &report, nullptr) != CDG_OK)
            die("verify failed");
        is_nash = report.is_nash != 0;
    }
    if (a.json) {
        nlohmann::ordered_json j;
        j["graph"] = a.spec;
        j["k"] = players;
        j["profile"] = shown;
        if (check) j["verdict"] = is_nash ? "nash" : "not-nash";
        std::cout << j.dump() << "\n";
    } else {
        std::cout << join(shown) << "\n";
        if (check) std::cout << (is_nash ? "NASH" : "NOT NASH") << "\n";
    }
    return is_nash ? kExitOk : kExitClaimFailed;
}

int run_enumerate(int n, bool force_large, const std::string& out_path) {
    char* lines = nullptr;
    uint64_t count = 0;
    if (force_large && n >= 8)
        std::cerr << "warning: enumerating all graphs on " << n
                  << " vertices walks 2^" << n * (n - 1) / 2 << " labeled graphs\n";
    int rc = cdg_enumerate_graphs(n, force_large ? 1 : 0, &lines, &count);
    if (rc == CDG_ERR_CAP) die("enumeration cap exceeded (use --force-large for n=8)");
    if (rc != CDG_OK) die("enumeration failed");
    std::string text = take_string(lines);
    if (!out_path.empty())
        write_file(out_path, text);
    else
        std::cout << text;
    std::cerr << count << " isomorphism classes\n";
    return kExitOk;
}

int run_suite(const std::string& name, cdg_suite_options opts, const std::string& jsonl_path,
              bool quiet) {
    char* jsonl = nullptr;
    char* summary = nullptr;
    int all_ok = 0;
    if (opts.budget == 0) opts.budget = env_budget();
    int rc = cdg_run_suite(name.c_str(), &opts, &jsonl, &summary, &all_ok);
    if (rc == CDG_ERR_BUDGET) die("suite exceeded the search budget (use --force)", kExitUsage);
    if (rc != CDG_OK) die("suite failed");
    std::string jsonl_text = take_string(jsonl);
    std::string summary_text = take_string(summary);
    if (!jsonl_path.empty())
        write_file(jsonl_path, jsonl_text);
    else if (quiet)
        std::cout << jsonl_text;
    if (!quiet) std::cout << summary_text;
    return all_ok ? kExitOk : kExitClaimFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"competitive diffusion games on graphs: simulate, verify, search, construct"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(cdg_version()));

    CommonArgs args;
    auto add_common = [&](CLI::App* cmd, bool with_profile) {
        cmd->add_option("spec", args.spec,
                        "graph selector: path:N | cycle:N | grid:MxN | hypercube:D | "
                        "tree:K | fig7 | graph6:FILE[:LINE]")
            ->required();
        if (with_profile)
            cmd->add_option("--profile", args.profile,
                            "comma-separated vertices (1-based; x.y on grids; bit patterns "
                            "on hypercubes)")
                ->required();
        cmd->add_flag("--json", args.json, "machine-readable output");
    };

    // show
    std::string dot_path, trace_path, out_path, expect, jsonl_path;
    bool emit_graph6 = false;
    auto* show = app.add_subcommand("show", "print graph facts; export DOT or graph6");
    add_common(show, false);
    show->add_option("--dot", dot_path, "write DOT to this file");
    show->add_flag("--graph6", emit_graph6, "print the graph6 encoding");

    // simulate
    bool trace = false;
    auto* simulate = app.add_subcommand("simulate", "run the propagation process once");
    add_common(simulate, true);
    simulate->add_flag("--trace", trace, "print the round-by-round trace as JSON");
    simulate->add_option("--trace-out", trace_path, "write the trace JSON to this file");
    simulate->add_option("--dot", dot_path, "write the final coloring as DOT");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a profile for Nash equilibrium");
    add_common(verify_cmd, true);

    // search
    int players = 2;
    bool count_all = false;
    auto* search = app.add_subcommand("search", "exhaustive equilibrium existence search");
    add_common(search, false);
    search->add_option("--players,-k", players, "number of players")->required();
    search->add_flag("--count", count_all, "count all equilibrium multisets");
    search->add_option("--threads", args.threads, "worker threads (0 = auto)");
    search->add_option("--budget", args.budget,
                       "multiset ceiling (default 500000 or DIFFUSION_BUDGET)");
    search->add_flag("--force", args.force, "run even above the ceiling");
    search->add_option("--expect", expect, "exit nonzero unless the verdict matches")
        ->check(CLI::IsMember({"exists", "none"}));

    // construct
    uint32_t hx = 0, hy = 1;
    bool check_construction = false;
    auto* construct =
        app.add_subcommand("construct", "closed-form equilibrium profile for a family");
    add_common(construct, false);
    construct->add_option("--players,-k", players, "number of players");
    construct->add_option("--x", hx, "hypercube seed x (bit pattern)");
    construct->add_option("--y", hy, "hypercube seed y, adjacent to x");
    construct->add_flag("--verify", check_construction, "also verify the profile");

    // enumerate
    int enum_n = 0;
    bool force_large = false;
    auto* enumerate =
        app.add_subcommand("enumerate", "graph6 for one representative per isomorphism class");
    enumerate->add_option("n", enum_n, "vertex count (<= 7, or 8 with --force-large)")
        ->required();
    enumerate->add_flag("--force-large", force_large, "allow n = 8");
    enumerate->add_option("-o,--out", out_path, "write lines to this file");

    // suite
    std::string suite_name;
    cdg_suite_options sopts;
    cdg_suite_options_init(&sopts);
    std::string grid_sizes, corpus;
    bool timings = false, quiet = false;
    auto* suite = app.add_subcommand("suite", "run a reproduction suite");
    suite
        ->add_option("name", suite_name,
                     "paths | cycles | grids | hypercubes | trees | small-graphs | "
                     "grid4-conjecture")
        ->required();
    suite->add_option("--k-max", sopts.k_max, "largest player count (paths/cycles)");
    suite->add_option("--n-max", sopts.n_max, "largest path/cycle length");
    suite->add_option("--d-max", sopts.d_max, "largest hypercube dimension");
    suite->add_option("--tree-k-min", sopts.tree_k_lo, "smallest tree player count");
    suite->add_option("--tree-k-max", sopts.tree_k_hi, "largest tree player count");
    suite->add_option("--survey-n-max", sopts.survey_n_max, "largest survey vertex count");
    suite->add_option("--players", sopts.players, "players for the small-graph survey");
    suite->add_option("--sizes", grid_sizes, "grid sizes, e.g. 5x5,5x6,6x6");
    suite->add_option("--graph6", corpus, "survey an ingested graph6 corpus");
    suite->add_option("--rows", sopts.rows, "grid4-conjecture rows");
    suite->add_option("--cols", sopts.cols, "grid4-conjecture cols");
    suite->add_option("--threads", sopts.threads, "worker threads (0 = auto)");
    suite->add_option("--budget", sopts.budget, "multiset search ceiling");
    suite->add_flag("--force", args.force, "run above budgets and caps");
    suite->add_flag("--timings", timings, "include wall_ms in the JSONL");
    suite->add_option("--jsonl", jsonl_path, "write one JSON record per row to this file");
    suite->add_flag("--quiet", quiet, "suppress the summary table (JSONL to stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (show->parsed()) return run_show(args, dot_path, emit_graph6);
        if (simulate->parsed()) return run_simulate(args, trace, trace_path, dot_path);
        if (verify_cmd->parsed()) return run_verify(args);
        if (search->parsed()) return run_search(args, players, count_all, expect);
        if (construct->parsed())
            return run_construct(args, players, hx, hy, check_construction);
        if (enumerate->parsed()) return run_enumerate(enum_n, force_large, out_path);
        if (suite->parsed()) {
            sopts.grid_sizes = grid_sizes.empty() ? nullptr : grid_sizes.c_str();
            sopts.graph6_path = corpus.empty() ? nullptr : corpus.c_str();
            sopts.force = args.force ? 1 : 0;
            sopts.timings = timings ? 1 : 0;
            return run_suite(suite_name, sopts, jsonl_path, quiet);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
