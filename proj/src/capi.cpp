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

#include "cdiffusion.h"

#include <cstdio>
#include <cstring>

#include "canonical.hpp"
#include "constructions.hpp"
#include "engine.hpp"
#include "equilibrium.hpp"
#include "experiments.hpp"
#include "graph6.hpp"
#include "specparse.hpp"

struct cdg_graph {
    cdg::Graph g;
};

struct cdg_outcome {
    cdg::PropagationOutcome o;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
int guarded(F&& f) {
    try {
        f();
        return CDG_OK;
    } catch (const cdg::budget_error& e) {
        g_last_error = e.what();
        return CDG_ERR_BUDGET;
    } catch (const cdg::cap_error& e) {
        g_last_error = e.what();
        return CDG_ERR_CAP;
    } catch (const cdg::no_profile_error& e) {
        g_last_error = e.what();
        return CDG_ERR_NO_PROFILE;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return CDG_ERR_PARSE;
    } catch (const std::out_of_range& e) {
        g_last_error = e.what();
        return CDG_ERR_INVALID;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CDG_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int require(bool cond, const char* message) {
    if (cond) return CDG_OK;
    g_last_error = message;
    return CDG_ERR_INVALID;
}

cdg::StrategyProfile to_profile(const int32_t* profile, int32_t players) {
    if (!profile || players < 1) throw std::invalid_argument("profile must hold >= 1 players");
    return cdg::StrategyProfile(profile, profile + players);
}

cdg::SearchOptions to_search_options(const cdg_search_options* opts) {
    cdg::SearchOptions s;
    if (opts) {
        s.threads = opts->threads;
        if (opts->budget > 0) s.budget = opts->budget;
        s.force = opts->force != 0;
    }
    return s;
}

int make_graph(cdg_graph** out, cdg::Graph g) {
    *out = new cdg_graph{std::move(g)};
    return CDG_OK;
}

}  // namespace

extern "C" {

const char* cdg_version(void) { return cdg::version(); }
const char* cdg_last_error(void) { return g_last_error.c_str(); }
void cdg_string_free(char* s) { std::free(s); }

int cdg_graph_path(int32_t n, cdg_graph** out) {
    if (int rc = require(out, "out is null")) return rc;
    return guarded([&] { make_graph(out, cdg::path(n)); });
}

int cdg_graph_cycle(int32_t n, cdg_graph** out) {
    if (int rc = require(out, "out is null")) return rc;
    return guarded([&] { make_graph(out, cdg::cycle(n)); });
}

int cdg_graph_grid(int32_t rows, int32_t cols, cdg_graph** out) {
    if (int rc = require(out, "out is null")) return rc;
    return guarded([&] { make_graph(out, cdg::grid(rows, cols)); });
}

int cdg_graph_hypercube(int32_t d, cdg_graph** out) {
    if (int rc = require(out, "out is null")) return rc;
    return guarded([&] { make_graph(out, cdg::hypercube(d)); });
}

int cdg_graph_no_ne_tree(int32_t players, cdg_graph** out) {
    if (int rc = require(out, "out is null")) return rc;
    return guarded([&] { make_graph(out, cdg::no_ne_tree(players)); });
}

int cdg_graph_fig7(cdg_graph** out) {
    if (int rc = require(out, "out is null")) return rc;
    return guarded([&] { make_graph(out, cdg::fig7_graph()); });
}

int cdg_graph_from_spec(const char* spec, cdg_graph** out) {
    if (int rc = require(out && spec, "spec/out is null")) return rc;
    return guarded([&] { make_graph(out, cdg::build_graph(cdg::parse_graph_spec(spec))); });
}

int cdg_graph_from_graph6(const char* line, cdg_graph** out) {
    if (int rc = require(out && line, "line/out is null")) return rc;
    return guarded([&] { make_graph(out, cdg::parse_graph6(line)); });
}

void cdg_graph_free(cdg_graph* g) { delete g; }

int32_t cdg_graph_vertex_count(const cdg_graph* g) { return g ? g->g.vertex_count() : 0; }

int64_t cdg_graph_edge_count(const cdg_graph* g) { return g ? g->g.edge_count() : 0; }

int cdg_graph_has_edge(const cdg_graph* g, int32_t u, int32_t v) {
    if (!g) return -CDG_ERR_INVALID;
    int result = 0;
    int rc = guarded([&] { result = g->g.has_edge(u, v) ? 1 : 0; });
    return rc == CDG_OK ? result : -rc;
}

int cdg_graph_degree(const cdg_graph* g, int32_t v) {
    if (!g) return -CDG_ERR_INVALID;
    int result = 0;
    int rc = guarded([&] {
        g->g.check_vertex(v);
        result = g->g.degree(v);
    });
    return rc == CDG_OK ? result : -rc;
}

int cdg_graph_distance(const cdg_graph* g, int32_t u, int32_t v, int32_t* dist) {
    if (int rc = require(g && dist, "graph/dist is null")) return rc;
    return guarded([&] {
        g->g.check_vertex(u);
        g->g.check_vertex(v);
        *dist = cdg::distances_from(g->g, u)[v];
    });
}

int cdg_graph_to_graph6(const cdg_graph* g, char** text) {
    if (int rc = require(g && text, "graph/text is null")) return rc;
    return guarded([&] { *text = dup_string(cdg::serialize_graph6(g->g)); });
}

int cdg_graph_to_dot(const cdg_graph* g, const int32_t* states, char** text) {
    if (int rc = require(g && text, "graph/text is null")) return rc;
    return guarded([&] {
        std::vector<int> colors;
        if (states) colors.assign(states, states + g->g.vertex_count());
        *text = dup_string(cdg::to_dot(g->g, colors));
    });
}

int cdg_graph_canonical_form(const cdg_graph* g, uint64_t* form) {
    if (int rc = require(g && form, "graph/form is null")) return rc;
    return guarded([&] {
        auto cf = cdg::canonical_form(g->g);
        *form = (static_cast<uint64_t>(cf.n) << 48) | cf.bits;
    });
}

int cdg_graph_isomorphic(const cdg_graph* a, const cdg_graph* b, int* iso) {
    if (int rc = require(a && b && iso, "graph/iso is null")) return rc;
    return guarded([&] { *iso = cdg::isomorphic(a->g, b->g) ? 1 : 0; });
}

int cdg_parse_vertex(const char* spec, const cdg_graph* g, const char* token, int32_t* id) {
    if (int rc = require(spec && g && token && id, "argument is null")) return rc;
    return guarded(
        [&] { *id = cdg::parse_vertex(cdg::parse_graph_spec(spec), g->g, token); });
}

int cdg_format_vertex(const char* spec, int32_t id, char** text) {
    if (int rc = require(spec && text, "spec/text is null")) return rc;
    return guarded(
        [&] { *text = dup_string(cdg::format_vertex(cdg::parse_graph_spec(spec), id)); });
}

int cdg_propagate(const cdg_graph* g, const int32_t* profile, int32_t players, int want_trace,
                  cdg_outcome** out) {
    if (int rc = require(g && out, "graph/out is null")) return rc;
    return guarded([&] {
        *out = new cdg_outcome{
            cdg::propagate(g->g, to_profile(profile, players), want_trace != 0)};
    });
}

void cdg_outcome_free(cdg_outcome* o) { delete o; }

int32_t cdg_outcome_steps(const cdg_outcome* o) { return o ? o->o.steps : 0; }

int64_t cdg_outcome_payoff(const cdg_outcome* o, int32_t player) {
    if (!o || player < 0 || player >= static_cast<int32_t>(o->o.payoffs.size())) return -1;
    return o->o.payoffs[player];
}

int32_t cdg_outcome_state(const cdg_outcome* o, int32_t vertex) {
    if (!o || vertex < 0 || vertex >= static_cast<int32_t>(o->o.final_states.size())) return -3;
    return o->o.final_states[vertex];
}

int cdg_outcome_trace_json(const cdg_outcome* o, char** text) {
    if (int rc = require(o && text, "outcome/text is null")) return rc;
    if (int rc = require(!o->o.trace.empty(), "propagation ran without want_trace")) return rc;
    return guarded([&] { *text = dup_string(cdg::trace_to_json(o->o)); });
}

int cdg_verify(const cdg_graph* g, const int32_t* profile, int32_t players,
               cdg_verify_report* report, int64_t* payoffs) {
    if (int rc = require(g && report, "graph/report is null")) return rc;
    return guarded([&] {
        auto rep = cdg::verify(g->g, to_profile(profile, players));
        report->is_nash = rep.is_nash ? 1 : 0;
        report->witness_player = rep.witness ? rep.witness->player : -1;
        report->witness_vertex = rep.witness ? rep.witness->vertex : -1;
        report->witness_old_payoff = rep.witness ? rep.witness->old_payoff : 0;
        report->witness_new_payoff = rep.witness ? rep.witness->new_payoff : 0;
        if (payoffs)
            for (int32_t i = 0; i < players; ++i) payoffs[i] = rep.payoffs[i];
    });
}

int cdg_best_response(const cdg_graph* g, const int32_t* profile, int32_t players,
                      int32_t player, int32_t* vertex, int64_t* payoff) {
    if (int rc = require(g && vertex && payoff, "argument is null")) return rc;
    return guarded([&] {
        auto [v, p] = cdg::best_response(g->g, to_profile(profile, players), player);
        *vertex = v;
        *payoff = p;
    });
}

int cdg_find_nash(const cdg_graph* g, int32_t players, const cdg_search_options* opts,
                  int* exists, int32_t* example, uint64_t* examined) {
    if (int rc = require(g && exists, "graph/exists is null")) return rc;
    return guarded([&] {
        auto res = cdg::find_nash(g->g, players, to_search_options(opts));
        *exists = res.exists ? 1 : 0;
        if (example && res.exists)
            for (int32_t i = 0; i < players; ++i) example[i] = res.example[i];
        if (examined) *examined = res.examined;
    });
}

int cdg_count_nash(const cdg_graph* g, int32_t players, const cdg_search_options* opts,
                   uint64_t* count, uint64_t* examined) {
    if (int rc = require(g && count, "graph/count is null")) return rc;
    return guarded([&] {
        auto res = cdg::count_nash(g->g, players, to_search_options(opts));
        *count = res.nash_profiles;
        if (examined) *examined = res.examined;
    });
}

int cdg_multiset_count(int32_t n, int32_t players, uint64_t* count) {
    if (int rc = require(count != nullptr, "count is null")) return rc;
    return guarded([&] { *count = cdg::multiset_count(n, players); });
}

int cdg_path_profile(int32_t n, int32_t players, int32_t* positions) {
    if (int rc = require(positions != nullptr, "positions is null")) return rc;
    return guarded([&] {
        auto p = cdg::path_profile(n, players);
        for (int32_t i = 0; i < players; ++i) positions[i] = p[i];
    });
}

int cdg_cycle_profile(int32_t n, int32_t players, int32_t* positions) {
    if (int rc = require(positions != nullptr, "positions is null")) return rc;
    return guarded([&] {
        auto p = cdg::cycle_profile(n, players);
        for (int32_t i = 0; i < players; ++i) positions[i] = p[i];
    });
}

int cdg_hypercube_profile(int32_t d, uint32_t x, uint32_t y, uint32_t* profile4) {
    if (int rc = require(profile4 != nullptr, "profile4 is null")) return rc;
    return guarded([&] {
        auto p = cdg::hypercube_profile(d, x, y);
        for (int i = 0; i < 4; ++i) profile4[i] = p[i];
    });
}

int cdg_hypercube_equilibrium_payoff(int32_t d, uint64_t* payoff) {
    if (int rc = require(payoff != nullptr, "payoff is null")) return rc;
    return guarded([&] { *payoff = cdg::hypercube_equilibrium_payoff(d); });
}

int cdg_v_region_count(int32_t d, uint32_t x, uint32_t y, uint64_t* count) {
    if (int rc = require(count != nullptr, "count is null")) return rc;
    return guarded([&] { *count = cdg::v_region_count(d, x, y); });
}

int cdg_v_region_bound(int32_t d, uint64_t* bound) {
    if (int rc = require(bound != nullptr, "bound is null")) return rc;
    return guarded([&] { *bound = cdg::v_region_bound(d); });
}

int cdg_grid_improving_move(int32_t rows, int32_t cols, const int32_t* xs, const int32_t* ys,
                            cdg_grid_move* move) {
    if (int rc = require(xs && ys && move, "argument is null")) return rc;
    return guarded([&] {
        std::array<cdg::GridCoord, 3> pos;
        for (int i = 0; i < 3; ++i) pos[i] = {xs[i], ys[i]};
        auto mv = cdg::grid_improving_move(rows, cols, pos);
        move->player = mv.player;
        move->to_x = mv.to.x;
        move->to_y = mv.to.y;
        std::snprintf(move->tag, sizeof(move->tag), "%s", mv.tag.c_str());
    });
}

int cdg_enumerate_graphs(int32_t n, int allow_large, char** graph6_lines, uint64_t* count) {
    if (int rc = require(graph6_lines != nullptr, "graph6_lines is null")) return rc;
    return guarded([&] {
        auto graphs = cdg::enumerate_graphs(n, allow_large != 0);
        std::string out;
        for (const auto& g : graphs) {
            out += cdg::serialize_graph6(g);
            out += '\n';
        }
        *graph6_lines = dup_string(out);
        if (count) *count = graphs.size();
    });
}

void cdg_suite_options_init(cdg_suite_options* opts) {
    if (!opts) return;
    cdg::SuiteOptions d;
    *opts = {};
    opts->k_max = d.k_max;
    opts->n_max = d.n_max;
    opts->d_max = d.d_max;
    opts->tree_k_lo = d.tree_k_lo;
    opts->tree_k_hi = d.tree_k_hi;
    opts->survey_n_max = d.survey_n_max;
    opts->players = d.players;
    opts->rows = d.rows;
    opts->cols = d.cols;
    opts->budget = d.budget;
}

int cdg_run_suite(const char* name, const cdg_suite_options* opts, char** jsonl, char** summary,
                  int* all_ok) {
    if (int rc = require(name != nullptr, "name is null")) return rc;
    return guarded([&] {
        cdg::SuiteOptions o;
        if (opts) {
            o.k_max = opts->k_max;
            o.n_max = opts->n_max;
            o.d_max = opts->d_max;
            o.tree_k_lo = opts->tree_k_lo;
            o.tree_k_hi = opts->tree_k_hi;
            o.survey_n_max = opts->survey_n_max;
            o.players = opts->players;
            if (opts->grid_sizes) o.grid_sizes = opts->grid_sizes;
            if (opts->graph6_path) o.graph6_path = opts->graph6_path;
            o.rows = opts->rows;
            o.cols = opts->cols;
            o.threads = opts->threads;
            if (opts->budget > 0) o.budget = opts->budget;
            o.force = opts->force != 0;
        }
        auto report = cdg::run_suite(name, o);
        if (jsonl) *jsonl = dup_string(cdg::to_jsonl(report, opts && opts->timings));
        if (summary) *summary = dup_string(cdg::summary_table(report));
        if (all_ok) *all_ok = report.all_ok ? 1 : 0;
    });
}

}  // extern "C"
