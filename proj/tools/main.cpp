/*
 * Copyright 2026 The finitary authors
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

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "finitary/collapse.hpp"
#include "finitary/enumerate.hpp"
#include "finitary/fixtures.hpp"
#include "finitary/io.hpp"
#include "finitary/oracle.hpp"
#include "finitary/restart.hpp"
#include "finitary/solvers.hpp"
#include "finitary/unfold.hpp"

using namespace finitary;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

Arena load_arena(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_arena(in);
}

PushdownProcess load_pushdown(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_pushdown(in);
}

Condition make_condition(const Arena& a, const std::string& name, long n) {
    auto kind = condition_from_name(name);
    if (!kind) throw ParseError("unknown condition: " + name);
    Condition c{*kind, VertexSet(), n};
    if (c.uses_set()) c.set = a.buchi_set();  // F = color^{-1}(0) by convention
    if (c.uses_bound() && n < 0) throw ParseError("condition " + name + " requires --N");
    if (!c.uses_bound() && n >= 0) throw ParseError("condition " + name + " takes no --N");
    return c;
}

Params parse_params(const std::vector<std::string>& kvs) {
    Params ps;
    for (auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw ParseError("expected k=v, got " + kv);
        ps[kv.substr(0, eq)] = std::stol(kv.substr(eq + 1));
    }
    return ps;
}

std::pair<long, long> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw ParseError("expected A..B, got " + s);
    return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
}

int cmd_solve(const std::string& input, const std::string& cond_name, long n, long start,
              const std::string& emit, bool json_out, const std::string& dot_path) {
    Arena a = load_arena(input);
    Condition cond = make_condition(a, cond_name, n);
    if (cond.kind == ConditionKind::BndUniformParity)
        throw ParseError("bnd-uniform-parity is a verification-only condition");
    SolveOptions opts;
    opts.strategies = !emit.empty();
    SolveResult r = solve(a, cond, opts);

    if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        print_dot(dot, a);
    }
    if (json_out) {
        nlohmann::ordered_json j;
        j["condition"] = cond_name;
        if (cond.uses_bound()) j["N"] = n;
        j["arena"] = a.name();
        j["eve_region"] = r.eve_region.elements();
        j["adam_region"] = r.adam_region.elements();
        if (start >= 0) {
            j["start"] = start;
            j["start_winner"] = r.eve_region.test(std::size_t(start)) ? "E" : "A";
        }
        std::cout << j.dump(2) << "\n";
    } else {
        print_region_line(std::cout, 'E', r.eve_region);
        print_region_line(std::cout, 'A', r.adam_region);
        if (emit == "E" && r.eve_strategy) print_strategy(std::cout, *r.eve_strategy, a);
        if (emit == "A" && r.adam_strategy) print_strategy(std::cout, *r.adam_strategy, a);
    }
    if (start >= 0 && !r.eve_region.test(std::size_t(start))) return kExitNegative;
    return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& strategy_path,
               const std::string& cond_name, long n, const std::string& from_csv) {
    Arena a = load_arena(input);
    Condition cond = make_condition(a, cond_name, n);
    std::ifstream sf(strategy_path);
    if (!sf) throw ParseError("cannot open " + strategy_path);
    Strategy s = parse_strategy(sf, a);
    VertexSet from(a.num_vertices());
    std::istringstream fs(from_csv);
    std::string tok;
    while (std::getline(fs, tok, ','))
        if (!tok.empty()) from.set(std::stoul(tok));
    Verdict v = verify(a, s, cond, from);
    print_verdict(std::cout, v);
    return v.holds ? kExitOk : kExitNegative;
}

int cmd_simulate(const std::string& input, const std::string& eve_path,
                 const std::string& adam_path, long start, long horizon) {
    Arena a = load_arena(input);
    std::ifstream ef(eve_path), af(adam_path);
    if (!ef || !af) throw ParseError("cannot open strategy file");
    Strategy eve = parse_strategy(ef, a);
    Strategy adam = parse_strategy(af, a);
    PlayRecord rec = simulate(a, eve, adam, std::size_t(start), std::size_t(horizon));
    for (std::size_t k = 0; k < rec.vertices.size(); ++k) {
        std::cout << k << ' ' << rec.vertices[k] << " color=" << rec.colors[k] << " dist=";
        if (rec.censored[k]) std::cout << "inf?";
        else std::cout << rec.dist[k];
        std::cout << "\n";
    }
    for (std::size_t i = 0; i < rec.counters.odd_colors.size(); ++i) {
        std::cout << "counter " << rec.counters.odd_colors[i] << ":";
        for (auto v : rec.counters.values[i]) std::cout << ' ' << v;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_unfold(const std::string& pd_path, long height, const std::string& start_str,
               const std::string& policy_str, const std::string& out_path) {
    PushdownProcess p = load_pushdown(pd_path);
    Configuration start = parse_config(p, start_str);
    OverflowPolicy policy = OverflowPolicy::LoseEve;
    if (policy_str == "lose-adam") policy = OverflowPolicy::LoseAdam;
    else if (policy_str == "drop") policy = OverflowPolicy::Drop;
    else if (policy_str != "lose-eve") throw ParseError("unknown policy " + policy_str);
    UnfoldResult u = unfold(p, std::size_t(height), start, policy);
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open " + out_path);
    print_arena(out, u.arena);
    for (std::size_t v = 0; v < u.configs.size(); ++v) {
        bool overflow = false;
        for (auto o : u.overflow_vertices) overflow |= (o == v);
        out << "# config " << v << ' '
            << (overflow ? std::string("<overflow>") : config_to_string(p, u.configs[v])) << "\n";
    }
    std::cout << "vertices " << u.arena.num_vertices() << " edges " << u.arena.num_edges()
              << " overflow " << u.overflow_vertices.size() << " start " << u.start_vertex
              << "\n";
    return kExitOk;
}

int cmd_examples(const std::string& action, const std::string& name,
                 const std::vector<std::string>& kvs, const std::string& format) {
    if (action == "list") {
        for (auto& info : list_examples())
            std::cout << info.name << " [" << info.kind << "]"
                      << (info.params.empty() ? "" : " params: " + info.params) << " -- "
                      << info.provenance << "\n";
        return kExitOk;
    }
    if (name.empty()) throw ParseError("dump needs an example name");
    Fixture f = build_example(name, parse_params(kvs));
    std::string fmt = format;
    if (fmt.empty()) fmt = f.is_arena() ? "arena" : "pushdown";
    if (fmt == "arena") {
        if (!f.is_arena()) throw ParseError(name + " is a pushdown fixture");
        print_arena(std::cout, f.arena());
    } else if (fmt == "pushdown") {
        if (f.is_arena()) throw ParseError(name + " is an arena fixture");
        print_pushdown(std::cout, f.process());
    } else if (fmt == "dot") {
        if (f.is_arena()) print_dot(std::cout, f.arena());
        else throw ParseError("dot export needs an arena fixture");
    } else {
        throw ParseError("unknown format " + fmt);
    }
    return kExitOk;
}

int cmd_collapse_growth(const std::string& example, const std::string& range, long k,
                        const std::string& csv_path) {
    auto [lo, hi] = parse_range(range);
    std::ofstream csv(csv_path);
    if (!csv) throw ParseError("cannot open " + csv_path);
    csv << "n,states,alphabet,sup_gap,bound_upper,ratio\n";
    long prev = -1;
    for (long n = lo; n <= hi; ++n) {
        Params ps{{"n", n}};
        if (k > 0) ps["k"] = k;
        Fixture f = build_example(example, ps);
        if (f.is_arena()) throw ParseError("collapse-growth needs a pushdown example");
        const PushdownProcess& p = f.process();
        auto run = simulate_deterministic(p, parse_config(p, f.start));
        unsigned long long bound =
            collapse_bound_upper_saturated(p.num_states(), p.alphabet_size());
        csv << n << ',' << p.num_states() << ',' << p.alphabet_size() << ',' << run.sup_gap << ',';
        if (bound == ~0ULL) csv << "inf";
        else csv << bound;
        csv << ',';
        if (prev > 0) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", double(run.sup_gap) / double(prev));
            csv << buf;
        }
        csv << "\n";
        std::cout << "n=" << n << " sup_gap=" << run.sup_gap << "\n";
        prev = run.sup_gap;
    }
    return kExitOk;
}

int cmd_min_bound(const std::string& pd_path, const std::string& start_str,
                  const std::string& range, const std::string& policy_str,
                  const std::string& csv_path) {
    PushdownProcess p = load_pushdown(pd_path);
    Configuration start = parse_config(p, start_str);
    auto [lo, hi] = parse_range(range);
    OverflowPolicy policy = OverflowPolicy::LoseEve;
    if (policy_str == "drop") policy = OverflowPolicy::Drop;
    else if (policy_str == "lose-adam") policy = OverflowPolicy::LoseAdam;
    std::ofstream csv(csv_path);
    if (!csv) throw ParseError("cannot open " + csv_path);
    csv << "height,vertices,min_bound\n";
    std::vector<std::optional<long>> values;
    for (long h = lo; h <= hi; ++h) {
        std::optional<long> bound;
        std::size_t vertices = 0;
        try {
            UnfoldResult u = unfold(p, std::size_t(h), start, policy);
            vertices = u.arena.num_vertices();
            bound = minimal_uniform_bound(u.arena, u.arena.buchi_set(), u.start_vertex, 1 << 16);
        } catch (const DeadEndConfiguration&) {
        }
        values.push_back(bound);
        csv << h << ',' << vertices << ',';
        if (bound) csv << *bound;
        else csv << "none";
        csv << "\n";
        std::cout << "height=" << h << " min_bound=" << (bound ? std::to_string(*bound) : "none")
                  << "\n";
    }
    // stabilization is a heuristic witness, never a proof
    const std::size_t window = 3;
    for (std::size_t i = 0; i + window <= values.size(); ++i) {
        bool stable = values[i].has_value();
        for (std::size_t j = 1; j < window && stable; ++j)
            stable = values[i + j].has_value() && *values[i + j] == *values[i];
        if (stable) {
            std::cout << "stabilized " << *values[i] << " at height " << (lo + long(i))
                      << " (window " << window << "; heuristic, not a proof)\n";
            return kExitOk;
        }
    }
    std::cout << "not-stabilized (window " << window << ")\n";
    return kExitOk;
}

int cmd_memory_bound(const std::string& example, const std::string& player_str, long cap) {
    Fixture f = build_example(example);
    if (!f.is_arena()) throw ParseError("memory-bound needs an arena example");
    const Arena& a = f.arena();
    Player player = player_str == "A" ? Player::Adam : Player::Eve;
    // the fixture's first claim names the condition and bound of its check
    if (f.claims.empty()) throw ParseError("example has no claim to check");
    const Claim& claim = f.claims.front();
    auto kind = condition_from_name(claim.condition);
    if (!kind) throw ParseError("claim condition unknown: " + claim.condition);
    Condition cond{*kind, VertexSet(), claim.bound};
    if (cond.uses_set()) cond.set = a.buchi_set();
    VertexSet from(a.num_vertices());
    from.set(std::stoul(claim.start));
    auto r = oracle_min_memory(a, player, cond, from, int(cap));
    if (r) {
        std::cout << "min-memory " << r->states << " for " << claim.condition
                  << (cond.uses_bound() ? " N=" + std::to_string(claim.bound) : "") << " from "
                  << claim.start << "\n";
        return kExitOk;
    }
    std::cout << "none within cap " << cap << "\n";
    return kExitNegative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"solver and experiment driver for games with finitary conditions"};
    app.require_subcommand(1);

    std::string input, cond_name, emit, dot_path, strategy_path, from_csv;
    std::string eve_path, adam_path, pd_path, start_conf, policy = "lose-eve", out_path;
    std::string example_action, example_name, format;
    std::vector<std::string> kvs;
    long nval = -1, start = -1, horizon = 10, height = 0;
    bool json_out = false;

    auto* solve_cmd = app.add_subcommand("solve", "solve a condition on an arena file");
    solve_cmd->add_option("--input", input)->required();
    solve_cmd->add_option("--condition", cond_name)->required();
    solve_cmd->add_option("--N", nval);
    solve_cmd->add_option("--start", start);
    solve_cmd->add_option("--emit-strategy", emit)->check(CLI::IsMember({"E", "A"}));
    solve_cmd->add_flag("--json", json_out);
    solve_cmd->add_option("--dot", dot_path);

    auto* verify_cmd = app.add_subcommand("verify", "verify a strategy file against a condition");
    verify_cmd->add_option("--input", input)->required();
    verify_cmd->add_option("--strategy", strategy_path)->required();
    verify_cmd->add_option("--condition", cond_name)->required();
    verify_cmd->add_option("--N", nval);
    verify_cmd->add_option("--from", from_csv)->required();

    auto* sim_cmd = app.add_subcommand("simulate", "play two strategy files against each other");
    sim_cmd->add_option("--input", input)->required();
    sim_cmd->add_option("--eve", eve_path)->required();
    sim_cmd->add_option("--adam", adam_path)->required();
    sim_cmd->add_option("--start", start)->required();
    sim_cmd->add_option("--horizon", horizon)->required();

    auto* unfold_cmd = app.add_subcommand("unfold", "unfold a pushdown process to an arena file");
    unfold_cmd->add_option("--pushdown", pd_path)->required();
    unfold_cmd->add_option("--height", height)->required();
    unfold_cmd->add_option("--start", start_conf)->required();
    unfold_cmd->add_option("--policy", policy)
        ->check(CLI::IsMember({"lose-eve", "lose-adam", "drop"}));
    unfold_cmd->add_option("--out", out_path)->required();

    auto* ex_cmd = app.add_subcommand("examples", "list or dump the example catalog");
    ex_cmd->add_option("action", example_action)
        ->required()
        ->check(CLI::IsMember({"list", "dump"}));
    ex_cmd->add_option("name", example_name);
    ex_cmd->add_option("--param", kvs);
    ex_cmd->add_option("--format", format)->check(CLI::IsMember({"arena", "pushdown", "dot"}));

    auto* exp_cmd = app.add_subcommand("experiment", "reproduce the measurement experiments");
    exp_cmd->require_subcommand(1);
    std::string exp_example = "bincounter", n_range = "2..5", h_range = "1..8", player_str = "E";
    std::string csv_path;
    long kparam = -1, cap = 3;
    auto* growth =
        exp_cmd->add_subcommand("collapse-growth", "gap growth of deterministic counters");
    growth->add_option("--example", exp_example);
    growth->add_option("--n-range", n_range);
    growth->add_option("--k", kparam);
    growth->add_option("--csv", csv_path)->required();
    auto* minb = exp_cmd->add_subcommand("min-bound", "minimal uniform bound per unfolding height");
    minb->add_option("--pushdown", pd_path)->required();
    minb->add_option("--start", start_conf)->required();
    minb->add_option("--height-range", h_range)->required();
    minb->add_option("--policy", policy)->check(CLI::IsMember({"lose-eve", "lose-adam", "drop"}));
    minb->add_option("--csv", csv_path)->required();
    auto* memb = exp_cmd->add_subcommand("memory-bound", "minimal strategy memory on an example");
    memb->add_option("--example", exp_example)->required();
    memb->add_option("--player", player_str)->check(CLI::IsMember({"E", "A"}));
    memb->add_option("--cap", cap);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve_cmd) return cmd_solve(input, cond_name, nval, start, emit, json_out, dot_path);
        if (*verify_cmd) return cmd_verify(input, strategy_path, cond_name, nval, from_csv);
        if (*sim_cmd) return cmd_simulate(input, eve_path, adam_path, start, horizon);
        if (*unfold_cmd) return cmd_unfold(pd_path, height, start_conf, policy, out_path);
        if (*ex_cmd) return cmd_examples(example_action, example_name, kvs, format);
        if (*growth) return cmd_collapse_growth(exp_example, n_range, kparam, csv_path);
        if (*minb) return cmd_min_bound(pd_path, start_conf, h_range, policy, csv_path);
        if (*memb) return cmd_memory_bound(exp_example, player_str, cap);
    } catch (const CapExceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitLimit;
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitLimit;
    } catch (const SpaceTooLarge& e) {
        std::cerr << e.what() << "\n";
        return kExitLimit;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
