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

#pragma once

#include <map>
#include <sstream>
#include <string>

#include "finitary/solvers.hpp"
#include "finitary/verify.hpp"

namespace finitary {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Arena text format
//
//   arena <name> maxcolor <d>
//   <id> <E|A> <color> <succ1>,<succ2>,...
//
// '#' starts a comment; ids are the dense range 0..n-1 in any order.
// ---------------------------------------------------------------------------

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    std::string s = pos == std::string::npos ? line : line.substr(0, pos);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
    std::size_t b = 0;
    while (b < s.size() && (s[b] == ' ' || s[b] == '\t')) ++b;
    return s.substr(b);
}

inline Arena parse_arena(std::istream& in) {
    std::string line;
    std::string name;
    int maxcolor = -1;
    struct Row {
        Player owner;
        int color;
        std::vector<std::size_t> succ;
    };
    std::map<std::size_t, Row> rows;
    bool header = false;
    while (std::getline(in, line)) {
        std::string s = strip_comment(line);
        if (s.empty()) continue;
        std::istringstream ls(s);
        if (!header) {
            std::string kw;
            ls >> kw;
            if (kw != "arena") throw ParseError("expected 'arena' header, got: " + s);
            std::string mc;
            ls >> name >> mc >> maxcolor;
            if (mc != "maxcolor" || maxcolor < 1)
                throw ParseError("malformed arena header: " + s);
            header = true;
            continue;
        }
        std::size_t id;
        std::string owner, succs;
        int color;
        if (!(ls >> id >> owner >> color >> succs))
            throw ParseError("malformed vertex line: " + s);
        if (owner != "E" && owner != "A") throw ParseError("owner must be E or A: " + s);
        Row row;
        row.owner = owner == "E" ? Player::Eve : Player::Adam;
        row.color = color;
        std::istringstream ss(succs);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) row.succ.push_back(std::stoul(tok));
        if (row.succ.empty()) throw ParseError("empty successor list: " + s);
        if (rows.count(id)) throw ParseError("duplicate vertex id " + std::to_string(id));
        rows[id] = std::move(row);
    }
    if (!header) throw ParseError("missing arena header");
    Arena::Builder b(name, maxcolor);
    std::size_t expect = 0;
    for (auto& [id, row] : rows) {
        if (id != expect++)
            throw ParseError("vertex ids must cover 0..n-1; missing " +
                             std::to_string(expect - 1));
        b.add_vertex(row.owner, row.color);
    }
    for (auto& [id, row] : rows)
        for (auto t : row.succ) {
            if (t >= rows.size()) throw ParseError("edge target out of range");
            b.edge(id, t);
        }
    return b.build();
}

inline Arena parse_arena(const std::string& text) {
    std::istringstream in(text);
    return parse_arena(in);
}

inline void print_arena(std::ostream& out, const Arena& a) {
    out << "arena " << (a.name().empty() ? "unnamed" : a.name()) << " maxcolor " << a.max_color()
        << "\n";
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        out << v << ' ' << (a.owner(v) == Player::Eve ? 'E' : 'A') << ' ' << a.color(v) << ' ';
        auto succ = a.successors(v);
        for (std::size_t k = 0; k < succ.size(); ++k) out << (k ? "," : "") << succ[k];
        out << "\n";
    }
}

inline std::string arena_to_string(const Arena& a) {
    std::ostringstream os;
    print_arena(os, a);
    return os.str();
}

/// DOT export following the paper's drawing conventions: Eve circles, Adam
/// squares, Büchi vertices double-circled, colors as labels.
inline void print_dot(std::ostream& out, const Arena& a) {
    out << "digraph \"" << a.name() << "\" {\n";
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        bool buchi = a.max_color() == 1 && a.color(v) == 0;
        out << "  v" << v << " [shape=" << (a.owner(v) == Player::Eve ? "circle" : "box")
            << (buchi ? ", peripheries=2" : "") << ", label=\"" << v << ":" << a.color(v)
            << "\"];\n";
    }
    for (std::size_t v = 0; v < a.num_vertices(); ++v)
        for (auto t : a.successors(v)) out << "  v" << v << " -> v" << t << ";\n";
    out << "}\n";
}

// ---------------------------------------------------------------------------
// Strategy blocks
//
//   strategy E positional: 0->2 5->5
//   strategy A memory 3:
//   init 0->1
//   next (0,0)->2
//   update (0,1->2)->0
// ---------------------------------------------------------------------------

inline void print_strategy(std::ostream& out, const Strategy& s, const Arena& a) {
    char pl = s.player == Player::Eve ? 'E' : 'A';
    if (s.positional) {
        out << "strategy " << pl << " positional:";
        for (std::size_t v = 0; v < s.move.size(); ++v)
            if (s.move[v] != Strategy::npos) out << ' ' << v << "->" << s.move[v];
        out << "\n";
        return;
    }
    out << "strategy " << pl << " memory " << s.memory.states << ":\n";
    for (std::size_t v = 0; v < s.memory.initial.size(); ++v)
        out << "init " << v << "->" << s.memory.initial[v] << "\n";
    for (std::size_t v = 0; v < a.num_vertices(); ++v)
        for (int m = 0; m < s.memory.states; ++m)
            if (s.move_at(v, m) != Strategy::npos)
                out << "next (" << v << "," << m << ")->" << s.move_at(v, m) << "\n";
    for (int m = 0; m < s.memory.states; ++m)
        for (std::size_t v = 0; v < a.num_vertices(); ++v) {
            auto succ = a.successors(v);
            for (std::size_t k = 0; k < succ.size(); ++k)
                out << "update (" << m << "," << v << "->" << succ[k] << ")->"
                    << s.memory.next(m, a.edge_slot(v, k)) << "\n";
        }
}

inline Strategy parse_strategy(std::istream& in, const Arena& a) {
    std::string line;
    Strategy s;
    bool seen_header = false;
    while (std::getline(in, line)) {
        std::string t = strip_comment(line);
        if (t.empty()) continue;
        std::istringstream ls(t);
        std::string kw;
        ls >> kw;
        if (kw == "strategy") {
            std::string pl, kind;
            ls >> pl >> kind;
            Player player = pl == "E" ? Player::Eve : Player::Adam;
            if (kind == "positional:") {
                s = Strategy::make_positional(player, a.num_vertices());
                std::string pair;
                while (ls >> pair) {
                    auto arrow = pair.find("->");
                    if (arrow == std::string::npos) throw ParseError("bad move: " + pair);
                    s.move[std::stoul(pair.substr(0, arrow))] = std::stoul(pair.substr(arrow + 2));
                }
            } else if (kind == "memory") {
                int k;
                ls >> k;
                MemoryStructure mem;
                mem.states = k;
                mem.num_edges = a.num_edges();
                mem.initial.assign(a.num_vertices(), 0);
                mem.update.assign(std::size_t(k) * a.num_edges(), 0);
                s = Strategy::make_finite_memory(player, a.num_vertices(), std::move(mem));
            } else {
                throw ParseError("bad strategy kind: " + kind);
            }
            seen_header = true;
        } else if (kw == "init") {
            std::string rest;
            ls >> rest;
            auto arrow = rest.find("->");
            s.memory.initial.at(std::stoul(rest.substr(0, arrow))) =
                std::stoi(rest.substr(arrow + 2));
        } else if (kw == "next") {
            std::string rest;
            ls >> rest;
            // (v,m)->t
            auto comma = rest.find(',');
            auto close = rest.find(')');
            auto arrow = rest.find("->", close);
            std::size_t v = std::stoul(rest.substr(1, comma - 1));
            int m = std::stoi(rest.substr(comma + 1, close - comma - 1));
            s.set_move(v, m, std::stoul(rest.substr(arrow + 2)));
        } else if (kw == "update") {
            std::string rest;
            ls >> rest;
            // (m,u->v)->m'
            auto comma = rest.find(',');
            auto arrow1 = rest.find("->", comma);
            auto close = rest.find(')', arrow1);
            auto arrow2 = rest.find("->", close);
            int m = std::stoi(rest.substr(1, comma - 1));
            std::size_t u = std::stoul(rest.substr(comma + 1, arrow1 - comma - 1));
            std::size_t v = std::stoul(rest.substr(arrow1 + 2, close - arrow1 - 2));
            int m2 = std::stoi(rest.substr(arrow2 + 2));
            std::size_t slot = a.find_edge_slot(u, v);
            if (slot == a.num_edges()) throw ParseError("update row on a non-edge");
            auto succ = a.successors(u);
            for (std::size_t kk = 0; kk < succ.size(); ++kk)
                if (succ[kk] == v) s.memory.at(m, a.edge_slot(u, kk)) = m2;
        } else {
            throw ParseError("unexpected line in strategy file: " + t);
        }
    }
    if (!seen_header) throw ParseError("missing strategy header");
    return s;
}

// ---------------------------------------------------------------------------
// Regions, results, verdicts
// ---------------------------------------------------------------------------

inline void print_region_line(std::ostream& out, char player, const VertexSet& r) {
    out << "region " << player << ":";
    for (auto v : r.elements()) out << ' ' << v;
    out << "\n";
}

inline void print_solve_result(std::ostream& out, const SolveResult& r, const Arena& a) {
    print_region_line(out, 'E', r.eve_region);
    print_region_line(out, 'A', r.adam_region);
    if (r.eve_strategy) print_strategy(out, *r.eve_strategy, a);
    if (r.adam_strategy) print_strategy(out, *r.adam_strategy, a);
}

inline void print_verdict(std::ostream& out, const Verdict& v) {
    if (v.holds) {
        out << "HOLDS\n";
        return;
    }
    out << "FAILS stem=";
    for (std::size_t i = 0; i < v.stem.size(); ++i) out << (i ? "," : "") << v.stem[i];
    out << " cycle=";
    for (std::size_t i = 0; i < v.cycle.size(); ++i) out << (i ? "," : "") << v.cycle[i];
    out << " witness=" << (v.witness_pos == Verdict::npos ? -1 : long(v.witness_pos)) << ","
        << v.witness_value << "\n";
}

} // namespace finitary
