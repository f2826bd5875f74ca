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

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "finitary/arena.hpp"
#include "finitary/io.hpp"

namespace finitary {

/// Stack symbols are small indices into the process alphabet; the bottom
/// marker is not part of the alphabet and is never pushed nor popped.
constexpr int kBottom = -1;

enum class StackOp : unsigned char { Push, Pop, Skip };

struct PdTransition {
    std::size_t from;
    StackOp op;
    int trigger;   // required top symbol; kBottom allowed for Push/Skip
    int push_sym;  // for Push
    std::size_t to;
};

/// A pushdown process: finite control with owners and colors, a stack
/// alphabet, and push/pop/skip transitions guarded by the top symbol.
struct PushdownProcess {
    std::string name;
    int max_color = 1;
    std::vector<std::string> state_names;
    std::vector<Player> owner;
    std::vector<int> color;
    std::vector<std::string> symbol_names;  // single characters in the text format
    std::vector<PdTransition> transitions;

    std::size_t num_states() const { return state_names.size(); }
    std::size_t alphabet_size() const { return symbol_names.size(); }

    std::size_t add_state(std::string n, Player p, int c) {
        state_names.push_back(std::move(n));
        owner.push_back(p);
        color.push_back(c);
        return state_names.size() - 1;
    }
    int add_symbol(std::string n) {
        for (std::size_t i = 0; i < symbol_names.size(); ++i)
            if (symbol_names[i] == n) return int(i);
        symbol_names.push_back(std::move(n));
        return int(symbol_names.size()) - 1;
    }
    int symbol(const std::string& n) const {
        for (std::size_t i = 0; i < symbol_names.size(); ++i)
            if (symbol_names[i] == n) return int(i);
        return kBottom;
    }
    std::size_t state(const std::string& n) const {
        for (std::size_t i = 0; i < state_names.size(); ++i)
            if (state_names[i] == n) return i;
        throw std::out_of_range("unknown state " + n);
    }

    void push(std::size_t p, int trigger, int sym, std::size_t q) {
        transitions.push_back({p, StackOp::Push, trigger, sym, q});
    }
    void pop(std::size_t p, int sym, std::size_t q) {
        transitions.push_back({p, StackOp::Pop, sym, kBottom, q});
    }
    void skip(std::size_t p, int trigger, std::size_t q) {
        transitions.push_back({p, StackOp::Skip, trigger, kBottom, q});
    }
    /// convenience: one transition per possible top (alphabet plus bottom)
    void push_any(std::size_t p, int sym, std::size_t q) {
        for (int t = kBottom; t < int(alphabet_size()); ++t) push(p, t, sym, q);
    }
    void skip_any(std::size_t p, std::size_t q) {
        for (int t = kBottom; t < int(alphabet_size()); ++t) skip(p, t, q);
    }
};

/// A configuration (q, u bot); the top stack symbol is the first entry of u.
struct Configuration {
    std::size_t state = 0;
    std::vector<int> stack;  // top first, bottom marker implicit

    int top() const { return stack.empty() ? kBottom : stack.front(); }
    std::size_t height() const { return stack.size(); }

    bool operator==(const Configuration& o) const {
        return state == o.state && stack == o.stack;
    }
    bool operator<(const Configuration& o) const {
        if (state != o.state) return state < o.state;
        return stack < o.stack;
    }
};

inline bool applies(const PdTransition& t, const Configuration& c) {
    if (t.op == StackOp::Pop) return c.top() == t.trigger && t.trigger != kBottom;
    return c.top() == t.trigger;
}

inline Configuration apply(const PdTransition& t, const Configuration& c) {
    Configuration r = c;
    r.state = t.to;
    switch (t.op) {
        case StackOp::Push: r.stack.insert(r.stack.begin(), t.push_sym); break;
        case StackOp::Pop: r.stack.erase(r.stack.begin()); break;
        case StackOp::Skip: break;
    }
    return r;
}

/// All one-step successors of a configuration (empty when stuck).
inline std::vector<Configuration> successors(const PushdownProcess& p, const Configuration& c) {
    std::vector<Configuration> r;
    for (auto& t : p.transitions)
        if (t.from == c.state && applies(t, c)) r.push_back(apply(t, c));
    return r;
}

// ---------------------------------------------------------------------------
// Text format
//
//   pushdown <name> maxcolor <d>
//   state <q> <E|A> <color>
//   trans <p> <top|-> push <b> <q>
//   trans <p> pop <a> <q>
//   trans <p> <top|-> skip <q>
//
// '-' stands for the bottom marker. Configurations print as q:u⊥ with the
// top of the stack leftmost.
// ---------------------------------------------------------------------------

inline PushdownProcess parse_pushdown(std::istream& in) {
    PushdownProcess p;
    std::string line;
    bool header = false;
    auto sym_of = [&](const std::string& s) -> int {
        if (s == "-") return kBottom;
        if (s.size() != 1)
            throw ParseError("stack symbols must be single characters: " + s);
        return p.add_symbol(s);
    };
    while (std::getline(in, line)) {
        std::string s = strip_comment(line);
        if (s.empty()) continue;
        std::istringstream ls(s);
        std::string kw;
        ls >> kw;
        if (!header) {
            if (kw != "pushdown") throw ParseError("expected 'pushdown' header: " + s);
            std::string mc;
            ls >> p.name >> mc >> p.max_color;
            if (mc != "maxcolor" || p.max_color < 1)
                throw ParseError("malformed pushdown header: " + s);
            header = true;
            continue;
        }
        if (kw == "state") {
            std::string n, o;
            int c;
            if (!(ls >> n >> o >> c)) throw ParseError("malformed state line: " + s);
            if (o != "E" && o != "A") throw ParseError("owner must be E or A: " + s);
            p.add_state(n, o == "E" ? Player::Eve : Player::Adam, c);
        } else if (kw == "trans") {
            std::string from, a, b;
            if (!(ls >> from >> a >> b)) throw ParseError("malformed trans line: " + s);
            if (a == "pop") {
                std::string to;
                if (!(ls >> to)) throw ParseError("malformed pop line: " + s);
                int sym = sym_of(b);
                if (sym == kBottom) throw ParseError("bottom is never popped: " + s);
                p.pop(p.state(from), sym, p.state(to));
            } else if (b == "push") {
                std::string sym, to;
                if (!(ls >> sym >> to)) throw ParseError("malformed push line: " + s);
                int ps = sym_of(sym);
                if (ps == kBottom) throw ParseError("bottom is never pushed: " + s);
                p.push(p.state(from), sym_of(a), ps, p.state(to));
            } else if (b == "skip") {
                std::string to;
                if (!(ls >> to)) throw ParseError("malformed skip line: " + s);
                p.skip(p.state(from), sym_of(a), p.state(to));
            } else {
                throw ParseError("unknown transition kind: " + s);
            }
        } else {
            throw ParseError("unexpected line: " + s);
        }
    }
    if (!header) throw ParseError("missing pushdown header");
    return p;
}

inline PushdownProcess parse_pushdown(const std::string& text) {
    std::istringstream in(text);
    return parse_pushdown(in);
}

inline void print_pushdown(std::ostream& out, const PushdownProcess& p) {
    out << "pushdown " << (p.name.empty() ? "unnamed" : p.name) << " maxcolor " << p.max_color
        << "\n";
    for (std::size_t q = 0; q < p.num_states(); ++q)
        out << "state " << p.state_names[q] << ' ' << (p.owner[q] == Player::Eve ? 'E' : 'A')
            << ' ' << p.color[q] << "\n";
    for (auto& t : p.transitions) {
        out << "trans " << p.state_names[t.from] << ' ';
        switch (t.op) {
            case StackOp::Push:
                out << (t.trigger == kBottom ? "-" : p.symbol_names[t.trigger]) << " push "
                    << p.symbol_names[t.push_sym];
                break;
            case StackOp::Pop: out << "pop " << p.symbol_names[t.trigger]; break;
            case StackOp::Skip:
                out << (t.trigger == kBottom ? "-" : p.symbol_names[t.trigger]) << " skip";
                break;
        }
        out << ' ' << p.state_names[t.to] << "\n";
    }
}

inline std::string pushdown_to_string(const PushdownProcess& p) {
    std::ostringstream os;
    print_pushdown(os, p);
    return os.str();
}

inline std::string config_to_string(const PushdownProcess& p, const Configuration& c) {
    std::string s = p.state_names[c.state] + ":";
    for (auto sym : c.stack) s += p.symbol_names[sym];
    s += "⊥";
    return s;
}

inline Configuration parse_config(const PushdownProcess& p, const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("configuration must be q:stack");
    Configuration c;
    c.state = p.state(text.substr(0, colon));
    std::string stack = text.substr(colon + 1);
    const std::string bot = "⊥";
    if (stack.size() >= bot.size() && stack.substr(stack.size() - bot.size()) == bot)
        stack.resize(stack.size() - bot.size());
    for (char ch : stack) {
        int sym = p.symbol(std::string(1, ch));
        if (sym == kBottom) throw ParseError(std::string("unknown stack symbol ") + ch);
        c.stack.push_back(sym);
    }
    return c;
}

} // namespace finitary
