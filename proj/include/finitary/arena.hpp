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

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "finitary/bitset.hpp"

namespace finitary {

enum class Player : unsigned char { Eve = 0, Adam = 1 };

inline Player opponent(Player p) {
    return p == Player::Eve ? Player::Adam : Player::Eve;
}

struct ArenaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by restrict_to when the vertex set does not induce a subarena.
struct NotASubarena : ArenaError {
    explicit NotASubarena(std::vector<std::size_t> bad)
        : ArenaError("vertex set does not induce a subarena"), offending(std::move(bad)) {}
    std::vector<std::size_t> offending;
};

/// A finite game arena: dense integer vertices, an owner per vertex, ordered
/// successor lists (CSR layout) and a coloring into [0..d]. The Büchi set is
/// the color-0 set when d = 1.
class Arena {
public:
    Arena() = default;

    std::size_t num_vertices() const { return owner_.size(); }
    std::size_t num_edges() const { return targets_.size(); }
    int max_color() const { return max_color_; }
    const std::string& name() const { return name_; }

    Player owner(std::size_t v) const { return owner_[v]; }
    int color(std::size_t v) const { return color_[v]; }

    std::span<const std::size_t> successors(std::size_t v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::size_t outdegree(std::size_t v) const { return offsets_[v + 1] - offsets_[v]; }

    /// Flattened index of the k-th outgoing edge of v; keys memory updates.
    std::size_t edge_slot(std::size_t v, std::size_t k) const { return offsets_[v] + k; }
    std::size_t first_edge_slot(std::size_t v) const { return offsets_[v]; }

    /// Slot of edge (u,v'); the first slot is returned for parallel edges.
    /// Returns num_edges() if the edge does not exist.
    std::size_t find_edge_slot(std::size_t u, std::size_t target) const {
        auto succ = successors(u);
        for (std::size_t k = 0; k < succ.size(); ++k)
            if (succ[k] == target) return edge_slot(u, k);
        return num_edges();
    }

    bool has_edge(std::size_t u, std::size_t v) const {
        return find_edge_slot(u, v) != num_edges();
    }

    /// F = color^{-1}(0); the Büchi set by convention when d = 1.
    VertexSet buchi_set() const { return color_set(0); }

    VertexSet color_set(int c) const {
        VertexSet s(num_vertices());
        for (std::size_t v = 0; v < num_vertices(); ++v)
            if (color_[v] == c) s.set(v);
        return s;
    }

    VertexSet owned_by(Player p) const {
        VertexSet s(num_vertices());
        for (std::size_t v = 0; v < num_vertices(); ++v)
            if (owner_[v] == p) s.set(v);
        return s;
    }

    VertexSet full_set() const {
        VertexSet s(num_vertices());
        s.set_all();
        return s;
    }
    VertexSet empty_set() const { return VertexSet(num_vertices()); }

    /// Same graph with the owner partition swapped; colors untouched.
    Arena owner_swapped() const {
        Arena a(*this);
        for (auto& o : a.owner_) o = opponent(o);
        a.name_ = name_ + "~swap";
        return a;
    }

    /// Builder: add vertices, then edges, then freeze.
    class Builder {
    public:
        explicit Builder(std::string name = "", int max_color = 1)
            : name_(std::move(name)), max_color_(max_color) {}

        std::size_t add_vertex(Player owner, int color) {
            owner_.push_back(owner);
            color_.push_back(color);
            succ_.emplace_back();
            return owner_.size() - 1;
        }
        Builder& edge(std::size_t from, std::size_t to) {
            succ_.at(from).push_back(to);
            return *this;
        }
        Arena build() const {
            Arena a;
            a.name_ = name_;
            a.max_color_ = max_color_;
            a.owner_ = owner_;
            a.color_ = color_;
            a.offsets_.assign(1, 0);
            for (auto& s : succ_) {
                a.targets_.insert(a.targets_.end(), s.begin(), s.end());
                a.offsets_.push_back(a.targets_.size());
            }
            return a;
        }

    private:
        std::string name_;
        int max_color_;
        std::vector<Player> owner_;
        std::vector<int> color_;
        std::vector<std::vector<std::size_t>> succ_;
    };

private:
    friend class Builder;

    std::string name_;
    int max_color_ = 1;
    std::vector<Player> owner_;
    std::vector<int> color_;
    std::vector<std::size_t> offsets_{0};
    std::vector<std::size_t> targets_;
};

/// One finding of validate(); empty report means all invariants hold.
struct ValidationIssue {
    enum Kind { DeadEnd, DanglingEdge, ColorOutOfRange } kind;
    std::size_t vertex;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::vector<std::size_t> dead_ends() const {
        std::vector<std::size_t> r;
        for (auto& i : issues)
            if (i.kind == ValidationIssue::DeadEnd) r.push_back(i.vertex);
        return r;
    }
};

inline ValidationReport validate(const Arena& a) {
    ValidationReport rep;
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        if (a.outdegree(v) == 0)
            rep.issues.push_back({ValidationIssue::DeadEnd, v,
                                  "vertex " + std::to_string(v) + " has no successor"});
        for (auto t : a.successors(v))
            if (t >= a.num_vertices())
                rep.issues.push_back({ValidationIssue::DanglingEdge, v,
                                      "edge from " + std::to_string(v) + " to out-of-range " +
                                          std::to_string(t)});
        if (a.color(v) < 0 || a.color(v) > a.max_color())
            rep.issues.push_back({ValidationIssue::ColorOutOfRange, v,
                                  "vertex " + std::to_string(v) + " has color " +
                                      std::to_string(a.color(v)) + " outside [0.." +
                                      std::to_string(a.max_color()) + "]"});
    }
    return rep;
}

/// Result of restricting an arena to a subarena-inducing vertex set.
struct Restriction {
    Arena arena;
    std::vector<std::size_t> to_base;           // new index -> old index
    std::vector<std::size_t> from_base;         // old index -> new index (or npos)
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// A[U]: keeps exactly the vertices of U and the edges inside U. Every vertex
/// of U must keep at least one successor, otherwise NotASubarena is thrown
/// listing the offending vertices.
inline Restriction restrict_to(const Arena& a, const VertexSet& u) {
    std::vector<std::size_t> bad;
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        if (!u.test(v)) continue;
        bool has = false;
        for (auto t : a.successors(v))
            if (u.test(t)) { has = true; break; }
        if (!has) bad.push_back(v);
    }
    if (!bad.empty()) throw NotASubarena(std::move(bad));

    Restriction r;
    r.from_base.assign(a.num_vertices(), Restriction::npos);
    Arena::Builder b(a.name() + "[.]", a.max_color());
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        if (!u.test(v)) continue;
        r.from_base[v] = r.to_base.size();
        r.to_base.push_back(v);
        b.add_vertex(a.owner(v), a.color(v));
    }
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        if (!u.test(v)) continue;
        for (auto t : a.successors(v))
            if (u.test(t)) b.edge(r.from_base[v], r.from_base[t]);
    }
    r.arena = b.build();
    return r;
}

} // namespace finitary
