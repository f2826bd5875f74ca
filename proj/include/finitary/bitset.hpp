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

#include <cassert>
#include <cstdint>
#include <vector>

namespace finitary {

/// Fixed-size dynamic bitset over vertex indices. This is the VertexSet
/// representation used by every fixpoint in the library: dense integer
/// vertices, word-parallel union/intersection, cheap popcount.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const {
        assert(i < size_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(std::size_t i) {
        assert(i < size_);
        words_[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
    void reset(std::size_t i) {
        assert(i < size_);
        words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t(0);
        trim();
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::size_t(__builtin_popcountll(w));
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const { return !empty(); }

    VertexSet& operator|=(const VertexSet& o) {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet r(size_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool operator==(const VertexSet& o) const {
        return size_ == o.size_ && words_ == o.words_;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    /// a ⊆ b
    bool subset_of(const VertexSet& o) const {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    std::vector<std::size_t> elements() const {
        std::vector<std::size_t> r;
        r.reserve(count());
        for (std::size_t i = 0; i < size_; ++i)
            if (test(i)) r.push_back(i);
        return r;
    }

    static VertexSet of(std::size_t n, std::initializer_list<std::size_t> elems) {
        VertexSet s(n);
        for (auto e : elems) s.set(e);
        return s;
    }

private:
    void trim() {
        if (size_ & 63) words_.back() &= (std::uint64_t(1) << (size_ & 63)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace finitary
