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

#include <optional>
#include <stdexcept>
#include <string>

#include "finitary/bitset.hpp"

namespace finitary {

/// Winning conditions over plays. Distances follow the request/response
/// reading: dist_k is the number of steps from position k to the next color
/// that is even and no larger than the color at k.
///
///   Safety(S)            stay in S forever
///   Buchi(F)             infinitely many visits to F
///   CoBuchi(F)           finitely many visits to F
///   Parity(c)            lowest color seen infinitely often is even
///   BndUniformBuchi(F,N) sup_k  dist_k(pi,F) <= N
///   UniformBuchi(F,N)    limsup dist_k(pi,F) <= N
///   FinitaryBuchi(F)     limsup dist_k(pi,F) < inf
///   BndParity(c)         sup_k  dist_k(pi,c) < inf
///   FinitaryParity(c)    limsup dist_k(pi,c) < inf
///   BndUniformParity(c,N) sup_k dist_k(pi,c) <= N   (used by example checks)
enum class ConditionKind {
    Safety,
    Buchi,
    CoBuchi,
    Parity,
    BndUniformBuchi,
    UniformBuchi,
    FinitaryBuchi,
    BndParity,
    FinitaryParity,
    BndUniformParity,
};

struct Condition {
    ConditionKind kind;
    VertexSet set;   // S or F for the set-based kinds; unused for parity kinds
    long bound = -1; // N for the uniform kinds

    static Condition safety(VertexSet s) { return {ConditionKind::Safety, std::move(s), -1}; }
    static Condition buchi(VertexSet f) { return {ConditionKind::Buchi, std::move(f), -1}; }
    static Condition cobuchi(VertexSet f) { return {ConditionKind::CoBuchi, std::move(f), -1}; }
    static Condition parity() { return {ConditionKind::Parity, VertexSet(), -1}; }
    static Condition bnd_uniform_buchi(VertexSet f, long n) {
        return {ConditionKind::BndUniformBuchi, std::move(f), n};
    }
    static Condition uniform_buchi(VertexSet f, long n) {
        return {ConditionKind::UniformBuchi, std::move(f), n};
    }
    static Condition finitary_buchi(VertexSet f) {
        return {ConditionKind::FinitaryBuchi, std::move(f), -1};
    }
    static Condition bnd_parity() { return {ConditionKind::BndParity, VertexSet(), -1}; }
    static Condition finitary_parity() { return {ConditionKind::FinitaryParity, VertexSet(), -1}; }
    static Condition bnd_uniform_parity(long n) {
        return {ConditionKind::BndUniformParity, VertexSet(), n};
    }

    bool uses_set() const {
        switch (kind) {
            case ConditionKind::Safety:
            case ConditionKind::Buchi:
            case ConditionKind::CoBuchi:
            case ConditionKind::BndUniformBuchi:
            case ConditionKind::UniformBuchi:
            case ConditionKind::FinitaryBuchi:
                return true;
            default:
                return false;
        }
    }
    bool uses_bound() const {
        return kind == ConditionKind::BndUniformBuchi || kind == ConditionKind::UniformBuchi ||
               kind == ConditionKind::BndUniformParity;
    }
};

inline std::string condition_name(ConditionKind k) {
    switch (k) {
        case ConditionKind::Safety: return "safety";
        case ConditionKind::Buchi: return "buchi";
        case ConditionKind::CoBuchi: return "cobuchi";
        case ConditionKind::Parity: return "parity";
        case ConditionKind::BndUniformBuchi: return "bnd-uniform-buchi";
        case ConditionKind::UniformBuchi: return "uniform-buchi";
        case ConditionKind::FinitaryBuchi: return "finitary-buchi";
        case ConditionKind::BndParity: return "bnd-parity";
        case ConditionKind::FinitaryParity: return "finitary-parity";
        case ConditionKind::BndUniformParity: return "bnd-uniform-parity";
    }
    return "?";
}

inline std::optional<ConditionKind> condition_from_name(const std::string& s) {
    for (ConditionKind k :
         {ConditionKind::Safety, ConditionKind::Buchi, ConditionKind::CoBuchi,
          ConditionKind::Parity, ConditionKind::BndUniformBuchi, ConditionKind::UniformBuchi,
          ConditionKind::FinitaryBuchi, ConditionKind::BndParity, ConditionKind::FinitaryParity,
          ConditionKind::BndUniformParity})
        if (condition_name(k) == s) return k;
    return std::nullopt;
}

} // namespace finitary
