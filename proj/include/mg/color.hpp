/*
 * Copyright 2026 the mgsolve authors
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

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>

namespace mg {

/// Named tokens of the qualitative alphabets.
enum class Sym : uint8_t { safe, bad, good, wait, imm, eps };

inline const char* sym_name(Sym s)
{
    switch (s) {
    case Sym::safe: return "safe";
    case Sym::bad: return "bad";
    case Sym::good: return "good";
    case Sym::wait: return "wait";
    case Sym::imm: return "imm";
    case Sym::eps: return "eps";
    }
    return "?";
}

/**
 * An edge color. Three payload kinds cover all built-in valuations:
 * named symbols for the qualitative alphabets, integers for energy
 * weights and parity priorities, and capped affine maps
 * n |-> min(cap, mul*n + add) for the counter games.
 *
 * Colors order lexicographically on (kind, payload), which gives every
 * edge set a canonical order.
 */
class Color {
public:
    enum class Kind : uint8_t { symbol, number, map };

    static Color symbol(Sym s) { return Color(Kind::symbol, (long long)s, 0, 0); }
    static Color number(long long n) { return Color(Kind::number, n, 0, 0); }
    static Color map(long long mul, long long add, long long cap)
    {
        return Color(Kind::map, mul, add, cap);
    }
    static Color eps() { return symbol(Sym::eps); }

    Kind kind() const { return kind_; }
    bool is_symbol(Sym s) const { return kind_ == Kind::symbol && a_ == (long long)s; }
    bool is_eps() const { return is_symbol(Sym::eps); }
    Sym sym() const { return (Sym)a_; }
    long long num() const { return a_; }
    long long map_mul() const { return a_; }
    long long map_add() const { return b_; }
    long long map_cap() const { return c_; }

    /// Applies the affine counter map; callers guarantee kind()==map.
    long long apply(long long n) const
    {
        // inputs stay within [0, cap], so no overflow with 64-bit math
        long long r = a_ * n + b_;
        return r < c_ ? r : c_;
    }

    std::string str() const
    {
        switch (kind_) {
        case Kind::symbol: return sym_name((Sym)a_);
        case Kind::number: return std::to_string(a_);
        case Kind::map:
            return "f:" + std::to_string(a_) + "," + std::to_string(b_);
        }
        return "?";
    }

    friend auto operator<=>(const Color&, const Color&) = default;

private:
    Color(Kind k, long long a, long long b, long long c)
        : kind_(k), a_(a), b_(b), c_(c)
    {
    }

    Kind kind_;
    long long a_, b_, c_;
};

} // namespace mg
