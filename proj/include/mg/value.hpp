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

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace mg {

/**
 * A point in the linearly ordered value set of a valuation.
 *
 * Two kinds are supported: qualitative (win < lose, from Eve's point of
 * view, the minimizer) and numeric (0 < 1 < ... < infinity, used by the
 * energy and backward-counter valuations). Values of different kinds are
 * never comparable; mixing them is a programming error and throws.
 */
class Value {
public:
    enum class Kind : uint8_t { qualitative, numeric };

    static Value win() { return Value(Kind::qualitative, 0, false); }
    static Value lose() { return Value(Kind::qualitative, 1, false); }
    static Value number(long long n)
    {
        if (n < 0) throw std::invalid_argument("Value::number: negative");
        return Value(Kind::numeric, n, false);
    }
    static Value infinity() { return Value(Kind::numeric, 0, true); }

    Kind kind() const { return kind_; }
    bool is_qualitative() const { return kind_ == Kind::qualitative; }
    bool is_win() const { return is_qualitative() && n_ == 0; }
    bool is_lose() const { return is_qualitative() && n_ == 1; }
    bool is_infinite() const { return kind_ == Kind::numeric && inf_; }

    long long finite() const
    {
        if (kind_ != Kind::numeric || inf_)
            throw std::logic_error("Value::finite: not a finite number");
        return n_;
    }

    friend bool operator==(const Value& a, const Value& b)
    {
        return a.kind_ == b.kind_ && a.inf_ == b.inf_ && (a.inf_ || a.n_ == b.n_);
    }
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

    friend bool operator<(const Value& a, const Value& b)
    {
        if (a.kind_ != b.kind_)
            throw std::logic_error("Value: comparing values of different kinds");
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.n_ < b.n_;
    }
    friend bool operator<=(const Value& a, const Value& b) { return a < b || a == b; }
    friend bool operator>(const Value& a, const Value& b) { return b < a; }
    friend bool operator>=(const Value& a, const Value& b) { return b <= a; }

    std::string str() const
    {
        if (is_qualitative()) return n_ == 0 ? "win" : "lose";
        if (inf_) return "inf";
        return std::to_string(n_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Value& v)
    {
        return os << v.str();
    }

private:
    Value(Kind k, long long n, bool inf) : kind_(k), n_(n), inf_(inf) {}

    Kind kind_;
    long long n_;
    bool inf_;
};

inline Value value_max(const Value& a, const Value& b) { return a < b ? b : a; }
inline Value value_min(const Value& a, const Value& b) { return b < a ? b : a; }

} // namespace mg
