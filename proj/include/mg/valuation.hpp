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

#include <memory>
#include <string>
#include <vector>

#include "mg/color.hpp"
#include "mg/value.hpp"

namespace mg {

/**
 * A closed description of a valuation: one of the built-ins with its
 * parameters, optionally extended with the strongly neutral color eps,
 * or a lexicographic product of two such descriptions.
 *
 * Spec string grammar:
 *   safety | immvar | reach | buchi | cobuchi | parity:<h>
 *   | energy[:<cap>] | backsup:<cap> | bounded:<N>
 *   | product(<spec>,<spec>)
 * each optionally followed by "+eps". An unsized energy spec is sized
 * to the arena when solving.
 *
 * prio_cobuchi(i) is the co-Buchi objective over priorities {2i, 2i+1}
 * (win iff 2i+1 occurs finitely often); it is what parity factors into.
 */
class ValuationSpec {
public:
    enum class Kind : uint8_t {
        safety,
        imm_variant,
        reachability,
        buchi,
        cobuchi,
        parity,
        energy,
        backward_sup,
        bounded,
        prio_cobuchi,
        lex_product,
    };

    static ValuationSpec safety() { return ValuationSpec(Kind::safety); }
    static ValuationSpec imm_variant() { return ValuationSpec(Kind::imm_variant); }
    static ValuationSpec reachability() { return ValuationSpec(Kind::reachability); }
    static ValuationSpec buchi() { return ValuationSpec(Kind::buchi); }
    static ValuationSpec cobuchi() { return ValuationSpec(Kind::cobuchi); }
    static ValuationSpec parity(int h);
    static ValuationSpec energy(long long cap);
    static ValuationSpec backward_sup(long long cap);
    static ValuationSpec bounded(long long n);
    static ValuationSpec prio_cobuchi(int i);
    static ValuationSpec lex_product(ValuationSpec first, ValuationSpec second);

    /// Parses the spec grammar above; throws std::runtime_error on error.
    static ValuationSpec parse(const std::string& text);

    ValuationSpec with_eps() const;

    Kind kind() const { return kind_; }
    bool eps() const { return eps_; }
    int half_priorities() const { return h_; }
    long long cap() const { return cap_; }
    long long bound() const { return cap_; }
    int prio_index() const { return h_; }
    const ValuationSpec& first() const { return *first_; }
    const ValuationSpec& second() const { return *second_; }

    /// win/lose valued (everything except energy and backward_sup).
    bool qualitative() const;
    bool prefix_invariant() const;
    bool prefix_increasing() const;
    /// Uses capped affine map colors.
    bool counter_based() const;

    /// Closed color alphabet; energy and counter kinds have open
    /// alphabets (any weight / any capped affine map) and return only
    /// the eps color when extended.
    std::vector<Color> alphabet() const;
    bool has_closed_alphabet() const;

    /// Whether the color may appear under this valuation.
    bool admits(const Color& c) const;

    /// Caps a raw map color parsed from a game file (see arena.cpp):
    /// cap for backsup, N+1 for bounded.
    long long map_cap() const;

    /// Worst value of the kind: lose or infinity.
    Value top_value() const;
    Value bottom_value() const;

    std::string str() const;

    bool operator==(const ValuationSpec& o) const;

private:
    explicit ValuationSpec(Kind k) : kind_(k) {}

    Kind kind_;
    bool eps_ = false;
    int h_ = 0;           // parity half-priorities / prio_cobuchi index
    long long cap_ = 0;   // energy & backward_sup cap, bounded N
    std::shared_ptr<const ValuationSpec> first_, second_;
};

/// Finite representation u.v^omega of an ultimately periodic coloration.
struct Lasso {
    std::vector<Color> stem;
    std::vector<Color> cycle; // nonempty

    Lasso() = default;
    Lasso(std::vector<Color> u, std::vector<Color> v);
};

} // namespace mg
